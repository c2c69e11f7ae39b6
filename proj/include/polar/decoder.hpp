#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polar/exec.hpp"
#include "polar/paths.hpp"

namespace polar {

struct DecodeOutput {
    Message message;              // decided bits over spec.info order
    Codeword reencoded;           // equals encode_plotkin(spec, message)
    std::vector<double> leaf_llr; // L at every leaf, by path index
    std::vector<uint8_t> leaf_bits;
    uint64_t combine_ops = 0;     // always n * m
};

// Depth-first successive cancellation: the v-extension (path bit 1) is
// decoded before the u-extension at every node. Frozen leaves decide 0
// unconditionally; L = 0 at an information leaf also decides 0.
DecodeOutput sc_decode(const CodeSpec& spec, const std::vector<double>& llr);

// Brute-force marginal Pr{f_target = 0 | llr, decided}: exact sum over all
// assignments of the not-yet-decided path bits (uniform prior), conditioned
// on the decided bits. `decided` must hold exactly the paths visited before
// `target` in traversal order, i.e. all paths with a larger index.
// Enumerates 2^(target_index + 1) assignments; independent of the decoder.
double exact_leaf_posterior(const CodeSpec& spec, const std::vector<double>& llr,
                            const Path& target,
                            const std::vector<std::pair<Path, uint8_t>>& decided);

struct GenieReport {
    int m = 0;
    double epsilon = 0.0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    struct Row {
        Path path;
        uint64_t errors = 0;
        double rate = 0.0;
        double a = 0.0; // scalar-recursion moments of the path
        double b = 0.0;
        double z = 0.0; // sqrt(B)
        double sigma = 0.0;
        bool z_bound_ok = false; // rate <= Z + 5 sigma
        bool b_bound_ok = false; // rate <= B + 5 sigma
    };
    std::vector<Row> rows; // one per leaf, by path index
    bool all_bounds_ok() const;
};

// Transmits the all-zero codeword over BSC(eps); every leaf decision is
// corrected to the true bit (0) after recording whether the raw decision was
// in error. Per-trial randomness derives from (seed, trial index), so results
// do not depend on the execution schedule.
GenieReport genie_error_rates(const CodeSpec& spec, double epsilon, uint64_t trials,
                              uint64_t seed, Exec exec = Exec::parallel);

struct BlockErrorReport {
    uint64_t trials = 0;
    uint64_t errors = 0;
    double rate = 0.0;
};

// Free-running SC over the all-zero codeword: a trial fails when any decoded
// information bit is nonzero.
BlockErrorReport block_error_rate(const CodeSpec& spec, double epsilon, uint64_t trials,
                                  uint64_t seed, Exec exec = Exec::parallel);

} // namespace polar
