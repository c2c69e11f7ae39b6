#pragma once

#include <cstdint>
#include <vector>

#include "polar/exec.hpp"
#include "polar/paths.hpp"

namespace polar {

/// BSC with offset epsilon in [0,1]; crossover probability p = (1-eps)/2.
struct Bsc {
    double epsilon = 0.0;
    double crossover() const { return (1.0 - epsilon) / 2.0; }
};

Bsc make_bsc(double epsilon);

struct BscComponent {
    double beta = 0.0;    // probability weight
    double epsilon = 0.0; // offset
    double z() const;     // Bhattacharyya sqrt(1 - eps^2)
};

/// A symmetric channel represented as a finite mixture of BSCs.
/// Canonical form: components sorted by offset, offsets equal within the merge
/// tolerance combined by summing weights, total weight 1 within 1e-12.
class CompoundBsc {
public:
    static constexpr double kMergeTol = 1e-12;
    static constexpr size_t kComponentCap = 1000000;

    CompoundBsc() = default;
    static CompoundBsc bsc(double epsilon);
    static CompoundBsc from_components(std::vector<BscComponent> comps,
                                       double merge_tol = kMergeTol);

    const std::vector<BscComponent>& components() const { return comps_; }
    size_t size() const { return comps_.size(); }

private:
    std::vector<BscComponent> comps_;
};

/// Moment vector of one channel: D = E(eps), A = E(eps^2), B = E(z^2) = 1 - A,
/// Z = E(z), V = sqrt(A*B).
struct ChannelMoments {
    double d = 0.0;
    double a = 0.0;
    double b = 0.0;
    double z = 0.0;
    double v = 0.0;
};

ChannelMoments moments(const CompoundBsc& w);

// v-extension (path bit 1): pairwise offset products, weights beta_t * beta_s.
CompoundBsc degrade(const CompoundBsc& w);

// u-extension (path bit 0): pairwise Bhattacharyya products z' = z_t * z_s,
// i.e. offsets eps' = sqrt(1 - z_t^2 z_s^2).
CompoundBsc upgrade(const CompoundBsc& w);

// One step of the scalar B recursion: bit 0 -> b^2, bit 1 -> 1 - (1-b)^2.
double moment_step(double b, int bit);

// B trajectory along a path, entry 0 = b0, bits applied a_1 first; length m+1.
std::vector<double> moments_along_path(double b0, const Path& xi);

// B moment for every path of length m, indexed by path index (a_1 most
// significant). Exactly 2^(m+1) - 2 moment_step evaluations, counted into
// *steps when given.
std::vector<double> b_moment_table(int m, double b0, uint64_t* steps = nullptr,
                                   Exec exec = Exec::parallel);

/// The two Bhattacharyya sandwiches: B <= Z <= sqrt(B) and
/// 1 - D <= Z <= sqrt(1 - D^2), checked with 1e-12 slack.
struct BhattacharyyaBounds {
    double z = 0.0;
    double lower_b = 0.0;  // B
    double upper_b = 0.0;  // sqrt(B)
    double lower_d = 0.0;  // 1 - D
    double upper_d = 0.0;  // sqrt(1 - D^2)
    bool within_b_sandwich = false;
    bool within_d_sandwich = false;
    bool ok() const { return within_b_sandwich && within_d_sandwich; }
};

BhattacharyyaBounds bhattacharyya_bounds(const ChannelMoments& mom);

// Soft value views. L is the log-likelihood ln h; q = e^L / (1 + e^L),
// g = 2q - 1 = tanh(L/2), h = e^L. L may be +-inf.
double soft_q(double llr);
double soft_g(double llr);
double soft_h(double llr);

// BSC soft output for a received symbol y in {+1,-1}: g = eps*y,
// h = (1 + eps*y) / (1 - eps*y), L = ln h (eps = 1 gives +-inf).
double bsc_soft(int y, double epsilon);
std::vector<double> bsc_soft(const std::vector<int>& symbols, double epsilon);

// Transmit a codeword over BSC(eps): each symbol flipped independently with
// probability (1-eps)/2. Deterministic for a fixed seed.
std::vector<int> bsc_observe(const Codeword& cw, double epsilon, uint64_t seed);

} // namespace polar
