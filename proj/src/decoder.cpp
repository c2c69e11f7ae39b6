#include "polar/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "polar/channel.hpp"
#include "polar/codebook.hpp"
#include "polar/llr.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polar {

namespace {

// splitmix64: maps (seed, trial) to an independent engine seed
uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t seed, uint64_t trial) { return mix64(mix64(seed) ^ mix64(trial + 0x51ed2701)); }

struct ScWork {
    const std::vector<uint8_t>* info_mask = nullptr;
    std::vector<double> arena;    // 2n scratch for child llr vectors
    std::vector<double> leaf_llr; // by path index
    std::vector<uint8_t> leaf_bits;
    std::vector<int8_t> hard; // +-1 re-encoded symbols
    uint64_t combines = 0;

    // node covers `len` positions starting at llr; prefix is the path so far,
    // arena_off is this depth's slice of the scratch arena
    void recurse(const double* llr, int8_t* hard_out, size_t len, uint64_t prefix, size_t arena_off) {
        if (len == 1) {
            const uint64_t idx = prefix;
            leaf_llr[idx] = llr[0];
            uint8_t bit = 0;
            if ((*info_mask)[idx] && llr[0] < 0.0) bit = 1;
            leaf_bits[idx] = bit;
            hard_out[0] = bit ? -1 : +1;
            return;
        }
        const size_t half = len / 2;
        double* v_llr = arena.data() + arena_off;
        double* u_llr = v_llr + half;
        for (size_t i = 0; i < half; ++i) v_llr[i] = degrade_combine(llr[i], llr[i + half]);
        combines += half;
        int8_t* v_hard = hard_out + half;
        recurse(v_llr, v_hard, half, prefix * 2 + 1, arena_off + len);
        for (size_t i = 0; i < half; ++i)
            u_llr[i] = upgrade_combine(llr[i], llr[i + half], v_hard[i] < 0 ? 1 : 0);
        combines += half;
        recurse(u_llr, hard_out, half, prefix * 2, arena_off + len);
        for (size_t i = 0; i < half; ++i)
            hard_out[i + half] = static_cast<int8_t>(hard_out[i] * v_hard[i]);
    }
};

} // namespace

DecodeOutput sc_decode(const CodeSpec& spec, const std::vector<double>& llr) {
    const size_t n = spec.block_length();
    if (llr.size() != n) throw std::invalid_argument("soft input length does not match 2^m");
    if (spec.info.empty()) throw std::invalid_argument("information set is empty");

    const std::vector<uint8_t> mask = spec.info_mask();
    ScWork work;
    work.info_mask = &mask;
    work.arena.resize(2 * n);
    work.leaf_llr.resize(n);
    work.leaf_bits.resize(n);
    work.hard.resize(n);
    work.recurse(llr.data(), work.hard.data(), n, 0, 0);

    DecodeOutput out;
    out.leaf_llr = std::move(work.leaf_llr);
    out.leaf_bits = std::move(work.leaf_bits);
    out.combine_ops = work.combines;
    out.message.reserve(spec.info.size());
    for (const Path& p : spec.info) out.message.push_back(out.leaf_bits[p.index()]);
    out.reencoded.bits.resize(n);
    for (size_t j = 0; j < n; ++j) out.reencoded.bits[j] = work.hard[j] < 0 ? 1 : 0;
    return out;
}

double exact_leaf_posterior(const CodeSpec& spec, const std::vector<double>& llr,
                            const Path& target,
                            const std::vector<std::pair<Path, uint8_t>>& decided) {
    const size_t n = spec.block_length();
    if (llr.size() != n) throw std::invalid_argument("soft input length does not match 2^m");
    if (target.length() != spec.m) throw std::invalid_argument("target path length does not match m");
    const uint64_t t_idx = target.index();

    // traversal order is descending path index: everything above t_idx must be decided
    std::vector<int> fixed(n, -1);
    for (const auto& [p, bit] : decided) {
        if (p.length() != spec.m) throw std::invalid_argument("decided path length does not match m");
        if (p.index() <= t_idx) throw std::invalid_argument("decided path not before target in traversal order");
        if (bit > 1) throw std::invalid_argument("decided bits must be 0 or 1");
        if (fixed[p.index()] != -1) throw std::invalid_argument("duplicate decided path");
        fixed[p.index()] = bit;
    }
    for (uint64_t idx = t_idx + 1; idx < n; ++idx)
        if (fixed[idx] == -1) throw std::invalid_argument("decided prefix must cover every earlier path");

    const uint64_t free_count = t_idx + 1; // paths with index <= t_idx, target included
    if (free_count > 24) throw std::runtime_error("enumeration budget exceeded");

    // per-position symbol weights
    std::vector<double> q(n);
    for (size_t j = 0; j < n; ++j) q[j] = soft_q(llr[j]);

    // monomial rows for all paths
    std::vector<Codeword> rows(n);
    for (uint64_t idx = 0; idx < n; ++idx) rows[idx] = monomial_codeword(spec.m, Path::from_index(idx, spec.m));

    std::vector<uint8_t> base(n, 0);
    for (uint64_t idx = t_idx + 1; idx < n; ++idx) {
        if (!fixed[idx]) continue;
        for (size_t j = 0; j < n; ++j) base[j] ^= rows[idx].bits[j];
    }

    double sum0 = 0.0, sum1 = 0.0;
    std::vector<uint8_t> cw(n);
    for (uint64_t assign = 0; assign < (uint64_t{1} << free_count); ++assign) {
        cw = base;
        for (uint64_t b = 0; b < free_count; ++b) {
            if (!((assign >> b) & 1)) continue;
            for (size_t j = 0; j < n; ++j) cw[j] ^= rows[b].bits[j];
        }
        double w = 1.0;
        for (size_t j = 0; j < n; ++j) w *= cw[j] ? (1.0 - q[j]) : q[j];
        if ((assign >> t_idx) & 1)
            sum1 += w;
        else
            sum0 += w;
    }
    const double total = sum0 + sum1;
    if (total == 0.0) return 0.5; // all assignments inconsistent with certain evidence
    return sum0 / total;
}

namespace {

// Genie sweep: with every decision corrected to 0 the u-combine never depends
// on the v-subtree, so the whole trial is m ping-pong level passes. Leaves
// land in path-index order.
void genie_leaf_llrs(std::vector<double>& cur, std::vector<double>& nxt, int m) {
    const size_t n = cur.size();
    for (int level = 0; level < m; ++level) {
        const size_t nodes = size_t{1} << level;
        const size_t len = n >> level;
        const size_t half = len / 2;
        for (size_t p = 0; p < nodes; ++p) {
            const double* in = cur.data() + p * len;
            double* u_out = nxt.data() + (2 * p) * half;
            double* v_out = nxt.data() + (2 * p + 1) * half;
            for (size_t i = 0; i < half; ++i) {
                v_out[i] = degrade_combine(in[i], in[i + half]);
                u_out[i] = in[i] + in[i + half];
            }
        }
        cur.swap(nxt);
    }
}

} // namespace

bool GenieReport::all_bounds_ok() const {
    for (const auto& r : rows)
        if (!r.z_bound_ok || !r.b_bound_ok) return false;
    return true;
}

GenieReport genie_error_rates(const CodeSpec& spec, double epsilon, uint64_t trials,
                              uint64_t seed, Exec exec) {
    if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("offset epsilon must lie in [0,1]");
    const int m = spec.m;
    const size_t n = spec.block_length();
    const double p = (1.0 - epsilon) / 2.0;
    const double llr_mag = bsc_soft(+1, epsilon);

    std::vector<uint64_t> errors(n, 0);

    auto one_trial = [&](uint64_t t, std::vector<double>& cur, std::vector<double>& nxt,
                         std::vector<uint64_t>& errs) {
        std::mt19937_64 rng(trial_seed(seed, t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (size_t j = 0; j < n; ++j)
            cur[j] = unif(rng) < p ? -llr_mag : llr_mag;
        genie_leaf_llrs(cur, nxt, m);
        for (size_t j = 0; j < n; ++j)
            if (cur[j] < 0.0) ++errs[j];
    };

    bool parallel = exec == Exec::parallel;
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<uint64_t> local(n, 0);
            std::vector<double> cur(n), nxt(n);
#pragma omp for schedule(static)
            for (int64_t t = 0; t < static_cast<int64_t>(trials); ++t)
                one_trial(static_cast<uint64_t>(t), cur, nxt, local);
#pragma omp critical
            {
                for (size_t j = 0; j < n; ++j) errors[j] += local[j];
            }
        }
#endif
    } else {
        std::vector<double> cur(n), nxt(n);
        for (uint64_t t = 0; t < trials; ++t) one_trial(t, cur, nxt, errors);
    }

    GenieReport rep;
    rep.m = m;
    rep.epsilon = epsilon;
    rep.trials = trials;
    rep.seed = seed;
    const std::vector<double> btab = b_moment_table(m, 1.0 - epsilon * epsilon, nullptr, exec);
    rep.rows.resize(n);
    for (uint64_t idx = 0; idx < n; ++idx) {
        auto& row = rep.rows[idx];
        row.path = Path::from_index(idx, m);
        row.errors = errors[idx];
        row.rate = static_cast<double>(errors[idx]) / static_cast<double>(trials);
        row.b = btab[idx];
        row.a = 1.0 - row.b;
        row.z = std::sqrt(row.b);
        row.sigma = std::sqrt(row.rate * (1.0 - row.rate) / static_cast<double>(trials));
        row.z_bound_ok = row.rate <= row.z + 5.0 * row.sigma;
        row.b_bound_ok = row.rate <= row.b + 5.0 * row.sigma;
    }
    return rep;
}

BlockErrorReport block_error_rate(const CodeSpec& spec, double epsilon, uint64_t trials,
                                  uint64_t seed, Exec exec) {
    if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
    const size_t n = spec.block_length();
    const double p = (1.0 - epsilon) / 2.0;
    const double llr_mag = bsc_soft(+1, epsilon);

    auto run_trial = [&](uint64_t t) -> uint64_t {
        std::mt19937_64 rng(trial_seed(seed, t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> llr(n);
        for (size_t j = 0; j < n; ++j)
            llr[j] = unif(rng) < p ? -llr_mag : llr_mag;
        DecodeOutput out = sc_decode(spec, llr);
        for (uint8_t b : out.message)
            if (b) return 1;
        return 0;
    };

    uint64_t errs = 0;
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : errs)
        for (int64_t t = 0; t < static_cast<int64_t>(trials); ++t)
            errs += run_trial(static_cast<uint64_t>(t));
#else
        for (uint64_t t = 0; t < trials; ++t) errs += run_trial(t);
#endif
    } else {
        for (uint64_t t = 0; t < trials; ++t) errs += run_trial(t);
    }

    BlockErrorReport rep;
    rep.trials = trials;
    rep.errors = errs;
    rep.rate = static_cast<double>(errs) / static_cast<double>(trials);
    return rep;
}

} // namespace polar
