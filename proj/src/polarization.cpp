#include "polar/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polar/channel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polar {

namespace {

constexpr double kUnderflowEdge = -1000.0;

// Deterministic sum: fixed 4096-element blocks summed independently, block
// sums combined in index order. Identical for any thread count.
template <typename F>
double block_sum(size_t count, F&& value_at, Exec exec) {
    constexpr size_t kBlock = 4096;
    const size_t blocks = (count + kBlock - 1) / kBlock;
    if (exec == Exec::serial || blocks < 2) {
        double acc = 0.0;
        for (size_t i = 0; i < count; ++i) acc += value_at(i);
        return acc;
    }
    std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (int64_t b = 0; b < static_cast<int64_t>(blocks); ++b) {
        const size_t lo = static_cast<size_t>(b) * kBlock;
        const size_t hi = std::min(lo + kBlock, count);
        double acc = 0.0;
        for (size_t i = lo; i < hi; ++i) acc += value_at(i);
        partial[static_cast<size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

double round_half_up(double x) { return std::floor(x + 0.5); }

} // namespace

double r_func(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("r(x) needs x in [0,1]");
    return std::sqrt(x * (1.0 - x));
}

double ratio_R(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("R(x) is defined on the open interval (0,1)");
    return (r_func(x * x) + r_func((1.0 - x) * (1.0 - x))) / (2.0 * r_func(x));
}

double v_lambda(double a, double b, double lambda) {
    if (!(a >= 0.0 && b >= 0.0)) throw std::invalid_argument("moments must be non-negative");
    if (std::abs(a + b - 1.0) > 1e-9) throw std::invalid_argument("moments must satisfy a + b = 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    return std::pow(a * b, lambda);
}

double ratio_scan_lambda(double lambda, int points) {
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    double sup = 0.0;
    for (int i = 1; i <= points; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(points + 1);
        const double b_child0 = x * x;
        const double b_child1 = 1.0 - (1.0 - x) * (1.0 - x);
        const double num = std::pow(b_child0 * (1.0 - b_child0), lambda) +
                           std::pow(b_child1 * (1.0 - b_child1), lambda);
        const double ratio = num / (2.0 * std::pow(x * (1.0 - x), lambda));
        sup = std::max(sup, ratio);
    }
    return sup;
}

namespace {

double log2_ab(double b) {
    const double ab = (1.0 - b) * b;
    return ab > 0.0 ? std::log2(ab) : -std::numeric_limits<double>::infinity();
}

AbHistogram histogram_from_b(int m, double b0, const std::vector<double>& btab,
                             std::span<const double> thresholds, Exec exec) {
    const size_t n = btab.size();
    std::vector<double> vals(n);
    if (exec == Exec::parallel && n >= 8192) {
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(n); ++i)
            vals[static_cast<size_t>(i)] = log2_ab(btab[static_cast<size_t>(i)]);
    } else {
        for (size_t i = 0; i < n; ++i) vals[i] = log2_ab(btab[i]);
    }
    std::sort(vals.begin(), vals.end());

    AbHistogram h;
    h.m = m;
    h.b0 = b0;
    h.total = n;
    h.min = vals.front();
    h.max = vals.back();
    h.q25 = vals[(n - 1) / 4];
    h.median = vals[(n - 1) / 2];
    h.q75 = vals[3 * (n - 1) / 4];
    for (double t : thresholds) {
        const auto it = std::lower_bound(vals.begin(), vals.end(), t);
        h.fraction_below.emplace_back(t, static_cast<double>(it - vals.begin()) / static_cast<double>(n));
    }

    size_t i = 0;
    while (i < n && vals[i] < kUnderflowEdge) ++i;
    h.underflow = i;
    while (i < n) {
        const double lo = std::floor(vals[i]);
        AbHistogram::Bucket bucket{lo, lo + 1.0, 0};
        while (i < n && vals[i] < bucket.hi) {
            ++bucket.count;
            ++i;
        }
        h.buckets.push_back(bucket);
    }
    return h;
}

} // namespace

AbHistogram ab_histogram(int m, double b0, std::span<const double> thresholds, Exec exec) {
    if (m < 1 || m > 24) throw std::invalid_argument("histogram depth m must be in [1, 24]");
    const std::vector<double> btab = b_moment_table(m, b0, nullptr, exec);
    return histogram_from_b(m, b0, btab, thresholds, exec);
}

PolarStats expected_v(int levels, double b0, Exec exec) {
    if (levels < 1 || levels > 24) throw std::invalid_argument("level count must be in [1, 24]");
    if (!(b0 >= 0.0 && b0 <= 1.0)) throw std::invalid_argument("B moment must lie in [0,1]");

    const std::vector<double> btab = b_moment_table(levels, b0, nullptr, exec);
    const size_t n = btab.size();

    PolarStats st;
    st.level = levels;
    st.b0 = b0;
    st.bound = std::pow(std::sqrt(3.0) / 2.0, levels);
    st.threshold = std::pow(std::sqrt(3.0) / 2.0, static_cast<double>(levels) / 2.0);
    st.mean_v = block_sum(n, [&](size_t i) { return std::sqrt(btab[i] * (1.0 - btab[i])); }, exec) /
                static_cast<double>(n);
    const double count_ge =
        block_sum(n, [&](size_t i) {
            return std::sqrt(btab[i] * (1.0 - btab[i])) >= st.threshold ? 1.0 : 0.0;
        }, exec);
    st.fraction_ge_threshold = count_ge / static_cast<double>(n);
    st.histogram = histogram_from_b(levels, b0, btab, {}, exec);
    return st;
}

AngleState angle_step(AngleState state, int bit) {
    if (!(state.theta >= 0.0 && state.theta <= std::asin(1.0) * 1.0000000001))
        throw std::invalid_argument("theta must lie in [0, pi/2]");
    const double s = std::sin(state.theta);
    const double b = s * s;
    const double b_next = moment_step(std::min(b, 1.0), bit);
    return AngleState{std::asin(std::sqrt(b_next))};
}

FastPolarizationParams fast_polarization_params(long m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    FastPolarizationParams p;
    p.m = m;
    const double md = static_cast<double>(m);
    p.lambda = static_cast<long>(round_half_up(std::pow(md, 0.75)));
    p.delta = static_cast<long>(round_half_up(std::sqrt(md)));
    p.s = static_cast<long>(round_half_up(static_cast<double>(p.lambda - p.delta) / 2.0));
    p.rho = static_cast<long>(round_half_up(static_cast<double>(p.lambda + p.delta) / 2.0));
    p.ell = static_cast<long>(round_half_up(5.0 * static_cast<double>(p.lambda) *
                                            std::log(static_cast<double>(p.lambda))));
    // the segment scheme needs the initial segment plus at least one lambda
    // segment with at least one declining bit
    p.feasible = (p.ell + p.lambda <= m) && (p.s >= 1);
    return p;
}

} // namespace polar
