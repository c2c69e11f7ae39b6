#include "polar/ordering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polar/channel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polar {

std::pair<CodeSpec, OrderedDesign> construct_code(int m, uint64_t k, double epsilon, Exec exec) {
    if (m < 1 || m > 30) throw std::invalid_argument("code depth m must be in [1, 30]");
    const uint64_t n = uint64_t{1} << m;
    if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= 2^m");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("offset epsilon must lie in (0,1)");

    OrderedDesign design;
    design.m = m;
    design.epsilon = epsilon;
    design.b0 = 1.0 - epsilon * epsilon;
    design.k = k;
    design.b_table = b_moment_table(m, design.b0, &design.moment_steps, exec);

    std::vector<uint64_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](uint64_t x, uint64_t y) {
        if (design.b_table[x] != design.b_table[y]) return design.b_table[x] < design.b_table[y];
        return x < y; // lexicographically smallest path wins a tie
    });

    design.selected.assign(n, 0);
    double sum_b = 0.0;
    std::vector<Path> info;
    info.reserve(k);
    for (uint64_t i = 0; i < k; ++i) {
        const uint64_t idx = order[i];
        design.selected[idx] = 1;
        sum_b += design.b_table[idx];
        info.push_back(Path::from_index(idx, m));
    }
    design.sum_selected_b = sum_b;
    return {CodeSpec::make(m, std::move(info)), std::move(design)};
}

SbuComparison sbu_compare(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("offset epsilon must lie in (0,1)");
    const double x = 1.0 - epsilon * epsilon;
    SbuComparison c;
    c.b_01 = 1.0 - (1.0 - x * x) * (1.0 - x * x);
    c.b_10 = (1.0 - (1.0 - x) * (1.0 - x)) * (1.0 - (1.0 - x) * (1.0 - x));
    c.diff = c.b_10 - c.b_01;
    return c;
}

CmuComparison cmu_compare(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("offset epsilon must lie in (0,1)");
    const double b0 = 1.0 - epsilon * epsilon;
    CmuComparison c;
    c.b_0110 = moments_along_path(b0, Path::from_string("0110")).back();
    c.b_1001 = moments_along_path(b0, Path::from_string("1001")).back();
    return c;
}

Example3Comparison example3_compare(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("offset epsilon must lie in (0,1)");
    const double b0 = 1.0 - epsilon * epsilon;
    Example3Comparison c;
    c.b_100101 = moments_along_path(b0, Path::from_string("100101")).back();
    c.b_011010 = moments_along_path(b0, Path::from_string("011010")).back();
    const double d = c.b_100101 - c.b_011010;
    c.sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    return c;
}

bool OrderScanReport::all_permanent() const {
    for (const auto& p : pairs)
        if (!p.permanent) return false;
    return true;
}

uint64_t OrderScanReport::crossing_count() const {
    uint64_t c = 0;
    for (const auto& p : pairs) c += p.crossings.size();
    return c;
}

std::vector<double> epsilon_grid(int points) {
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    std::vector<double> grid(static_cast<size_t>(points));
    for (int i = 1; i <= points; ++i)
        grid[static_cast<size_t>(i - 1)] = static_cast<double>(i) / static_cast<double>(points + 1);
    return grid;
}

namespace {

double b_of_path_bits(uint64_t idx, int m, double b0) {
    double b = b0;
    for (int i = m - 1; i >= 0; --i) {
        const int bit = static_cast<int>((idx >> i) & 1u);
        b = bit == 0 ? b * b : 1.0 - (1.0 - b) * (1.0 - b);
    }
    return b;
}

} // namespace

OrderScanReport order_scan(int m, int w, const std::vector<double>& grid, Exec exec, uint64_t budget) {
    if (m < 1 || m > 30) throw std::invalid_argument("scan depth m must be in [1, 30]");
    if (w < 0 || w > m) throw std::invalid_argument("weight must satisfy 0 <= w <= m");
    for (double e : grid)
        if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("grid offsets must lie in (0,1)");

    std::vector<uint64_t> members;
    for (uint64_t idx = 0; idx < (uint64_t{1} << m); ++idx)
        if (std::popcount(idx) == w) members.push_back(idx);

    const uint64_t cnt = members.size();
    const uint64_t num_pairs = cnt * (cnt - 1) / 2;
    if (num_pairs * grid.size() > budget) throw std::runtime_error("order scan budget exceeded");

    OrderScanReport rep;
    rep.m = m;
    rep.w = w;
    rep.grid = grid;

    // B of every member at every grid point, member-major
    const size_t g = grid.size();
    std::vector<double> table(cnt * g);
    const int64_t cnt_i = static_cast<int64_t>(cnt);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && cnt >= 64)
#endif
    for (int64_t i = 0; i < cnt_i; ++i) {
        for (size_t j = 0; j < g; ++j) {
            const double b0 = 1.0 - grid[j] * grid[j];
            table[static_cast<size_t>(i) * g + j] = b_of_path_bits(members[static_cast<size_t>(i)], m, b0);
        }
    }

    rep.pairs.resize(num_pairs);
    auto scan_pair = [&](uint64_t pi) {
        // unrank pair index into (lo, hi) member positions
        uint64_t a = 0;
        uint64_t rem = pi;
        uint64_t row = cnt - 1;
        while (rem >= row) {
            rem -= row;
            ++a;
            --row;
        }
        const uint64_t b = a + 1 + rem;

        auto& pr = rep.pairs[pi];
        pr.a = Path::from_index(members[a], m);
        pr.b = Path::from_index(members[b], m);

        const double* ba = table.data() + a * g;
        const double* bb = table.data() + b * g;
        int prev_sign = 0;
        double prev_eps = 0.0;
        for (size_t j = 0; j < g; ++j) {
            const double d = ba[j] - bb[j];
            const int sign = d > 1e-15 ? 1 : (d < -1e-15 ? -1 : 0);
            if (sign != 0 && prev_sign != 0 && sign != prev_sign) {
                pr.permanent = false;
                // bisect d(eps) between the bracketing grid points
                double lo = prev_eps, hi = grid[j];
                auto diff_at = [&](double e) {
                    const double b0 = 1.0 - e * e;
                    return b_of_path_bits(members[a], m, b0) - b_of_path_bits(members[b], m, b0);
                };
                double dlo = diff_at(lo);
                while (hi - lo > 1e-9) {
                    const double mid = 0.5 * (lo + hi);
                    const double dm = diff_at(mid);
                    if ((dm > 0.0) == (dlo > 0.0)) {
                        lo = mid;
                        dlo = dm;
                    } else {
                        hi = mid;
                    }
                }
                pr.crossings.emplace_back(lo, hi);
            }
            if (sign != 0) {
                prev_sign = sign;
                prev_eps = grid[j];
            }
        }
    };

    const int64_t np = static_cast<int64_t>(num_pairs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::parallel && np >= 128)
#endif
    for (int64_t pi = 0; pi < np; ++pi) scan_pair(static_cast<uint64_t>(pi));

    return rep;
}

} // namespace polar
