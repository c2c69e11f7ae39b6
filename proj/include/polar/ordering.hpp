#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polar/exec.hpp"
#include "polar/paths.hpp"

namespace polar {

/// Full B table over the 2^m paths plus the k selected (smallest-B) paths.
struct OrderedDesign {
    int m = 0;
    double epsilon = 0.0;
    double b0 = 0.0; // 1 - eps^2
    uint64_t k = 0;
    std::vector<double> b_table;     // by path index
    std::vector<uint8_t> selected;   // by path index
    double sum_selected_b = 0.0;     // union bound on block error
    uint64_t moment_steps = 0;       // always 2^(m+1) - 2
};

// Polar construction by B-moment ordering: shares prefixes over the binary
// tree, sorts, selects the k smallest-B paths; ties broken by the
// lexicographically smallest path. Deterministic.
std::pair<CodeSpec, OrderedDesign> construct_code(int m, uint64_t k, double epsilon,
                                                  Exec exec = Exec::parallel);

/// Swap-bits-upgrade closed forms for the prefixes 01 and 10, x = 1 - eps^2:
/// B_01 = 1 - (1-x^2)^2, B_10 = (1 - (1-x)^2)^2, B_10 - B_01 = 2x^2(1-x)^2.
struct SbuComparison {
    double b_01 = 0.0;
    double b_10 = 0.0;
    double diff = 0.0;
};

SbuComparison sbu_compare(double epsilon);

/// Center-move-upgrade comparison of the prefixes 0110 and 1001.
struct CmuComparison {
    double b_0110 = 0.0;
    double b_1001 = 0.0;
};

CmuComparison cmu_compare(double epsilon);

/// Comparison of the length-6 paths 100101 and 011010. The sign is reported,
/// not asserted.
struct Example3Comparison {
    double b_100101 = 0.0;
    double b_011010 = 0.0;
    int sign = 0; // sign of b_100101 - b_011010
};

Example3Comparison example3_compare(double epsilon);

/// Permanence scan over all unordered pairs of weight-w paths: does the sign
/// of B_xi - B_eta stay constant over the epsilon grid?
struct OrderScanReport {
    int m = 0;
    int w = 0;
    std::vector<double> grid;
    struct PairResult {
        Path a;
        Path b;
        bool permanent = true;
        // bisection-refined intervals (width <= 1e-9) bracketing sign changes
        std::vector<std::pair<double, double>> crossings;
    };
    std::vector<PairResult> pairs;
    bool all_permanent() const;
    uint64_t crossing_count() const;
};

OrderScanReport order_scan(int m, int w, const std::vector<double>& grid,
                           Exec exec = Exec::parallel, uint64_t budget = 200000000);

// Uniform open grid {1..points}/(points+1), the default scan grid at 99 points.
std::vector<double> epsilon_grid(int points);

} // namespace polar
