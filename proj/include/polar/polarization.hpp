#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polar/exec.hpp"

namespace polar {

// r(x) = sqrt(x(1-x)) on [0,1].
double r_func(double x);

// One-step expected potential ratio R(x) = (r(x^2) + r((1-x)^2)) / (2 r(x)),
// defined on the open interval (0,1); its sup is sqrt(3)/2, attained at 1/2.
double ratio_R(double x);

// (a*b)^lambda for a + b = 1; lambda = 1/2 recovers the potential V.
double v_lambda(double a, double b, double lambda);

// sup over the uniform open grid {1,...,points}/(points+1) of the one-step
// expected ratio of (B(1-B))^lambda. Reported, not asserted.
double ratio_scan_lambda(double lambda, int points);

/// Histogram and quantiles of log2(A*B) over all 2^m paths. Values below
/// -1000 (including AB that underflows to zero) land in the underflow bucket
/// and enter quantiles as -infinity.
struct AbHistogram {
    int m = 0;
    double b0 = 0.0;
    struct Bucket {
        double lo = 0.0; // [lo, hi)
        double hi = 0.0;
        uint64_t count = 0;
    };
    std::vector<Bucket> buckets;
    uint64_t underflow = 0;
    uint64_t total = 0;
    double min = 0.0; // -inf when the underflow bucket is populated
    double max = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    std::vector<std::pair<double, double>> fraction_below; // (threshold, fraction)
};

AbHistogram ab_histogram(int m, double b0, std::span<const double> thresholds = {},
                         Exec exec = Exec::parallel);

/// Exact statistics of V over the 2^level equiprobable paths from b0.
struct PolarStats {
    int level = 0;
    double b0 = 0.0;
    double mean_v = 0.0;
    double bound = 0.0;     // (sqrt(3)/2)^level
    double threshold = 0.0; // (sqrt(3)/2)^(level/2)
    double fraction_ge_threshold = 0.0;
    AbHistogram histogram;
};

PolarStats expected_v(int levels, double b0, Exec exec = Exec::parallel);

/// Angle picture of the moment pair: A = cos^2(theta), B = sin^2(theta).
struct AngleState {
    double theta = 0.0;
};

// Applies the moment step to B = sin^2(theta) and returns
// theta' = arcsin(sqrt(B')), preserving the A/B identification exactly.
AngleState angle_step(AngleState state, int bit);

/// Parameters of the fast-polarization argument, rounded to integers
/// (half-up). Infeasible at desk scale whenever ell + lambda > m or s < 1.
struct FastPolarizationParams {
    long m = 0;
    long lambda = 0;
    long delta = 0;
    long s = 0;
    long rho = 0;
    long ell = 0; // initial segment length, round(5 lambda ln lambda)
    bool feasible = false;
};

FastPolarizationParams fast_polarization_params(long m);

} // namespace polar
