#pragma once

#include <cmath>
#include <limits>

namespace polar {

// v-extension combine (the g-product rule): returns L with
// tanh(L/2) = tanh(a/2) * tanh(b/2). Evaluated in the log domain so large
// finite inputs stay finite; infinities follow the product rule on g.
// The magnitude is computed from |a|, |b| alone and the sign applied last,
// so the result is exactly odd in each argument: inputs of equal magnitude
// and opposite parity cancel to an exact 0 further up the tree, which the
// leaf tie rule must see as 0, not as +-1 ulp noise.
inline double degrade_combine(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double sign = ((a > 0) == (b > 0)) ? 1.0 : -1.0;
    const double x = std::fabs(a), y = std::fabs(b);
    if (std::isinf(x)) return sign * y; // inf * inf handled by y = inf
    if (std::isinf(y)) return sign * x;
    const double lo = std::min(x, y), hi = std::max(x, y);
    // ln((1+e^{x+y})/(e^x+e^y)) for x, y >= 0
    const double mag = lo + std::log1p(std::exp(-(x + y))) - std::log1p(std::exp(-(hi - lo)));
    return sign * mag;
}

// u-extension combine (the h-product rule): a + b when the decided bit v_hat
// is 0, a - b when it is 1. The contradiction +inf + (-inf) resolves to 0.
inline double upgrade_combine(double a, double b, int v_hat) {
    const double t = v_hat ? -b : b;
    if (std::isinf(a) && std::isinf(t) && (a > 0) != (t > 0)) return 0.0;
    return a + t;
}

} // namespace polar
