#pragma once

namespace polar {

// Execution policy for the enumeration / Monte Carlo kernels. Every kernel has
// a plain serial implementation that acts as the reference; the parallel one
// must reproduce it (bit-exactly for integer and element-wise results, to
// 1e-12 for block-reduced sums).
enum class Exec { serial, parallel };

} // namespace polar
