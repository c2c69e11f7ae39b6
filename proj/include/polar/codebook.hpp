#pragma once

#include "polar/paths.hpp"

namespace polar {

// Codeword of the monomial x^xi: position j holds the evaluation of
// prod_l x_l^{a_l} at the point j = (x_1...x_m), x_1 most significant.
// Its Hamming weight is 2^(m - w(xi)).
Codeword monomial_codeword(int m, const Path& xi);

// RM(r,m) information set: all paths of weight <= r.
CodeSpec rm_info_set(int r, int m);

// c(T) = sum over xi in T with f_xi = 1 of c(x^xi), over the binary field.
Codeword encode_monomial_sum(const CodeSpec& spec, const Message& msg);

// Same codeword by the recursive (u, u+v) rule: paths with a_1 = 0 encode the
// u-half, paths with a_1 = 1 encode v, halves combine as (u, u+v).
Codeword encode_plotkin(const CodeSpec& spec, const Message& msg);

} // namespace polar
