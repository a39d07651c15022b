#pragma once

// Exact integer polynomials, resultants and discriminants.

#include <cstdint>
#include <vector>

#include "normgraph/poly_core.hpp"

namespace normgraph {

using IntPoly = Poly<BigInt>;

IntPoly make_int_poly(const std::vector<std::int64_t>& coeffs);

IntPoly int_mul(const IntPoly& a, const IntPoly& b);
IntPoly int_derivative(const IntPoly& a);

/// Res(a, b) by the subresultant pseudo-remainder sequence. Zero if either input is zero.
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// disc(h) = (-1)^{d(d-1)/2} Res(h, h') / lc(h). Throws std::invalid_argument for degree < 2.
BigInt discriminant(const IntPoly& h);

}  // namespace normgraph
