#pragma once

#include <complex>
#include <vector>

#include "disep/poly.hpp"

namespace disep::testing {

using cplx = std::complex<long double>;

/// Durand-Kerner roots of a univariate polynomial with rational coefficients, highest degree first.
std::vector<cplx> numeric_roots(const std::vector<long double>& coeffs_high_first);

/// Coefficients of a polynomial in the single variable of its ring, highest degree first.
std::vector<long double> float_coeffs(const MultiPoly& p);

/// j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2) from the cross-ratio of the four projective roots.
/// A cubic contributes a root at infinity.
long double cross_ratio_j(const MultiPoly& p);

}  // namespace disep::testing
