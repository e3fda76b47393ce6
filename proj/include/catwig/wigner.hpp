// Closed-form Wigner evaluation for finite coherent superpositions, plus
// grid sampling and trapezoidal quadrature.

#pragma once

#include "catwig/types.hpp"

namespace catwig {

// Generic term of the expanded Wigner double sum:
//   exp(-|gamma_j|^2/2) exp(-|gamma_k|^2/2) exp(conj(gamma_k)*gamma_j)
//   exp(2*(alpha - gamma_j)*(conj(gamma_k) - conj(alpha)))
// assembled as one complex exponent and a single exp call. For
// gamma_k == gamma_j == g the value is exp(-2|alpha-g|^2), exactly real.
Complex cross_term(Complex gamma_k, Complex gamma_j, PhasePoint at);

// W(alpha) = (2/pi) * (1/N) * Re sum_{j,k} conj(c_k) c_j cross_term(g_k, g_j, alpha)
// with N = norm_squared(s). The double sum is evaluated over Hermitian pairs
// (diagonal plus 2*Re of each j<k pair), so the result is real by
// construction. Throws ZeroNormState when N <= kZeroNormThreshold.
double wigner_point(const SuperpositionState& s, PhasePoint at);

// Samples wigner_point over the grid. threads == 0 picks the hardware
// concurrency, threads == 1 forces sequential evaluation; every cell is an
// independent evaluation written to its own slot, so the values are
// bit-identical for any thread count.
WignerGrid wigner_grid(const SuperpositionState& s, const GridSpec& spec,
                       unsigned threads = 0);

// Trapezoidal quadrature sum w_rc * values[r][c] * dx * dy; approximates
// the integral of W over the grid rectangle.
double integrate_grid(const WignerGrid& g);

}  // namespace catwig
