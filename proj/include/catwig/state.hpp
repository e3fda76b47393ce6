// Exact algebra of coherent-state superpositions: overlaps, displacement
// action on labels, cat-state construction, combination and norms.

#pragma once

#include "catwig/types.hpp"

namespace catwig {

// States with squared norm at or below this are treated as the zero vector.
inline constexpr double kZeroNormThreshold = 1e-20;

// Coefficients below this magnitude are dropped when merging terms.
inline constexpr double kCoeffDropThreshold = 1e-14;

// <bra|ket> = exp(-|ket|^2/2 - |bra|^2/2 + conj(bra)*ket).
// Evaluated as exp(-|bra-ket|^2/2 + i*Im(conj(bra)*ket)), which is the same
// number with the real exponent assembled cancellation-free, so |result| <= 1
// always and overlap(g, g) == 1 exactly.
Complex overlap(Complex bra, Complex ket);

// Result of acting with a displacement on a coherent label.
struct Displaced {
    Complex phase;  // unit modulus
    Complex label;  // shift + label
};

// D(shift)|label> = phase * |shift + label>,
// phase = exp((shift*conj(label) - conj(shift)*label)/2), purely a phase.
Displaced displace_label(Complex shift, Complex label);

// |alpha_L + delta> - zeta |alpha_L> with zeta = <alpha_L | alpha_L + delta>.
// Terms in that order; coefficients stay unnormalized.
SuperpositionState build_cat(const CatParams& params);

// difference: cat1 terms followed by cat2 terms with negated coefficients.
// sum: plain concatenation. Order: all cat1 terms, then all cat2 terms.
SuperpositionState combine(const SuperpositionState& cat1, const SuperpositionState& cat2,
                           CombineMode mode);

// sum_{j,k} conj(a.coeff_j) * b.coeff_k * overlap(a.amp_j, b.amp_k)
Complex inner_product(const SuperpositionState& a, const SuperpositionState& b);

// Re <s|s>. Zero is a legal return; callers decide how to treat it.
double norm_squared(const SuperpositionState& s);

// Merge terms whose labels are within label_tol of each other (Euclidean
// distance in the complex plane), summing coefficients; coefficients below
// kCoeffDropThreshold are dropped. Output keeps first-occurrence order.
SuperpositionState merge_terms(const SuperpositionState& s, double label_tol = 1e-12);

}  // namespace catwig
