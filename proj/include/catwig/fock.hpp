// Independent verification path: truncated number-basis expansions and the
// displaced-parity Wigner evaluation. Shares only the label algebra from
// state.hpp with the closed-form module, never its cross terms.

#pragma once

#include "catwig/types.hpp"

namespace catwig {

// Truncated number-basis vector, coeffs[n] = <n|psi>.
struct FockVector {
    std::vector<Complex> coeffs;

    int dim() const { return static_cast<int>(coeffs.size()); }
    double norm_squared() const;
};

// Truncation adequacy: the summed |coeffs[n]|^2 over the last four entries
// must stay below this.
inline constexpr double kTailMassThreshold = 1e-10;

// coeffs[n] = exp(-|gamma|^2/2) gamma^n / sqrt(n!), by the stable recurrence
// coeffs[n] = coeffs[n-1] * gamma / sqrt(n). Throws TruncationTooSmall when
// the tail-mass check fails at dim.
FockVector coherent_to_fock(Complex gamma, int dim);

// Tail mass of the coherent expansion of gamma at dim (last four entries),
// computed without materializing the vector.
double coherent_tail_mass(Complex gamma, int dim);

// Coefficient-weighted sum of the coherent expansions of every term.
FockVector state_to_fock(const SuperpositionState& s, int dim);

// sum_n (-1)^n |coeffs[n]|^2
double parity_expectation(const FockVector& f);

// W(alpha) = (2/pi) N^(-1) sum_n (-1)^n |<n|D(-alpha)|psi>|^2 with N from
// norm_squared(s). D(-alpha)|psi> is built term by term: displace_label gives
// the exact phase and shifted label, coherent_to_fock expands it at f.dim.
// At alpha == 0 the displacement is the identity and the parity sum runs
// directly over f.
double oracle_wigner_point(const FockVector& f, PhasePoint at, const SuperpositionState& s);

// Heuristic truncation size for evaluating s anywhere on the grid:
// max(32, ceil(mu^2 + 10 mu + 20)) with mu the largest coordinate distance
// between a term label and a grid corner, then verified against the
// tail-mass bound for every displaced expansion and doubled until it holds
// (capped at 4096, beyond which TruncationTooSmall is thrown).
int truncation_dim(const SuperpositionState& s, const GridSpec& spec);

}  // namespace catwig
