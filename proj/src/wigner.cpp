#include "catwig/wigner.hpp"

#include <cmath>
#include <numbers>

#include "catwig/errors.hpp"
#include "catwig/state.hpp"
#include "parallel.hpp"

namespace catwig {

namespace {

// Pre-normalization Hermitian double sum at one point. Pairing (j,k) with
// (k,j) keeps the value real: diagonal terms are exactly real and each
// off-diagonal pair contributes 2*Re of one cross term.
double pair_sum(const SuperpositionState& s, PhasePoint at) {
    const std::size_t n = s.terms.size();
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const CoherentTerm& tk = s.terms[k];
        acc += std::norm(tk.coeff) * cross_term(tk.amp, tk.amp, at).real();
        for (std::size_t j = k + 1; j < n; ++j) {
            const CoherentTerm& tj = s.terms[j];
            const Complex term = std::conj(tk.coeff) * tj.coeff * cross_term(tk.amp, tj.amp, at);
            acc += 2.0 * term.real();
        }
    }
    return acc;
}

double point_with_norm(const SuperpositionState& s, PhasePoint at, double inv_norm) {
    constexpr double two_over_pi = 2.0 / std::numbers::pi;
    return two_over_pi * (pair_sum(s, at) * inv_norm);
}

double checked_inv_norm(const SuperpositionState& s) {
    const double n = norm_squared(s);
    if (n <= kZeroNormThreshold) {
        throw ZeroNormState("wigner: state has zero norm, nothing to normalize");
    }
    return 1.0 / n;
}

}  // namespace

Complex cross_term(Complex gamma_k, Complex gamma_j, PhasePoint at) {
    const Complex alpha = at.alpha();
    const Complex expo = Complex{-0.5 * std::norm(gamma_j), 0.0} +
                         Complex{-0.5 * std::norm(gamma_k), 0.0} +
                         std::conj(gamma_k) * gamma_j +
                         2.0 * ((alpha - gamma_j) * (std::conj(gamma_k) - std::conj(alpha)));
    return std::exp(expo);
}

double wigner_point(const SuperpositionState& s, PhasePoint at) {
    return point_with_norm(s, at, checked_inv_norm(s));
}

WignerGrid wigner_grid(const SuperpositionState& s, const GridSpec& spec, unsigned threads) {
    if (!spec.valid()) {
        throw std::invalid_argument("wigner_grid: invalid grid spec");
    }
    const double inv_norm = checked_inv_norm(s);
    WignerGrid g;
    g.spec = spec;
    g.values.resize(static_cast<std::size_t>(spec.nx) * spec.ny);
    detail::parallel_for(spec.ny, threads, [&](int row) {
        double* out = g.values.data() + static_cast<std::size_t>(row) * spec.nx;
        for (int col = 0; col < spec.nx; ++col) {
            out[col] = point_with_norm(s, spec.point(row, col), inv_norm);
        }
    });
    return g;
}

double integrate_grid(const WignerGrid& g) {
    const GridSpec& spec = g.spec;
    double acc = 0.0;
    for (int row = 0; row < spec.ny; ++row) {
        const double wy = (row == 0 || row == spec.ny - 1) ? 0.5 : 1.0;
        for (int col = 0; col < spec.nx; ++col) {
            const double wx = (col == 0 || col == spec.nx - 1) ? 0.5 : 1.0;
            acc += wy * wx * g.at(row, col);
        }
    }
    return acc * spec.dx() * spec.dy();
}

}  // namespace catwig
