#include "catwig/fock.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catwig/errors.hpp"
#include "catwig/state.hpp"

namespace catwig {

namespace {

// exp(-|gamma|^2/2) underflows past this and the recurrence start is junk.
constexpr double kMaxNormSq = 1400.0;

void check_expansion_feasible(Complex gamma) {
    if (std::norm(gamma) > kMaxNormSq) {
        throw TruncationTooSmall("fock: |gamma|^2 too large for a double-precision expansion");
    }
}

}  // namespace

double FockVector::norm_squared() const {
    double acc = 0.0;
    for (const Complex& c : coeffs) {
        acc += std::norm(c);
    }
    return acc;
}

FockVector coherent_to_fock(Complex gamma, int dim) {
    if (dim < 1) {
        throw std::invalid_argument("coherent_to_fock: dim must be >= 1");
    }
    check_expansion_feasible(gamma);
    FockVector f;
    f.coeffs.resize(dim);
    Complex c = Complex{std::exp(-0.5 * std::norm(gamma)), 0.0};
    f.coeffs[0] = c;
    for (int n = 1; n < dim; ++n) {
        c *= gamma / std::sqrt(static_cast<double>(n));
        f.coeffs[n] = c;
    }
    double tail = 0.0;
    for (int n = std::max(0, dim - 4); n < dim; ++n) {
        tail += std::norm(f.coeffs[n]);
    }
    if (tail >= kTailMassThreshold) {
        throw TruncationTooSmall("coherent_to_fock: tail mass above threshold, increase dim");
    }
    return f;
}

double coherent_tail_mass(Complex gamma, int dim) {
    if (dim < 1) {
        throw std::invalid_argument("coherent_tail_mass: dim must be >= 1");
    }
    check_expansion_feasible(gamma);
    Complex c = Complex{std::exp(-0.5 * std::norm(gamma)), 0.0};
    double tail = dim <= 4 ? std::norm(c) : 0.0;
    for (int n = 1; n < dim; ++n) {
        c *= gamma / std::sqrt(static_cast<double>(n));
        if (n >= dim - 4) {
            tail += std::norm(c);
        }
    }
    return tail;
}

FockVector state_to_fock(const SuperpositionState& s, int dim) {
    FockVector out;
    out.coeffs.assign(dim, Complex{0.0, 0.0});
    for (const CoherentTerm& t : s.terms) {
        const FockVector part = coherent_to_fock(t.amp, dim);
        for (int n = 0; n < dim; ++n) {
            out.coeffs[n] += t.coeff * part.coeffs[n];
        }
    }
    return out;
}

double parity_expectation(const FockVector& f) {
    double acc = 0.0;
    double sign = 1.0;
    for (const Complex& c : f.coeffs) {
        acc += sign * std::norm(c);
        sign = -sign;
    }
    return acc;
}

double oracle_wigner_point(const FockVector& f, PhasePoint at, const SuperpositionState& s) {
    if (f.norm_squared() <= 1e-10) {
        throw ZeroNormState("oracle_wigner_point: fock vector norm too small");
    }
    const double n = norm_squared(s);
    if (n <= kZeroNormThreshold) {
        throw ZeroNormState("oracle_wigner_point: state has zero norm");
    }
    constexpr double two_over_pi = 2.0 / std::numbers::pi;
    if (at.x == 0.0 && at.y == 0.0) {
        return two_over_pi * parity_expectation(f) / n;
    }
    const Complex shift = -at.alpha();
    FockVector displaced;
    displaced.coeffs.assign(f.dim(), Complex{0.0, 0.0});
    for (const CoherentTerm& t : s.terms) {
        const Displaced d = displace_label(shift, t.amp);
        const FockVector part = coherent_to_fock(d.label, f.dim());
        const Complex w = t.coeff * d.phase;
        for (int m = 0; m < f.dim(); ++m) {
            displaced.coeffs[m] += w * part.coeffs[m];
        }
    }
    return two_over_pi * parity_expectation(displaced) / n;
}

int truncation_dim(const SuperpositionState& s, const GridSpec& spec) {
    if (!spec.valid()) {
        throw std::invalid_argument("truncation_dim: invalid grid spec");
    }
    const std::array<PhasePoint, 4> corners = {
        PhasePoint{spec.x_min, spec.y_min}, PhasePoint{spec.x_min, spec.y_max},
        PhasePoint{spec.x_max, spec.y_min}, PhasePoint{spec.x_max, spec.y_max}};

    double mu = 0.0;
    for (const CoherentTerm& t : s.terms) {
        for (const PhasePoint& c : corners) {
            mu = std::max(mu, std::abs(t.amp.real() - c.x));
            mu = std::max(mu, std::abs(t.amp.imag() - c.y));
        }
    }
    int dim = std::max(32, static_cast<int>(std::ceil(mu * mu + 10.0 * mu + 20.0)));

    // Largest displaced label appears at a corner; verify the tails there.
    const auto tails_pass = [&](int d) {
        for (const CoherentTerm& t : s.terms) {
            for (const PhasePoint& c : corners) {
                if (coherent_tail_mass(t.amp - c.alpha(), d) >= kTailMassThreshold) {
                    return false;
                }
            }
        }
        return true;
    };
    while (dim <= 4096) {
        if (tails_pass(dim)) {
            return dim;
        }
        dim *= 2;
    }
    throw TruncationTooSmall("truncation_dim: no adequate dim below 4096");
}

}  // namespace catwig
