#include "catwig/state.hpp"

#include <cmath>
#include <stdexcept>

namespace catwig {

Complex overlap(Complex bra, Complex ket) {
    const double dx = bra.real() - ket.real();
    const double dy = bra.imag() - ket.imag();
    // Im(conj(bra)*ket)
    const double im = bra.real() * ket.imag() - bra.imag() * ket.real();
    return std::exp(Complex{-0.5 * (dx * dx + dy * dy), im});
}

Displaced displace_label(Complex shift, Complex label) {
    // (shift*conj(label) - conj(shift)*label)/2 = i*Im(shift*conj(label))
    const double theta = shift.imag() * label.real() - shift.real() * label.imag();
    return Displaced{std::exp(Complex{0.0, theta}), shift + label};
}

SuperpositionState build_cat(const CatParams& params) {
    const Complex shifted = params.alpha_L + params.delta_alpha;
    const Complex zeta = overlap(params.alpha_L, shifted);
    SuperpositionState s;
    s.terms = {{Complex{1.0, 0.0}, shifted}, {-zeta, params.alpha_L}};
    return s;
}

SuperpositionState combine(const SuperpositionState& cat1, const SuperpositionState& cat2,
                           CombineMode mode) {
    SuperpositionState out;
    out.terms.reserve(cat1.terms.size() + cat2.terms.size());
    out.terms = cat1.terms;
    for (const CoherentTerm& t : cat2.terms) {
        const Complex c = mode == CombineMode::difference ? -t.coeff : t.coeff;
        out.terms.push_back({c, t.amp});
    }
    return out;
}

namespace {

// Merge bit-identical labels by exact coefficient addition and drop exact
// zeros, so that x - x cancels to the empty sum instead of leaving summation
// residue. First-occurrence order; non-identical labels are untouched.
SuperpositionState cancel_exact_duplicates(const SuperpositionState& s) {
    SuperpositionState merged;
    for (const CoherentTerm& t : s.terms) {
        bool absorbed = false;
        for (CoherentTerm& rep : merged.terms) {
            if (rep.amp.real() == t.amp.real() && rep.amp.imag() == t.amp.imag()) {
                rep.coeff += t.coeff;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) {
            merged.terms.push_back(t);
        }
    }
    SuperpositionState out;
    for (const CoherentTerm& t : merged.terms) {
        if (t.coeff.real() != 0.0 || t.coeff.imag() != 0.0) {
            out.terms.push_back(t);
        }
    }
    return out;
}

}  // namespace

Complex inner_product(const SuperpositionState& a, const SuperpositionState& b) {
    const SuperpositionState ca = cancel_exact_duplicates(a);
    const SuperpositionState cb = cancel_exact_duplicates(b);
    Complex acc{0.0, 0.0};
    for (const CoherentTerm& tj : ca.terms) {
        for (const CoherentTerm& tk : cb.terms) {
            acc += std::conj(tj.coeff) * tk.coeff * overlap(tj.amp, tk.amp);
        }
    }
    return acc;
}

double norm_squared(const SuperpositionState& s) {
    return inner_product(s, s).real();
}

SuperpositionState merge_terms(const SuperpositionState& s, double label_tol) {
    if (label_tol < 0.0) {
        throw std::invalid_argument("merge_terms: label_tol must be >= 0");
    }
    SuperpositionState merged;
    for (const CoherentTerm& t : s.terms) {
        bool absorbed = false;
        for (CoherentTerm& rep : merged.terms) {
            if (std::abs(rep.amp - t.amp) < label_tol) {
                rep.coeff += t.coeff;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) {
            merged.terms.push_back(t);
        }
    }
    SuperpositionState out;
    for (const CoherentTerm& t : merged.terms) {
        if (std::abs(t.coeff) >= kCoeffDropThreshold) {
            out.terms.push_back(t);
        }
    }
    return out;
}

}  // namespace catwig
