// Runs the preset verification with the closed form corrupted to the naive
// 1/pi^2 prefactor. The displaced-parity oracle must catch the constant
// factor, so this program is required to exit 5 exactly like a failed
// `catwig verify`.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "catwig/state.hpp"
#include "catwig/verify.hpp"
#include "catwig/wigner.hpp"

using namespace catwig;

namespace {

double corrupted_wigner_point(const SuperpositionState& s, PhasePoint at) {
    const double n = norm_squared(s);
    Complex sum{0.0, 0.0};
    for (const CoherentTerm& tk : s.terms) {
        for (const CoherentTerm& tj : s.terms) {
            sum += std::conj(tk.coeff) * tj.coeff * cross_term(tk.amp, tj.amp, at);
        }
    }
    const double pi = std::numbers::pi;
    return (1.0 / (pi * pi)) * sum.real() / n;
}

}  // namespace

int main() {
    const VerifyReport report = verify_presets(VerifyScope::quick, corrupted_wigner_point);
    for (const PanelDeviation& p : report.panels) {
        std::printf("%s dim=%d max_dev=%g\n", p.name.c_str(), p.oracle_dim,
                    p.max_abs_deviation);
    }
    if (!report.passed()) {
        std::fprintf(stderr, "verify_mutated: verification failed as it should\n");
        return 5;
    }
    std::printf("verify_mutated: unexpectedly passed\n");
    return 0;
}
