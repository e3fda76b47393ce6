#include "catwig/verify.hpp"

#include <cmath>

#include "catwig/analysis.hpp"
#include "catwig/fock.hpp"
#include "catwig/wigner.hpp"
#include "parallel.hpp"

namespace catwig {

bool VerifyReport::passed() const {
    for (const PanelDeviation& p : panels) {
        if (!(p.max_abs_deviation < tolerance)) {
            return false;
        }
    }
    return !panels.empty();
}

VerifyReport verify_presets(VerifyScope scope, const PointEvaluator& closed_form,
                            unsigned threads) {
    const PointEvaluator eval =
        closed_form ? closed_form
                    : PointEvaluator{[](const SuperpositionState& s, PhasePoint at) {
                          return wigner_point(s, at);
                      }};
    const int n = scope == VerifyScope::quick ? 41 : 281;
    const GridSpec spec{-7.0, 7.0, -7.0, 7.0, n, n};

    VerifyReport report;
    for (const NamedPreset& panel : all_panels()) {
        const SuperpositionState state = figure_preset(panel.figure_id, panel.panel).state;
        const int dim = truncation_dim(state, spec);
        const FockVector fock = state_to_fock(state, dim);

        std::vector<double> row_max(spec.ny, 0.0);
        detail::parallel_for(spec.ny, threads, [&](int row) {
            double worst = 0.0;
            for (int col = 0; col < spec.nx; ++col) {
                const PhasePoint at = spec.point(row, col);
                const double closed = eval(state, at);
                const double oracle = oracle_wigner_point(fock, at, state);
                worst = std::max(worst, std::abs(closed - oracle));
            }
            row_max[row] = worst;
        });
        double worst = 0.0;
        for (double v : row_max) {
            worst = std::max(worst, v);
        }
        report.panels.push_back({panel.name, dim, worst});
    }
    return report;
}

}  // namespace catwig
