// Cross-implementation check: closed-form Wigner values against the
// displaced-parity oracle on every published parameter set.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catwig/types.hpp"

namespace catwig {

enum class VerifyScope { quick, full };

// Acceptance tolerance on |closed - oracle| per grid point.
inline constexpr double kVerifyTolerance = 1e-8;

struct PanelDeviation {
    std::string name;
    int oracle_dim = 0;
    double max_abs_deviation = 0.0;
};

struct VerifyReport {
    std::vector<PanelDeviation> panels;
    double tolerance = kVerifyTolerance;

    bool passed() const;
};

using PointEvaluator = std::function<double(const SuperpositionState&, PhasePoint)>;

// Compare the closed-form evaluator (wigner_point by default) against the
// oracle on all ten panels: a 41x41 grid over [-7,7]^2 for quick scope,
// 281x281 for full.
VerifyReport verify_presets(VerifyScope scope, const PointEvaluator& closed_form = {},
                            unsigned threads = 0);

}  // namespace catwig
