// Parameter-sensitivity quantification: sweeps over the cat shifts, fidelity
// and Wigner-distance metrics, and the figure reproduction presets.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwig/types.hpp"

namespace catwig {

enum class SweepFamily { fig3_difference, fig4_sum, custom };
enum class SweptParam { delta_alpha_0, delta_alpha_00 };
enum class SweepMetric { fidelity_to_reference, l2_adjacent, l2_to_reference };

struct SweepSpec {
    SweepFamily family = SweepFamily::custom;
    // Fixed parameters; for the figure families these are overridden by the
    // published values. mode applies to the custom family only.
    CombineMode mode = CombineMode::difference;
    Complex alpha_0{0.0, 0.0};
    Complex alpha_00{0.0, 0.0};
    Complex fixed_delta{0.0, 0.0};  // the non-swept shift
    SweptParam swept = SweptParam::delta_alpha_00;

    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    SweepMetric metric = SweepMetric::fidelity_to_reference;
    std::optional<double> reference;  // defaults to the sweep midpoint

    double reference_value() const { return reference.value_or(0.5 * (from + to)); }
};

struct SweepResult {
    std::vector<double> params;   // non-degenerate points, in sweep order
    std::vector<double> values;   // metric per point
    std::vector<double> skipped;  // parameters of degenerate (zero-norm) states
    SweepSpec spec;
};

// |<a|b>|^2 / (|a|^2 |b|^2); throws ZeroNormState when either norm is zero.
double state_fidelity(const SuperpositionState& a, const SuperpositionState& b);

// sqrt of the trapezoidal quadrature of (W1 - W2)^2; throws GridMismatch
// when the grid geometries differ.
double wigner_l2_distance(const WignerGrid& g1, const WignerGrid& g2);

// Fig3/fig4 sweep spec with the published fixed parameters filled in.
SweepSpec make_figure_sweep(int figure_id, double from, double to, int steps,
                            SweepMetric metric, std::optional<double> reference = {});

// The superposition the sweep evaluates at one parameter value.
SuperpositionState sweep_state(const SweepSpec& spec, double param);

// Evaluate the metric at `steps` evenly spaced parameter values. Degenerate
// points are skipped and recorded; a degenerate reference throws
// ZeroNormState. `grid` is used by the L2 metrics.
SweepResult run_sweep(const SweepSpec& spec, const GridSpec& grid);

struct FigurePreset {
    SuperpositionState state;
    GridSpec grid;
};

// Published parameter set for one panel: figure 3 panels a-d (difference),
// figure 4 panels a-f (sum), on the default grid. Throws UnknownPanel.
FigurePreset figure_preset(int figure_id, char panel);

// x, y in [-7, 7], 281x281.
GridSpec default_figure_grid();

// Every panel with its conventional name, fig3a..fig3d then fig4a..fig4f.
struct NamedPreset {
    std::string name;
    int figure_id;
    char panel;
};
std::vector<NamedPreset> all_panels();

}  // namespace catwig
