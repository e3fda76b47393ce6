#include "catwig/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "catwig/errors.hpp"
#include "catwig/state.hpp"
#include "catwig/wigner.hpp"

namespace catwig {

double state_fidelity(const SuperpositionState& a, const SuperpositionState& b) {
    const double na = norm_squared(a);
    const double nb = norm_squared(b);
    if (na <= kZeroNormThreshold || nb <= kZeroNormThreshold) {
        throw ZeroNormState("state_fidelity: zero-norm argument");
    }
    return std::norm(inner_product(a, b)) / (na * nb);
}

double wigner_l2_distance(const WignerGrid& g1, const WignerGrid& g2) {
    if (!(g1.spec == g2.spec)) {
        throw GridMismatch("wigner_l2_distance: grid specs differ");
    }
    const GridSpec& spec = g1.spec;
    double acc = 0.0;
    for (int row = 0; row < spec.ny; ++row) {
        const double wy = (row == 0 || row == spec.ny - 1) ? 0.5 : 1.0;
        for (int col = 0; col < spec.nx; ++col) {
            const double wx = (col == 0 || col == spec.nx - 1) ? 0.5 : 1.0;
            const double d = g1.at(row, col) - g2.at(row, col);
            acc += wy * wx * d * d;
        }
    }
    return std::sqrt(acc * spec.dx() * spec.dy());
}

SweepSpec make_figure_sweep(int figure_id, double from, double to, int steps,
                            SweepMetric metric, std::optional<double> reference) {
    SweepSpec spec;
    if (figure_id == 3) {
        spec.family = SweepFamily::fig3_difference;
        spec.mode = CombineMode::difference;
        spec.alpha_0 = Complex{2.0, 0.0};
        spec.alpha_00 = Complex{2.3, 0.0};
        spec.fixed_delta = Complex{-1.0, 0.0};
        spec.swept = SweptParam::delta_alpha_00;
    } else if (figure_id == 4) {
        spec.family = SweepFamily::fig4_sum;
        spec.mode = CombineMode::sum;
        spec.alpha_0 = Complex{4.0, 0.0};
        spec.alpha_00 = Complex{2.0, 0.0};
        spec.fixed_delta = Complex{-1.5, 0.0};
        spec.swept = SweptParam::delta_alpha_0;
    } else {
        throw std::invalid_argument("make_figure_sweep: figure must be 3 or 4");
    }
    spec.from = from;
    spec.to = to;
    spec.steps = steps;
    spec.metric = metric;
    spec.reference = reference;
    return spec;
}

SuperpositionState sweep_state(const SweepSpec& spec, double param) {
    const Complex swept_value{param, 0.0};
    Complex da0;
    Complex da00;
    if (spec.swept == SweptParam::delta_alpha_0) {
        da0 = swept_value;
        da00 = spec.fixed_delta;
    } else {
        da0 = spec.fixed_delta;
        da00 = swept_value;
    }
    const SuperpositionState cat1 = build_cat({spec.alpha_0, da0});
    const SuperpositionState cat2 = build_cat({spec.alpha_00, da00});
    return combine(cat1, cat2, spec.mode);
}

namespace {

void validate_sweep(const SweepSpec& spec) {
    if (spec.steps < 2) {
        throw std::invalid_argument("run_sweep: steps must be >= 2");
    }
    if (spec.from == spec.to) {
        throw std::invalid_argument("run_sweep: from and to must differ");
    }
    if (spec.family == SweepFamily::fig3_difference &&
        spec.swept != SweptParam::delta_alpha_00) {
        throw std::invalid_argument("run_sweep: fig3 family sweeps delta_alpha_00");
    }
    if (spec.family == SweepFamily::fig4_sum && spec.swept != SweptParam::delta_alpha_0) {
        throw std::invalid_argument("run_sweep: fig4 family sweeps delta_alpha_0");
    }
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const GridSpec& grid) {
    validate_sweep(spec);
    const bool needs_grids = spec.metric != SweepMetric::fidelity_to_reference;
    if (needs_grids && !grid.valid()) {
        throw std::invalid_argument("run_sweep: invalid grid spec for an L2 metric");
    }

    SweepResult result;
    result.spec = spec;

    const double step = (spec.to - spec.from) / (spec.steps - 1);
    std::vector<SuperpositionState> states;
    for (int i = 0; i < spec.steps; ++i) {
        const double param = spec.from + i * step;
        SuperpositionState s = sweep_state(spec, param);
        if (norm_squared(s) <= kZeroNormThreshold) {
            result.skipped.push_back(param);
            continue;
        }
        result.params.push_back(param);
        states.push_back(std::move(s));
    }

    const std::size_t n = states.size();
    result.values.resize(n);
    if (n == 0) {
        return result;
    }

    switch (spec.metric) {
        case SweepMetric::fidelity_to_reference: {
            const SuperpositionState ref = sweep_state(spec, spec.reference_value());
            if (norm_squared(ref) <= kZeroNormThreshold) {
                throw ZeroNormState("run_sweep: reference state is degenerate");
            }
            for (std::size_t i = 0; i < n; ++i) {
                result.values[i] = state_fidelity(states[i], ref);
            }
            break;
        }
        case SweepMetric::l2_to_reference: {
            const SuperpositionState ref = sweep_state(spec, spec.reference_value());
            if (norm_squared(ref) <= kZeroNormThreshold) {
                throw ZeroNormState("run_sweep: reference state is degenerate");
            }
            const WignerGrid ref_grid = wigner_grid(ref, grid);
            for (std::size_t i = 0; i < n; ++i) {
                result.values[i] = wigner_l2_distance(wigner_grid(states[i], grid), ref_grid);
            }
            break;
        }
        case SweepMetric::l2_adjacent: {
            // Each point pairs with the next surviving one; the last with its
            // predecessor. A lone point reports 0.
            std::vector<WignerGrid> grids;
            grids.reserve(n);
            for (const SuperpositionState& s : states) {
                grids.push_back(wigner_grid(s, grid));
            }
            for (std::size_t i = 0; i + 1 < n; ++i) {
                result.values[i] = wigner_l2_distance(grids[i], grids[i + 1]);
            }
            result.values[n - 1] = n >= 2 ? wigner_l2_distance(grids[n - 2], grids[n - 1]) : 0.0;
            break;
        }
    }
    return result;
}

GridSpec default_figure_grid() {
    return GridSpec{-7.0, 7.0, -7.0, 7.0, 281, 281};
}

FigurePreset figure_preset(int figure_id, char panel) {
    SweepSpec family;
    double swept = 0.0;
    if (figure_id == 3) {
        family = make_figure_sweep(3, 0.0, 1.0, 2, SweepMetric::fidelity_to_reference);
        switch (panel) {
            case 'a': swept = -1.2; break;
            case 'b': swept = -1.3; break;
            case 'c': swept = -1.4; break;
            case 'd': swept = -1.5; break;
            default:
                throw UnknownPanel("figure 3 has panels a-d");
        }
    } else if (figure_id == 4) {
        family = make_figure_sweep(4, 0.0, 1.0, 2, SweepMetric::fidelity_to_reference);
        switch (panel) {
            case 'a': swept = 0.0; break;
            case 'b': swept = -0.5; break;
            case 'c': swept = -1.0; break;
            case 'd': swept = -2.0; break;
            case 'e': swept = -2.5; break;
            case 'f': swept = -3.0; break;
            default:
                throw UnknownPanel("figure 4 has panels a-f");
        }
    } else {
        throw UnknownPanel("only figures 3 and 4 are defined");
    }
    return FigurePreset{sweep_state(family, swept), default_figure_grid()};
}

std::vector<NamedPreset> all_panels() {
    std::vector<NamedPreset> out;
    for (char p : {'a', 'b', 'c', 'd'}) {
        out.push_back({std::string("fig3") + p, 3, p});
    }
    for (char p : {'a', 'b', 'c', 'd', 'e', 'f'}) {
        out.push_back({std::string("fig4") + p, 4, p});
    }
    return out;
}

}  // namespace catwig
