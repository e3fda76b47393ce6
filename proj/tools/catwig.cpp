// catwig: build cat-state superpositions, emit Wigner grids and sweep curves
// as CSV, reproduce the figure panels, and cross-check the closed form
// against the displaced-parity oracle.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catwig/analysis.hpp"
#include "catwig/csv.hpp"
#include "catwig/errors.hpp"
#include "catwig/state.hpp"
#include "catwig/state_json.hpp"
#include "catwig/verify.hpp"
#include "catwig/wigner.hpp"

namespace {

using namespace catwig;

struct ExitCode {
    static constexpr int ok = 0;
    static constexpr int usage = 2;
    static constexpr int zero_norm = 3;
    static constexpr int io = 4;
    static constexpr int verify_failed = 5;
};

// One state source plus grid overrides and output path, shared by the
// wigner/figure/sweep subcommands.
struct CliConfig {
    std::string state_path;
    std::string cat;
    std::string cat_diff;
    std::string cat_sum;
    GridSpec grid = default_figure_grid();
    std::string out;
    bool verbose = false;
};

// "re" or "re+imi" / "re-imi" (exponents allowed in both parts).
Complex parse_complex_token(const std::string& token) {
    const auto parse_double = [](const std::string& text) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number: '" + text + "'");
        }
        if (used != text.size()) {
            throw std::invalid_argument("bad number: '" + text + "'");
        }
        return v;
    };
    if (token.empty()) {
        throw std::invalid_argument("empty parameter token");
    }
    if (token.back() != 'i') {
        return Complex{parse_double(token), 0.0};
    }
    const std::string body = token.substr(0, token.size() - 1);
    // Split before the sign of the imaginary part; signs inside exponents
    // (after e/E) and a leading sign do not count.
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) {
        return Complex{0.0, parse_double(body)};
    }
    return Complex{parse_double(body.substr(0, split)), parse_double(body.substr(split))};
}

std::vector<Complex> parse_complex_list(const std::string& csv, std::size_t expected,
                                        const char* flag) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        out.push_back(parse_complex_token(csv.substr(start, comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (out.size() != expected) {
        throw std::invalid_argument(std::string(flag) + " expects " + std::to_string(expected) +
                                    " comma-separated values");
    }
    return out;
}

SuperpositionState resolve_state(const CliConfig& cfg) {
    int sources = 0;
    for (const std::string* s : {&cfg.state_path, &cfg.cat, &cfg.cat_diff, &cfg.cat_sum}) {
        sources += s->empty() ? 0 : 1;
    }
    if (sources != 1) {
        throw std::invalid_argument(
            "exactly one of --state/--cat/--cat-diff/--cat-sum must be given");
    }
    if (!cfg.state_path.empty()) {
        return state_from_json_file(cfg.state_path);
    }
    if (!cfg.cat.empty()) {
        const auto v = parse_complex_list(cfg.cat, 2, "--cat");
        return build_cat({v[0], v[1]});
    }
    const bool diff = !cfg.cat_diff.empty();
    const auto v = parse_complex_list(diff ? cfg.cat_diff : cfg.cat_sum, 4,
                                      diff ? "--cat-diff" : "--cat-sum");
    return combine(build_cat({v[0], v[2]}), build_cat({v[1], v[3]}),
                   diff ? CombineMode::difference : CombineMode::sum);
}

void add_grid_flags(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--xmin", cfg.grid.x_min, "grid x minimum");
    cmd->add_option("--xmax", cfg.grid.x_max, "grid x maximum");
    cmd->add_option("--ymin", cfg.grid.y_min, "grid y minimum");
    cmd->add_option("--ymax", cfg.grid.y_max, "grid y maximum");
    cmd->add_option("--nx", cfg.grid.nx, "grid columns");
    cmd->add_option("--ny", cfg.grid.ny, "grid rows");
}

void add_state_flags(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--state", cfg.state_path, "state JSON file");
    cmd->add_option("--cat", cfg.cat, "aL,da");
    cmd->add_option("--cat-diff", cfg.cat_diff, "a0,a00,da0,da00 (difference)");
    cmd->add_option("--cat-sum", cfg.cat_sum, "a0,a00,da0,da00 (sum)");
}

int write_out(const std::string& path, const std::string& contents) {
    try {
        write_file_atomic(path, contents);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "catwig: %s\n", e.what());
        return ExitCode::io;
    }
    return ExitCode::ok;
}

int emit_grid(const SuperpositionState& state, const CliConfig& cfg) {
    if (!cfg.grid.valid()) {
        throw std::invalid_argument("invalid grid: need nx,ny >= 2 and min < max");
    }
    const WignerGrid grid = wigner_grid(state, cfg.grid);
    const int rc = write_out(cfg.out, grid_to_csv(grid));
    if (rc != ExitCode::ok) {
        return rc;
    }
    std::printf("min=%s max=%s integral=%s\n", format_sig9(grid.min_value()).c_str(),
                format_sig9(grid.max_value()).c_str(),
                format_sig9(integrate_grid(grid)).c_str());
    return ExitCode::ok;
}

int run_wigner(const CliConfig& cfg) {
    const SuperpositionState state = resolve_state(cfg);
    if (norm_squared(state) <= kZeroNormThreshold) {
        std::fprintf(stderr,
                     "catwig: state has zero norm; the construction is degenerate "
                     "(e.g. --cat aL,0 makes |aL+da> - zeta|aL> cancel exactly)\n");
        return ExitCode::zero_norm;
    }
    return emit_grid(state, cfg);
}

int run_figure(int figure_id, const std::string& panel, CliConfig& cfg) {
    if (panel.size() != 1) {
        throw UnknownPanel("panel must be a single letter");
    }
    const FigurePreset preset = figure_preset(figure_id, panel[0]);
    return emit_grid(preset.state, cfg);
}

int run_sweep_cmd(const CliConfig& cfg, std::optional<int> figure_id,
                  const std::string& param, double from, double to, int steps,
                  const std::string& metric_name, std::optional<double> reference) {
    SweepMetric metric;
    if (metric_name == "fidelity_to_reference") {
        metric = SweepMetric::fidelity_to_reference;
    } else if (metric_name == "l2_adjacent") {
        metric = SweepMetric::l2_adjacent;
    } else if (metric_name == "l2_to_reference") {
        metric = SweepMetric::l2_to_reference;
    } else {
        throw std::invalid_argument("unknown metric: " + metric_name);
    }

    std::optional<SweptParam> swept;
    if (!param.empty()) {
        if (param == "delta_alpha_0" || param == "da0") {
            swept = SweptParam::delta_alpha_0;
        } else if (param == "delta_alpha_00" || param == "da00") {
            swept = SweptParam::delta_alpha_00;
        } else {
            throw std::invalid_argument("unknown --param: " + param);
        }
    }

    SweepSpec spec;
    if (figure_id) {
        if (!cfg.cat_diff.empty() || !cfg.cat_sum.empty()) {
            throw std::invalid_argument("--id and --cat-diff/--cat-sum are exclusive");
        }
        spec = make_figure_sweep(*figure_id, from, to, steps, metric, reference);
        if (swept) {
            spec.swept = *swept;  // run_sweep validates it matches the family
        }
    } else {
        const bool diff = !cfg.cat_diff.empty();
        if (!diff && cfg.cat_sum.empty()) {
            throw std::invalid_argument("sweep needs --id or a --cat-diff/--cat-sum baseline");
        }
        if (!swept) {
            throw std::invalid_argument("custom sweeps need --param da0|da00");
        }
        const auto v = parse_complex_list(diff ? cfg.cat_diff : cfg.cat_sum, 4,
                                          diff ? "--cat-diff" : "--cat-sum");
        spec.family = SweepFamily::custom;
        spec.mode = diff ? CombineMode::difference : CombineMode::sum;
        spec.alpha_0 = v[0];
        spec.alpha_00 = v[1];
        spec.fixed_delta = *swept == SweptParam::delta_alpha_0 ? v[3] : v[2];
        spec.swept = *swept;
        spec.from = from;
        spec.to = to;
        spec.steps = steps;
        spec.metric = metric;
        spec.reference = reference;
    }

    SweepResult result;
    try {
        result = run_sweep(spec, cfg.grid);
    } catch (const ZeroNormState& e) {
        // a degenerate reference is a bad sweep definition, not a state error
        throw std::invalid_argument(e.what());
    }
    const int rc = write_out(cfg.out, sweep_to_csv(result));
    if (rc != ExitCode::ok) {
        return rc;
    }
    std::printf("rows=%zu skipped=%zu\n", result.params.size(), result.skipped.size());
    return ExitCode::ok;
}

int run_verify(const std::string& scope_name, bool verbose) {
    VerifyScope scope;
    if (scope_name == "quick") {
        scope = VerifyScope::quick;
    } else if (scope_name == "full") {
        scope = VerifyScope::full;
    } else {
        throw std::invalid_argument("unknown --scope: " + scope_name + " (quick|full)");
    }
    if (verbose) {
        std::fprintf(stderr, "catwig: verifying 10 parameter sets, scope=%s\n",
                     scope_name.c_str());
    }
    const VerifyReport report = verify_presets(scope);
    for (const PanelDeviation& p : report.panels) {
        std::printf("%s dim=%d max_dev=%s\n", p.name.c_str(), p.oracle_dim,
                    format_sig9(p.max_abs_deviation).c_str());
    }
    if (!report.passed()) {
        for (const PanelDeviation& p : report.panels) {
            if (!(p.max_abs_deviation < report.tolerance)) {
                std::fprintf(stderr, "catwig: verification failed: %s deviates %s (>= %s)\n",
                             p.name.c_str(), format_sig9(p.max_abs_deviation).c_str(),
                             format_sig9(report.tolerance).c_str());
            }
        }
        return ExitCode::verify_failed;
    }
    std::printf("verify: PASS (all sets below %s)\n", format_sig9(report.tolerance).c_str());
    return ExitCode::ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner functions of superposed optical cat states"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_flag("-v,--verbose", cfg.verbose, "chatty progress on stderr");

    CLI::App* wigner = app.add_subcommand("wigner", "Wigner grid CSV for a state");
    add_state_flags(wigner, cfg);
    add_grid_flags(wigner, cfg);
    wigner->add_option("--out", cfg.out, "output CSV path")->required();

    CLI::App* figure = app.add_subcommand("figure", "reproduce a figure panel");
    int figure_id = 0;
    std::string panel;
    figure->add_option("--id", figure_id, "figure number (3 or 4)")->required();
    figure->add_option("--panel", panel, "panel letter")->required();
    add_grid_flags(figure, cfg);
    figure->add_option("--out", cfg.out, "output CSV path")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "metric vs swept cat shift, CSV");
    int sweep_figure_id = 0;
    std::string param;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string metric = "fidelity_to_reference";
    std::optional<double> reference;
    CLI::Option* sweep_id = sweep->add_option("--id", sweep_figure_id, "figure family (3 or 4)");
    sweep->add_option("--param", param, "swept shift: delta_alpha_0|delta_alpha_00 (da0|da00)");
    sweep->add_option("--cat-diff", cfg.cat_diff, "custom family baseline (difference)");
    sweep->add_option("--cat-sum", cfg.cat_sum, "custom family baseline (sum)");
    sweep->add_option("--from", from, "sweep start")->required();
    sweep->add_option("--to", to, "sweep end")->required();
    sweep->add_option("--steps", steps, "number of points")->required();
    sweep->add_option("--metric", metric,
                      "fidelity_to_reference|l2_adjacent|l2_to_reference");
    sweep->add_option("--reference", reference, "reference parameter (default: midpoint)");
    add_grid_flags(sweep, cfg);
    sweep->add_option("--out", cfg.out, "output CSV path")->required();

    CLI::App* verify = app.add_subcommand("verify", "closed form vs displaced-parity oracle");
    std::string scope = "quick";
    bool quick = false;
    CLI::Option* scope_opt = verify->add_option("--scope", scope, "quick|full");
    verify->add_flag("--quick", quick, "same as --scope quick")->excludes(scope_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        if (wigner->parsed()) {
            return run_wigner(cfg);
        }
        if (figure->parsed()) {
            return run_figure(figure_id, panel, cfg);
        }
        if (sweep->parsed()) {
            return run_sweep_cmd(cfg,
                                 sweep_id->count() > 0 ? std::optional<int>(sweep_figure_id)
                                                       : std::nullopt,
                                 param, from, to, steps, metric, reference);
        }
        return run_verify(quick ? "quick" : scope, cfg.verbose);
    } catch (const ZeroNormState& e) {
        std::fprintf(stderr, "catwig: %s\n", e.what());
        return ExitCode::zero_norm;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "catwig: %s\n", e.what());
        return ExitCode::usage;
    }
}
