// SPDX-License-Identifier: Apache-2.0
#include "tricoil/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tricoil/error.hpp"
#include "tricoil/experiments.hpp"
#include "tricoil/oracle.hpp"
#include "tricoil/plot.hpp"
#include "tricoil/report.hpp"

namespace tricoil::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw Error("cannot open " + path.string() + " for writing");
    f << contents;
    if (!f)
        throw Error("failed writing " + path.string());
}

template <class Writer>
void write_csv(const fs::path& path, Writer&& writer)
{
    std::ostringstream buf;
    writer(buf);
    write_file(path, buf.str());
}

std::string fixed(double v, const char* fmt = "%.3f")
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

int optimize(const ScenarioConfig& cfg, const Scenario& scn, const RunOptions& opts, const fs::path& dir,
             std::ostream& log)
{
    const SweepAngle alpha(cfg.alpha);
    const StrategyResult joint = run_strategy(scn, alpha, Strategy::Joint, cfg.delta);
    const StrategyResult equal = run_strategy(scn, alpha, Strategy::Equal, cfg.delta);
    write_csv(dir / "trace.csv", [&](std::ostream& o) { write_trace_csv(o, joint.trace, alpha.radians()); });
    if (opts.plot)
        write_file(dir / "trace.svg", render_svg(trace_plot(joint.trace, equal.pathloss_db)));

    log << "alpha " << fixed(alpha.radians(), "%.6f") << " rad: equal " << fixed(equal.pathloss_db)
        << " dB, joint " << fixed(joint.pathloss_db) << " dB, reduction "
        << fixed(equal.pathloss_db - joint.pathloss_db) << " dB after " << joint.trace.iterations()
        << " iterations" << (joint.trace.converged ? "" : " (not converged)") << '\n';
    return kExitOk;
}

int sweep_angle(const ScenarioConfig& cfg, const Scenario& scn, const RunOptions& opts, const fs::path& dir,
                std::ostream& log)
{
    const SweepResult result = angle_sweep(scn, alpha_grid(cfg.angles), cfg.delta);
    write_csv(dir / "sweep.csv", [&](std::ostream& o) { write_sweep_csv(o, result); });
    if (opts.plot)
        write_file(dir / "sweep.svg", render_svg(sweep_plot(result, cfg.strategies)));

    const SweepSummary s = summary_stats(result);
    log << s.angles << " angles, " << s.converged << " converged, mean iterations "
        << fixed(s.mean_iterations, "%.2f") << '\n'
        << "fluctuation (dB): joint " << fixed(s.joint.fluctuation) << ", tx-only "
        << fixed(s.tx_only.fluctuation) << ", rx-only " << fixed(s.rx_only.fluctuation) << ", equal "
        << fixed(s.equal.fluctuation) << '\n'
        << "mean reduction " << fixed(s.mean_reduction_pct, "%.1f") << " %\n";
    return kExitOk;
}

int sweep_threshold(const ScenarioConfig& cfg, const Scenario& scn, const RunOptions& opts,
                    const fs::path& dir, std::ostream& log)
{
    const auto points = threshold_sweep(scn, cfg.deltas, alpha_grid(cfg.angles));
    write_csv(dir / "threshold.csv", [&](std::ostream& o) { write_threshold_csv(o, points); });
    if (opts.plot)
        write_file(dir / "threshold.svg", render_svg(threshold_plot(points)));
    for (const auto& p : points)
        log << "delta " << fixed(p.delta, "%.2e") << ": reduction " << fixed(p.mean_reduction_pct, "%.2f")
            << " %, iterations " << fixed(p.mean_iterations, "%.2f") << '\n';
    return kExitOk;
}

int oracle(const ScenarioConfig& cfg, const Scenario& scn, std::ostream& log, const fs::path& dir)
{
    std::vector<OracleReport> reports;
    bool hard_failure = false;

    const auto dipole = verify_dipole_expansion(cfg.dipole_trials, cfg.seed);
    for (const auto* r : {&dipole.first_row, &dipole.second_row, &dipole.third_row}) {
        reports.push_back(*r);
        hard_failure = hard_failure || !r->passed;
    }

    const auto grid = alpha_grid(cfg.oracle_angles);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const MutualMatrix m = scenario_mutual(scn, grid[k]);
        OracleReport r = verify_current_step(m, CombinerWeights::equal(), cfg.oracle_samples, cfg.seed + k);
        r.claim = "current_step@" + fixed(grid[k].radians(), "%.6f");
        hard_failure = hard_failure || !r.passed;
        reports.push_back(std::move(r));
    }

    const SweepAngle alpha(cfg.alpha);
    const MutualMatrix m = scenario_mutual(scn, alpha);
    const Vec3 equal_current{scn.current_amplitude, scn.current_amplitude, scn.current_amplitude};
    OracleReport weights = verify_weight_step(m, equal_current, cfg.weight_grid);
    weights.claim = "weight_step@" + fixed(alpha.radians(), "%.6f");
    weights.seed = cfg.seed;
    reports.push_back(weights);

    MutualMatrix synthetic;
    synthetic.h = {{{2.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    OracleReport synthetic_report = verify_weight_step(synthetic, Vec3{1.0, 1.0, 1.0}, cfg.weight_grid);
    synthetic_report.claim = "weight_step_2_1_1";
    synthetic_report.seed = cfg.seed;
    reports.push_back(synthetic_report);

    write_csv(dir / "oracle.csv", [&](std::ostream& o) { write_oracle_csv(o, reports); });

    int current_failures = 0;
    for (const auto& r : reports)
        if (r.claim.starts_with("current_step") && !r.passed)
            ++current_failures;
    log << "dipole rows 1/3 worst deviation " << fixed(dipole.first_row.gap, "%.3e") << " / "
        << fixed(dipole.third_row.gap, "%.3e") << ", row 2 deviation " << fixed(dipole.second_row.gap, "%.3e")
        << '\n'
        << "current step: " << grid.size() - current_failures << "/" << grid.size() << " angles dominate "
        << cfg.oracle_samples << " samples\n"
        << "weight rule at (2,1,1): " << fixed(synthetic_report.closed_form) << " vs concentration "
        << fixed(synthetic_report.concentration) << " (shortfall " << fixed(synthetic_report.rule_shortfall)
        << ")\n";
    return hard_failure ? kExitRuntime : kExitOk;
}

int mutual(const ScenarioConfig& cfg, const Scenario& scn, const fs::path& dir, std::ostream& log)
{
    const MutualMatrix m = scenario_mutual(scn, SweepAngle(cfg.alpha));
    write_csv(dir / "mutual.csv", [&](std::ostream& o) { write_mutual_csv(o, m); });
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            log << (j ? " " : "") << fixed(m.at(i, j), "%+.6e");
        log << '\n';
    }
    return kExitOk;
}

} // namespace

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names{"optimize", "sweep-angle", "sweep-threshold", "oracle", "mutual"};
    return names;
}

int run(std::string_view subcommand, const ScenarioConfig& config, const RunOptions& opts, std::ostream& log)
{
    const auto& names = subcommands();
    if (std::find(names.begin(), names.end(), subcommand) == names.end()) {
        log << "error: unknown subcommand '" << subcommand << "'\n";
        return kExitValidation;
    }

    Scenario scn;
    try {
        scn = config.scenario();
    } catch (const Error& e) {
        log << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        const fs::path dir(config.output_dir);
        fs::create_directories(dir);
        if (subcommand == "optimize")
            return optimize(config, scn, opts, dir, log);
        if (subcommand == "sweep-angle")
            return sweep_angle(config, scn, opts, dir, log);
        if (subcommand == "sweep-threshold")
            return sweep_threshold(config, scn, opts, dir, log);
        if (subcommand == "oracle")
            return oracle(config, scn, log, dir);
        return mutual(config, scn, dir, log);
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace tricoil::cli
