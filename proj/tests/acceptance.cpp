// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tricoil/experiments.hpp"
#include "tricoil/oracle.hpp"

namespace fs = std::filesystem;
using namespace tricoil;

namespace {

// Pinned tolerances.
constexpr double kDipoleTol = 1e-12;
constexpr double kDipoleSeconds = 1.0;
constexpr int kDipoleTrials = 1000;
constexpr std::uint64_t kSeed = 42;
constexpr double kCurrentTol = 1e-9;
constexpr long long kCurrentSamples = 100000;
constexpr int kCurrentAngles = 36;
constexpr double kCurrentSeconds = 30.0;
constexpr int kGridAngles = 360;
constexpr double kDelta = 2.5e-2;
constexpr double kMinMeanIters = 5.0;
constexpr double kMaxMeanIters = 25.0;
constexpr double kReductionAt1 = 10.2;
constexpr double kReductionAt1Tol = 1.5;
constexpr double kReductionAtPi = 2.8;
constexpr double kReductionAtPiTol = 1.0;
constexpr double kJointFluctuation = 2.0;
constexpr double kRxFluctuation = 1.0;
constexpr double kSpread = 0.5;
constexpr double kOmegaScale = 10.0;
constexpr double kOffsetTol = 1e-9;
constexpr double kPowerTol = 1e-9;
constexpr double kWeightTol = 1e-12;
constexpr double kDominanceTol = 1e-9;
constexpr double kRuleRatio = 0.75;
constexpr double kRuleTol = 1e-12;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Context {
    Scenario scn = default_scenario();
    SweepResult sweep;
    StrategyResult joint_1, equal_1, joint_pi, equal_pi;
    std::vector<OptimizationTrace> spread_traces;
};

Outcome dipole_equivalence()
{
    const auto t0 = std::chrono::steady_clock::now();
    const DipoleExpansionReport r = verify_dipole_expansion(kDipoleTrials, kSeed);
    const double elapsed = seconds_since(t0);
    Outcome o;
    o.pass = r.first_row.gap <= kDipoleTol && r.third_row.gap <= kDipoleTol && r.second_row.gap > 0.0 &&
             elapsed < kDipoleSeconds;
    o.detail = "rows 1/3 " + fmt("%.2e", r.first_row.gap) + "/" + fmt("%.2e", r.third_row.gap) +
               ", row 2 deviation " + fmt("%.3f", r.second_row.gap) + ", " + fmt("%.3f", elapsed) + " s";
    return o;
}

Outcome transmit_optimality(const Context& ctx)
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<SweepAngle> grid = alpha_grid(kCurrentAngles);
    double worst = -INFINITY;
    bool all = true;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const OracleReport r = verify_current_step(scenario_mutual(ctx.scn, grid[k]), CombinerWeights::equal(),
                                                   kCurrentSamples, kSeed + k);
        worst = std::max(worst, r.gap);
        all = all && r.gap <= kCurrentTol;
    }
    const double elapsed = seconds_since(t0);
    return {all && elapsed < kCurrentSeconds,
            std::to_string(grid.size()) + " angles, worst gap " + fmt("%.2e", worst) + ", " +
                fmt("%.2f", elapsed) + " s"};
}

Outcome convergence(const Context& ctx)
{
    const SweepSummary s = summary_stats(ctx.sweep);
    const bool all_converged = s.converged == s.angles;
    return {s.mean_iterations >= kMinMeanIters && s.mean_iterations <= kMaxMeanIters && all_converged,
            "mean iterations " + fmt("%.3f", s.mean_iterations) + " (band [5, 25]), " +
                std::to_string(s.converged) + "/" + std::to_string(s.angles) + " converged"};
}

Outcome reduction(const Context& ctx)
{
    const double at1 = ctx.equal_1.pathloss_db - ctx.joint_1.pathloss_db;
    const double atpi = ctx.equal_pi.pathloss_db - ctx.joint_pi.pathloss_db;
    return {std::abs(at1 - kReductionAt1) <= kReductionAt1Tol && std::abs(atpi - kReductionAtPi) <= kReductionAtPiTol,
            "dL(1) " + fmt("%.3f", at1) + " dB (target 10.2 +- 1.5), dL(pi) " + fmt("%.3f", atpi) +
                " dB (target 2.8 +- 1.0)"};
}

Outcome robustness(const Context& ctx)
{
    const SweepSummary s = summary_stats(ctx.sweep);
    double spread = 0.0;
    for (double a : {std::numbers::pi / 2, std::numbers::pi, 3 * std::numbers::pi / 2}) {
        std::vector<double> v;
        for (Strategy st : {Strategy::Joint, Strategy::TxOnly, Strategy::RxOnly, Strategy::Equal})
            v.push_back(run_strategy(ctx.scn, SweepAngle(a), st, kDelta).pathloss_db);
        spread = std::max(spread, *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end()));
    }
    return {s.joint.fluctuation <= kJointFluctuation && s.rx_only.fluctuation <= kRxFluctuation && spread < kSpread,
            "joint fluctuation " + fmt("%.3f", s.joint.fluctuation) + " dB (<= 2), rx-only " +
                fmt("%.3f", s.rx_only.fluctuation) + " dB (<= 1), spread " + fmt("%.3f", spread) + " dB (< 0.5)"};
}

Outcome constant_independence(const Context& ctx)
{
    Scenario fast = ctx.scn;
    fast.link.omega *= kOmegaScale;
    double offset = 0.0;
    double drift = 0.0;
    bool first = true;
    for (double a : {1.0, std::numbers::pi}) {
        const SweepAngle alpha(a);
        const double j0 = run_strategy(ctx.scn, alpha, Strategy::Joint, kDelta).pathloss_db;
        const double e0 = run_strategy(ctx.scn, alpha, Strategy::Equal).pathloss_db;
        const double j1 = run_strategy(fast, alpha, Strategy::Joint, kDelta).pathloss_db;
        const double e1 = run_strategy(fast, alpha, Strategy::Equal).pathloss_db;
        for (double d : {j1 - j0, e1 - e0}) {
            if (first) {
                offset = d;
                first = false;
            }
            drift = std::max(drift, std::abs(d - offset));
        }
        drift = std::max(drift, std::abs((e1 - j1) - (e0 - j0)));
    }
    return {drift <= kOffsetTol && std::abs(offset) > 0.0,
            "common offset " + fmt("%.6f", offset) + " dB, max deviation " + fmt("%.2e", drift)};
}

Outcome constraints(const Context& ctx)
{
    const double r_t = ctx.scn.link.r_t;
    const double p0 = ctx.scn.link.p0;
    double power = 0.0;
    double weights = 0.0;
    auto check_current = [&](const DriveVector& i) {
        power = std::max(power, std::abs(dot(i, i) * r_t - p0) / p0);
    };
    auto check_weights = [&](const CombinerWeights& s) {
        weights = std::max(weights, std::abs(dot(s.values(), s.values()) - 1.0));
    };
    auto check_trace = [&](const OptimizationTrace& t) {
        for (const TraceEntry& e : t.entries) {
            check_current(e.current);
            check_weights(e.weights);
        }
    };
    std::size_t traces = 0;
    for (const SweepRecord& r : ctx.sweep.records) {
        check_trace(r.joint_trace);
        check_current(r.tx_only_current);
        check_weights(r.rx_only_weights);
        ++traces;
    }
    for (const OptimizationTrace& t : ctx.spread_traces) {
        check_trace(t);
        ++traces;
    }
    for (const StrategyResult* r : {&ctx.joint_1, &ctx.joint_pi}) {
        check_trace(r->trace);
        ++traces;
    }
    return {power <= kPowerTol && weights <= kWeightTol,
            std::to_string(traces) + " traces, power residual " + fmt("%.2e", power) + ", weight residual " +
                fmt("%.2e", weights)};
}

Outcome dominance(const Context& ctx)
{
    double worst = -INFINITY;
    for (const SweepRecord& r : ctx.sweep.records)
        for (double v : {r.joint_db, r.tx_only_db, r.rx_only_db})
            worst = std::max(worst, v - r.equal_db);
    return {worst <= kDominanceTol, "max (L - L_equal) " + fmt("%.3e", worst) + " dB"};
}

Outcome weight_rule()
{
    MutualMatrix m;
    m.h = {{{2.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    const OracleReport r = verify_weight_step(m, DriveVector{1.0, 1.0, 1.0}, 200);
    const double ratio = r.closed_form / r.concentration;
    return {std::abs(ratio - kRuleRatio) <= kRuleTol && std::abs(r.rule_shortfall - (1.0 - kRuleRatio)) <= kRuleTol &&
                r.oracle_best >= r.closed_form,
            "rule/concentration " + fmt("%.15f", ratio) + ", shortfall " + fmt("%.15f", r.rule_shortfall)};
}

Outcome determinism()
{
    const fs::path base = fs::temp_directory_path() / "tricoil_acceptance";
    fs::remove_all(base);
    std::vector<std::string> csv, svg;
    for (const char* run : {"a", "b"}) {
        const fs::path dir = base / run;
        const std::string cmd = std::string(TRICOIL_EXE) + " sweep-angle --plot --seed 42 --out " + dir.string() +
                                " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
            return {false, std::string("run ") + run + " failed"};
        csv.push_back(slurp(dir / "sweep.csv"));
        svg.push_back(slurp(dir / "sweep.svg"));
    }
    const bool same = csv[0] == csv[1] && svg[0] == svg[1] && !csv[0].empty() && !svg[0].empty();
    return {same, std::to_string(csv[0].size()) + " CSV bytes, " + std::to_string(svg[0].size()) + " SVG bytes, " +
                      (same ? "identical" : "different")};
}

} // namespace

int main()
{
    Context ctx;
    ctx.sweep = angle_sweep(ctx.scn, alpha_grid(kGridAngles), kDelta);
    ctx.joint_1 = run_strategy(ctx.scn, SweepAngle(1.0), Strategy::Joint, kDelta);
    ctx.equal_1 = run_strategy(ctx.scn, SweepAngle(1.0), Strategy::Equal);
    ctx.joint_pi = run_strategy(ctx.scn, SweepAngle(std::numbers::pi), Strategy::Joint, kDelta);
    ctx.equal_pi = run_strategy(ctx.scn, SweepAngle(std::numbers::pi), Strategy::Equal);
    for (double a : {std::numbers::pi / 2, std::numbers::pi, 3 * std::numbers::pi / 2})
        ctx.spread_traces.push_back(run_strategy(ctx.scn, SweepAngle(a), Strategy::Joint, kDelta).trace);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"dipole equivalence", dipole_equivalence},
        {"transmit-step optimality", [&] { return transmit_optimality(ctx); }},
        {"convergence statistics", [&] { return convergence(ctx); }},
        {"pathloss reduction", [&] { return reduction(ctx); }},
        {"angular robustness", [&] { return robustness(ctx); }},
        {"constant independence", [&] { return constant_independence(ctx); }},
        {"constraint invariants", [&] { return constraints(ctx); }},
        {"dominance invariants", [&] { return dominance(ctx); }},
        {"weight-rule gap", weight_rule},
        {"determinism", determinism},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
