// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "tricoil/error.hpp"
#include "tricoil/experiments.hpp"

using namespace tricoil;
using std::numbers::pi;

TEST_CASE("default scenario")
{
    const Scenario scn = default_scenario();
    CHECK(scn.link.r_t == doctest::Approx(0.0628318530717958).epsilon(1e-14));
    CHECK(scn.link.z_r == scn.link.r_t);
    CHECK(scn.link.z_l == scn.link.r_t);
    CHECK(scn.link.omega == doctest::Approx(2 * pi * 1e7));
    // The equal allocation spends exactly the budget.
    CHECK(transmit_power({2, 2, 2}, scn.link.r_t) == doctest::Approx(scn.link.p0).epsilon(1e-15));
}

TEST_CASE("strategies")
{
    const Scenario scn = default_scenario();
    const SweepAngle alpha(1.0);
    const MutualMatrix m = scenario_mutual(scn, alpha);

    const StrategyResult eq = run_strategy(scn, alpha, Strategy::Equal);
    CHECK(eq.pathloss_db == pathloss_db(m, {2, 2, 2}, CombinerWeights::equal(), scn.link));
    CHECK(eq.trace.iterations() == 0);

    const StrategyResult tx = run_strategy(scn, alpha, Strategy::TxOnly);
    CHECK(tx.weights == CombinerWeights::equal());
    CHECK(tx.pathloss_db <= eq.pathloss_db);

    const StrategyResult rx = run_strategy(scn, alpha, Strategy::RxOnly);
    CHECK(rx.current == Vec3{2, 2, 2});
    CHECK(rx.pathloss_db <= eq.pathloss_db);

    const StrategyResult joint = run_strategy(scn, alpha, Strategy::Joint);
    CHECK(joint.trace.converged);
    CHECK(joint.pathloss_db == joint.trace.best().pathloss_db);
    CHECK(joint.pathloss_db < eq.pathloss_db);
}

TEST_CASE("strategy names")
{
    for (Strategy s : {Strategy::Joint, Strategy::TxOnly, Strategy::RxOnly, Strategy::Equal})
        CHECK(strategy_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(strategy_from_string("both"), InvalidArgument);
}

TEST_CASE("every strategy agrees on a symmetric rank-one link")
{
    // M = c u u^T, u = (1,1,1)/sqrt3: equal current and weights are already optimal.
    const double c = 1e-9;
    MutualMatrix m;
    for (auto& r : m.h)
        for (double& v : r)
            v = c / 3.0;
    const LinkParams p = default_scenario().link;
    const CombinerWeights eq_w = CombinerWeights::equal();
    const DriveVector eq_i{2, 2, 2};

    const double equal = pathloss_db(m, eq_i, eq_w, p);
    const double tx = pathloss_db(m, optimal_current(m, eq_w, p), eq_w, p);
    const double rx = pathloss_db(m, eq_i, optimal_weights(m, eq_i), p);
    const double joint = alternate(m, p, eq_w, kDefaultDelta).best().pathloss_db;
    CHECK(tx == doctest::Approx(equal).epsilon(1e-12));
    CHECK(rx == doctest::Approx(equal).epsilon(1e-12));
    CHECK(joint == doctest::Approx(equal).epsilon(1e-12));
}

TEST_CASE("angle sweep")
{
    const Scenario scn = default_scenario();
    const auto grid = alpha_grid(72);
    const SweepResult a = angle_sweep(scn, grid);
    REQUIRE(a.records.size() == grid.size());

    for (std::size_t k = 0; k < grid.size(); ++k) {
        const SweepRecord& r = a.records[k];
        CHECK(r.alpha == grid[k].radians());
        CHECK(r.joint_db <= r.equal_db + 1e-9);
        CHECK(r.tx_only_db <= r.equal_db + 1e-9);
        CHECK(r.rx_only_db <= r.equal_db + 1e-9);
        CHECK(r.converged);
        CHECK(r.iterations == r.joint_trace.iterations());
    }

    // Repeatable, regardless of thread scheduling.
    const SweepResult b = angle_sweep(scn, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(a.records[k].joint_db == b.records[k].joint_db);
        CHECK(a.records[k].rx_only_db == b.records[k].rx_only_db);
        CHECK(a.records[k].iterations == b.records[k].iterations);
    }

    CHECK_THROWS_AS(angle_sweep(scn, {}), InvalidArgument);
}

TEST_CASE("paper-literal modes run end to end")
{
    Scenario scn = default_scenario();
    scn.frame_mode = FrameMode::PaperLiteral;
    scn.formula_mode = FormulaMode::PaperLiteral;
    const SweepResult r = angle_sweep(scn, alpha_grid(36));
    for (const auto& rec : r.records) {
        CHECK(std::isfinite(rec.joint_db));
        CHECK(rec.joint_db <= rec.equal_db + 1e-9);
    }
}

TEST_CASE("threshold sweep")
{
    const Scenario scn = default_scenario();
    const auto grid = alpha_grid(36);

    const auto huge = threshold_sweep(scn, {std::numeric_limits<double>::infinity()}, grid);
    REQUIRE(huge.size() == 1);
    CHECK(huge[0].mean_iterations == 2.0);

    // Smaller thresholds run longer over the same deterministic trace, so the
    // best iterate can only improve.
    const auto pts = threshold_sweep(scn, {3e-4, 3e-3, 2.5e-2, 3e-1}, grid);
    REQUIRE(pts.size() == 4);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        CHECK(pts[k - 1].mean_reduction_pct >= pts[k].mean_reduction_pct - 1e-9);
        CHECK(pts[k - 1].mean_iterations >= pts[k].mean_iterations);
    }
    CHECK(pts[0].mean_reduction_pct > 0.0);

    CHECK_THROWS_AS(threshold_sweep(scn, {0.1, 0.01}, grid), InvalidArgument);
    CHECK_THROWS_AS(threshold_sweep(scn, {-0.1}, grid), InvalidArgument);
}

TEST_CASE("summary statistics")
{
    SUBCASE("single angle")
    {
        SweepResult r;
        SweepRecord rec;
        rec.alpha = 1.0;
        rec.joint_db = 5.0;
        rec.tx_only_db = 6.0;
        rec.rx_only_db = 7.0;
        rec.equal_db = 10.0;
        rec.iterations = 4;
        rec.converged = true;
        r.records.push_back(rec);
        const SweepSummary s = summary_stats(r);
        CHECK(s.joint.mean == 5.0);
        CHECK(s.tx_only.mean == 6.0);
        CHECK(s.rx_only.max == 7.0);
        CHECK(s.equal.min == 10.0);
        CHECK(s.joint.fluctuation == 0.0);
        CHECK(s.mean_reduction_pct == doctest::Approx(50.0));
        CHECK(s.mean_iterations == 4.0);
        CHECK(s.converged == 1);
    }
    SUBCASE("constant pathloss has no fluctuation")
    {
        SweepResult r;
        for (int k = 0; k < 10; ++k) {
            SweepRecord rec;
            rec.alpha = k;
            rec.joint_db = rec.tx_only_db = rec.rx_only_db = rec.equal_db = 3.0;
            r.records.push_back(rec);
        }
        const SweepSummary s = summary_stats(r);
        CHECK(s.joint.fluctuation == 0.0);
        CHECK(s.equal.fluctuation == 0.0);
        CHECK(s.mean_reduction_pct == 0.0);
    }
    SUBCASE("scenario sweep")
    {
        const SweepSummary s = summary_stats(angle_sweep(default_scenario(), alpha_grid(90)));
        CHECK(s.angles == 90);
        CHECK(s.joint.mean <= s.equal.mean);
        CHECK(s.joint.min <= s.rx_only.min);
        CHECK(s.joint.fluctuation <= s.rx_only.fluctuation + 2.0);
    }
    CHECK_THROWS_AS(summary_stats(SweepResult{}), InvalidArgument);
}
