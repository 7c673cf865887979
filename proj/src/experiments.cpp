// SPDX-License-Identifier: Apache-2.0
#include "tricoil/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "tricoil/error.hpp"

namespace tricoil {

namespace {

/// Runs body(k) for k in [0, count) on a small thread pool. The first
/// exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            body(k);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) {
                try {
                    body(k);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

DriveVector equal_current(const Scenario& scn)
{
    return Vec3{scn.current_amplitude, scn.current_amplitude, scn.current_amplitude};
}

StrategyStats stats_of(const std::vector<double>& values)
{
    StrategyStats s;
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values)
        sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.fluctuation = s.max - s.min;
    return s;
}

double reduction_pct(double equal_db, double optimized_db)
{
    return 100.0 * (equal_db - optimized_db) / equal_db;
}

} // namespace

LinkParams default_link_params(const CoilSpec& tx, double current_amplitude)
{
    const double r = coil_resistance(tx);
    return {kDefaultOmega, r, r, r, 3.0 * current_amplitude * current_amplitude * r};
}

Scenario default_scenario()
{
    Scenario scn;
    scn.link = default_link_params(scn.tx, scn.current_amplitude);
    return scn;
}

MutualMatrix scenario_mutual(const Scenario& scn, SweepAngle alpha)
{
    TriadPose rx = receiver_pose_from_alpha(alpha, scn.frame_mode);
    rx.center = scn.rx_center;
    return mutual_matrix(transmit_pose(), rx, scn.tx, scn.rx, scn.formula_mode);
}

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::Joint:
        return "joint";
    case Strategy::TxOnly:
        return "tx-only";
    case Strategy::RxOnly:
        return "rx-only";
    case Strategy::Equal:
        return "equal";
    }
    return "?";
}

Strategy strategy_from_string(std::string_view name)
{
    for (Strategy s : {Strategy::Joint, Strategy::TxOnly, Strategy::RxOnly, Strategy::Equal})
        if (name == to_string(s))
            return s;
    throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
}

StrategyResult run_strategy(const Scenario& scn, SweepAngle alpha, Strategy strategy, double delta)
{
    scn.link.validate();
    const MutualMatrix m = scenario_mutual(scn, alpha);
    const CombinerWeights equal_weights = CombinerWeights::equal();

    StrategyResult result;
    result.strategy = strategy;
    switch (strategy) {
    case Strategy::Equal:
        result.current = equal_current(scn);
        result.weights = equal_weights;
        break;
    case Strategy::TxOnly:
        result.current = optimal_current(m, equal_weights, scn.link);
        result.weights = equal_weights;
        break;
    case Strategy::RxOnly:
        result.current = equal_current(scn);
        result.weights = optimal_weights(m, result.current);
        break;
    case Strategy::Joint: {
        result.trace = alternate(m, scn.link, equal_weights, delta, scn.max_iter);
        const TraceEntry& best = result.trace.best();
        result.current = best.current;
        result.weights = best.weights;
        result.pathloss_db = best.pathloss_db;
        return result;
    }
    }
    result.pathloss_db = pathloss_db(m, result.current, result.weights, scn.link);
    return result;
}

SweepResult angle_sweep(const Scenario& scn, const std::vector<SweepAngle>& grid, double delta)
{
    if (grid.empty())
        throw InvalidArgument("angle grid is empty");

    SweepResult out;
    out.records.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
        const SweepAngle alpha = grid[k];
        SweepRecord& rec = out.records[k];
        rec.alpha = alpha.radians();

        StrategyResult joint = run_strategy(scn, alpha, Strategy::Joint, delta);
        const StrategyResult tx = run_strategy(scn, alpha, Strategy::TxOnly, delta);
        const StrategyResult rx = run_strategy(scn, alpha, Strategy::RxOnly, delta);
        const StrategyResult eq = run_strategy(scn, alpha, Strategy::Equal, delta);

        rec.joint_db = joint.pathloss_db;
        rec.tx_only_db = tx.pathloss_db;
        rec.rx_only_db = rx.pathloss_db;
        rec.equal_db = eq.pathloss_db;
        rec.iterations = joint.trace.iterations();
        rec.converged = joint.trace.converged;
        rec.joint_trace = std::move(joint.trace);
        rec.tx_only_current = tx.current;
        rec.rx_only_weights = rx.weights;
    });
    return out;
}

std::vector<ThresholdPoint> threshold_sweep(const Scenario& scn, const std::vector<double>& deltas,
                                            const std::vector<SweepAngle>& grid)
{
    if (grid.empty())
        throw InvalidArgument("angle grid is empty");
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        if (!(deltas[k] > 0.0))
            throw InvalidArgument("thresholds must be positive");
        if (k > 0 && deltas[k] < deltas[k - 1])
            throw InvalidArgument("thresholds must be sorted ascending");
    }

    std::vector<double> equal_db(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
        equal_db[k] = run_strategy(scn, grid[k], Strategy::Equal).pathloss_db;
    });

    std::vector<ThresholdPoint> points;
    points.reserve(deltas.size());
    for (double delta : deltas) {
        std::vector<double> reduction(grid.size());
        std::vector<int> iterations(grid.size());
        parallel_for(grid.size(), [&](std::size_t k) {
            const StrategyResult joint = run_strategy(scn, grid[k], Strategy::Joint, delta);
            reduction[k] = reduction_pct(equal_db[k], joint.pathloss_db);
            iterations[k] = joint.trace.iterations();
        });
        ThresholdPoint p;
        p.delta = delta;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            p.mean_reduction_pct += reduction[k];
            p.mean_iterations += iterations[k];
        }
        p.mean_reduction_pct /= static_cast<double>(grid.size());
        p.mean_iterations /= static_cast<double>(grid.size());
        points.push_back(p);
    }
    return points;
}

std::vector<double> default_thresholds()
{
    return {3e-4, 1e-3, 3e-3, 1e-2, 2.5e-2, 3e-2, 1e-1, 3e-1};
}

SweepSummary summary_stats(const SweepResult& results)
{
    if (results.records.empty())
        throw InvalidArgument("no sweep records to summarize");

    std::vector<double> joint, tx, rx, eq;
    double reduction = 0.0, iterations = 0.0;
    SweepSummary s;
    for (const auto& r : results.records) {
        joint.push_back(r.joint_db);
        tx.push_back(r.tx_only_db);
        rx.push_back(r.rx_only_db);
        eq.push_back(r.equal_db);
        reduction += reduction_pct(r.equal_db, r.joint_db);
        iterations += r.iterations;
        s.converged += r.converged ? 1 : 0;
    }
    const double n = static_cast<double>(results.records.size());
    s.joint = stats_of(joint);
    s.tx_only = stats_of(tx);
    s.rx_only = stats_of(rx);
    s.equal = stats_of(eq);
    s.mean_reduction_pct = reduction / n;
    s.mean_iterations = iterations / n;
    s.angles = static_cast<int>(results.records.size());
    return s;
}

} // namespace tricoil
