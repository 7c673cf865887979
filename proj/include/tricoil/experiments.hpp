// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

#include "tricoil/circuit.hpp"
#include "tricoil/geometry.hpp"
#include "tricoil/magnetics.hpp"
#include "tricoil/optimizer.hpp"

namespace tricoil {

/// One full link: coils, receiver placement and electrical operating point.
/// The transmitter is always transmit_pose() at the origin.
struct Scenario {
    CoilSpec tx{10, 0.1, 0.01};
    CoilSpec rx{10, 0.1, 0.01};
    Vec3 rx_center{1.0, 1.0, 1.5};
    LinkParams link;
    double current_amplitude = 2.0; // per-coil amplitude of the equal-allocation baseline, A
    FrameMode frame_mode = FrameMode::Orthonormal;
    FormulaMode formula_mode = FormulaMode::Canonical;
    int max_iter = kDefaultMaxIterations;
};

inline constexpr double kDefaultOmega = 2.0 * std::numbers::pi * 10e6;
inline constexpr double kDefaultDelta = 2.5e-2;
inline constexpr int kDefaultAngleCount = 360;

/// omega = 2 pi 10 MHz, Z_r = Z_L = R_t = coil resistance of `tx`, and
/// P0 = 3 I_m^2 R_t so that the equal allocation spends exactly the budget.
LinkParams default_link_params(const CoilSpec& tx, double current_amplitude);

/// Transmit/receive coils of 10 turns, 0.1 m radius, 0.01 ohm/m wire, receiver at (1, 1, 1.5).
Scenario default_scenario();

MutualMatrix scenario_mutual(const Scenario& scn, SweepAngle alpha);

enum class Strategy { Joint, TxOnly, RxOnly, Equal };

std::string_view to_string(Strategy s);
Strategy strategy_from_string(std::string_view name);

struct StrategyResult {
    Strategy strategy = Strategy::Equal;
    double pathloss_db = 0.0;
    DriveVector current;
    CombinerWeights weights = CombinerWeights::equal();
    /// Only populated for Strategy::Joint.
    OptimizationTrace trace;
};

/// For the joint strategy the best iterate of the trace is reported.
StrategyResult run_strategy(const Scenario& scn, SweepAngle alpha, Strategy strategy,
                            double delta = kDefaultDelta);

struct SweepRecord {
    double alpha = 0.0;
    double joint_db = 0.0;
    double tx_only_db = 0.0;
    double rx_only_db = 0.0;
    double equal_db = 0.0;
    int iterations = 0;
    bool converged = false;
    OptimizationTrace joint_trace;
    DriveVector tx_only_current;
    CombinerWeights rx_only_weights = CombinerWeights::equal();
};

struct SweepResult {
    std::vector<SweepRecord> records;
};

/// Evaluates all four strategies at every angle. Angles are spread over
/// worker threads; records keep grid order.
SweepResult angle_sweep(const Scenario& scn, const std::vector<SweepAngle>& grid,
                        double delta = kDefaultDelta);

struct ThresholdPoint {
    double delta = 0.0;
    double mean_reduction_pct = 0.0;
    double mean_iterations = 0.0;
};

/// Joint strategy over the grid for each threshold. Reductions are in the
/// dB domain, 100 (L_eq - L_joint) / L_eq, averaged over angles.
std::vector<ThresholdPoint> threshold_sweep(const Scenario& scn, const std::vector<double>& deltas,
                                            const std::vector<SweepAngle>& grid);

/// Log-spaced thresholds from 3e-4 to 3e-1 plus 2.5e-2.
std::vector<double> default_thresholds();

struct StrategyStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double fluctuation = 0.0; // max - min
};

struct SweepSummary {
    StrategyStats joint;
    StrategyStats tx_only;
    StrategyStats rx_only;
    StrategyStats equal;
    double mean_reduction_pct = 0.0;
    double mean_iterations = 0.0;
    int angles = 0;
    int converged = 0;
};

SweepSummary summary_stats(const SweepResult& results);

} // namespace tricoil
