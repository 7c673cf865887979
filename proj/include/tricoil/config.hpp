// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricoil/experiments.hpp"

namespace tricoil {

struct CoilConfig {
    int turns = 10;
    double radius = 0.1;
    double wire_resistance_per_meter = 0.01;

    friend bool operator==(const CoilConfig&, const CoilConfig&) = default;
};

/// Everything a CLI run needs. Electrical values left unset fall back to
/// default_link_params() of the transmit coil.
struct ScenarioConfig {
    CoilConfig tx;
    CoilConfig rx;
    std::array<double, 3> rx_center{1.0, 1.0, 1.5};
    double current_amplitude = 2.0;
    std::optional<double> omega;
    std::optional<double> z_r;
    std::optional<double> z_l;
    std::optional<double> p0;
    FrameMode frame_mode = FrameMode::Orthonormal;
    FormulaMode formula_mode = FormulaMode::Canonical;

    std::string output_dir = "out";
    std::uint64_t seed = 42;
    double delta = kDefaultDelta;
    int max_iter = kDefaultMaxIterations;
    int angles = kDefaultAngleCount;
    std::vector<Strategy> strategies{Strategy::Joint, Strategy::TxOnly, Strategy::RxOnly, Strategy::Equal};
    double alpha = 1.0;
    std::vector<double> deltas = default_thresholds();
    long long oracle_samples = 100000;
    int oracle_angles = 36;
    int weight_grid = 200;
    int dipole_trials = 1000;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;

    /// Throws ValidationError naming the first offending field.
    void validate() const;

    /// Builds the physical scenario; validates first.
    Scenario scenario() const;
};

/// Parses a JSON object. Omitted keys keep their defaults; an empty or
/// whitespace-only document yields the all-defaults config. Malformed JSON
/// throws ParseError with the 1-based line; unknown keys, wrong types and
/// invariant violations throw ValidationError.
ScenarioConfig parse_config(std::string_view text);

/// JSON text accepted by parse_config, reproducing `config` exactly.
std::string serialize_config(const ScenarioConfig& config);

} // namespace tricoil
