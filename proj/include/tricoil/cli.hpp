// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tricoil/config.hpp"

namespace tricoil::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

const std::vector<std::string>& subcommands();

struct RunOptions {
    bool plot = false;
};

/// Executes one subcommand and writes its CSV (and SVG when opts.plot) into
/// config.output_dir, creating it if needed. A short summary goes to `log`.
///
///   optimize         trace.csv      joint trace at config.alpha
///   sweep-angle      sweep.csv      all strategies over config.angles angles
///   sweep-threshold  threshold.csv  joint strategy for every config.deltas entry
///   oracle           oracle.csv     brute-force checks of the closed forms
///   mutual           mutual.csv     coupling matrix at config.alpha
///
/// Returns kExitOk, kExitValidation (bad subcommand or config), or
/// kExitRuntime (numerical failure or a failed oracle claim).
int run(std::string_view subcommand, const ScenarioConfig& config, const RunOptions& opts, std::ostream& log);

} // namespace tricoil::cli
