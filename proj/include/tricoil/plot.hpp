// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "tricoil/experiments.hpp"

namespace tricoil {

struct PlotSeries {
    std::string name;
    std::string color; // any SVG color string
    std::vector<double> x;
    std::vector<double> y;
    bool right_axis = false;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::string y2_label; // used when a series sits on the right axis
    bool log_x = false;
    std::vector<PlotSeries> series;
};

/// Renders a line chart on a fixed 800x500 canvas. The output depends only on
/// `spec` (no timestamps, fixed number formatting). Series with a single
/// point are drawn as a marker. Throws InvalidArgument when there is nothing
/// to draw, a series has mismatched x/y lengths, or log_x meets x <= 0.
std::string render_svg(const PlotSpec& spec);

/// Pathloss against alpha, one series per requested strategy.
PlotSpec sweep_plot(const SweepResult& result, const std::vector<Strategy>& strategies);

/// Mean reduction (left axis) and mean iterations (right axis) against log delta.
PlotSpec threshold_plot(const std::vector<ThresholdPoint>& points);

/// Pathloss per iteration, with the equal-allocation level as a reference line.
PlotSpec trace_plot(const OptimizationTrace& trace, double equal_db);

} // namespace tricoil
