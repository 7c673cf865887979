// SPDX-License-Identifier: Apache-2.0
#include "tricoil/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "tricoil/error.hpp"

namespace tricoil {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 80.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;
constexpr int kTicks = 5;

std::string num(double v, const char* fmt = "%.2f")
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string tick_label(double v)
{
    if (v != 0.0 && (std::abs(v) < 1e-2 || std::abs(v) >= 1e4))
        return num(v, "%.1e");
    return num(v, "%.3g");
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v)
    {
        if (!std::isfinite(v))
            return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool empty() const { return !(lo <= hi); }

    /// Widen degenerate or empty ranges and pad by 5%.
    Range padded() const
    {
        Range r = *this;
        if (r.empty()) {
            r.lo = 0.0;
            r.hi = 1.0;
        }
        if (r.hi - r.lo <= 1e-12 * std::max(1.0, std::abs(r.hi))) {
            const double pad = std::max(0.5, 0.05 * std::abs(r.hi));
            r.lo -= pad;
            r.hi += pad;
            return r;
        }
        const double pad = 0.05 * (r.hi - r.lo);
        r.lo -= pad;
        r.hi += pad;
        return r;
    }
};

} // namespace

std::string render_svg(const PlotSpec& spec)
{
    bool any_point = false;
    bool has_right = false;
    Range xr, yl, yr;
    for (const auto& s : spec.series) {
        if (s.x.size() != s.y.size())
            throw InvalidArgument("series '" + s.name + "' has mismatched x/y lengths");
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (spec.log_x && !(s.x[k] > 0.0))
                throw InvalidArgument("log x axis needs positive x values");
            any_point = true;
            xr.add(spec.log_x ? std::log10(s.x[k]) : s.x[k]);
            (s.right_axis ? yr : yl).add(s.y[k]);
        }
        has_right = has_right || s.right_axis;
    }
    if (!any_point)
        throw InvalidArgument("nothing to plot");

    xr = xr.padded();
    yl = yl.padded();
    yr = yr.padded();

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) {
        const double v = spec.log_x ? std::log10(x) : x;
        return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    auto py = [&](double y, bool right) {
        const Range& r = right ? yr : yl;
        return kTop + plot_h - (y - r.lo) / (r.hi - r.lo) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
        << escape(spec.title) << "</text>\n";

    // Frame and grid.
    svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w)
        << "\" height=\"" << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= kTicks; ++t) {
        const double f = static_cast<double>(t) / kTicks;
        const double xv = xr.lo + f * (xr.hi - xr.lo);
        const double x = kLeft + f * plot_w;
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(x) << "\" y2=\""
            << num(kTop + plot_h) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + plot_h + 18)
            << "\" text-anchor=\"middle\" font-size=\"11\">"
            << tick_label(spec.log_x ? std::pow(10.0, xv) : xv) << "</text>\n";

        const double y = kTop + plot_h - f * plot_h;
        svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft + plot_w)
            << "\" y2=\"" << num(y) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y + 4)
            << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(yl.lo + f * (yl.hi - yl.lo))
            << "</text>\n";
        if (has_right)
            svg << "<text x=\"" << num(kLeft + plot_w + 6) << "\" y=\"" << num(y + 4)
                << "\" text-anchor=\"start\" font-size=\"11\">" << tick_label(yr.lo + f * (yr.hi - yr.lo))
                << "</text>\n";
    }

    svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 20)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(spec.x_label) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << num(kTop + plot_h / 2) << ")\">" << escape(spec.y_label)
        << "</text>\n";
    if (has_right)
        svg << "<text x=\"" << num(kWidth - 18) << "\" y=\"" << num(kTop + plot_h / 2)
            << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(90 " << num(kWidth - 18) << ' '
            << num(kTop + plot_h / 2) << ")\">" << escape(spec.y2_label) << "</text>\n";

    // Series.
    for (const auto& s : spec.series) {
        if (s.x.empty())
            continue;
        if (s.x.size() == 1) {
            svg << "<circle cx=\"" << num(px(s.x[0])) << "\" cy=\"" << num(py(s.y[0], s.right_axis))
                << "\" r=\"4\" fill=\"" << escape(s.color) << "\"/>\n";
            continue;
        }
        svg << "<polyline fill=\"none\" stroke=\"" << escape(s.color) << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (!std::isfinite(s.y[k]))
                continue;
            svg << (first ? "" : " ") << num(px(s.x[k])) << ',' << num(py(s.y[k], s.right_axis));
            first = false;
        }
        svg << "\"/>\n";
    }

    // Legend.
    double ly = kTop + 14;
    for (const auto& s : spec.series) {
        const double lx = kLeft + plot_w - 150;
        svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 20) << "\" y2=\""
            << num(ly - 4) << "\" stroke=\"" << escape(s.color) << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(ly) << "\" font-size=\"11\">" << escape(s.name)
            << "</text>\n";
        ly += 16;
    }
    svg << "</svg>\n";
    return svg.str();
}

PlotSpec sweep_plot(const SweepResult& result, const std::vector<Strategy>& strategies)
{
    if (result.records.empty())
        throw InvalidArgument("empty sweep");
    PlotSpec spec;
    spec.title = "Pathloss against receiver rotation";
    spec.x_label = "alpha (rad)";
    spec.y_label = "pathloss (dB)";
    for (Strategy st : strategies) {
        PlotSeries s;
        s.name = std::string(to_string(st));
        switch (st) {
        case Strategy::Joint:
            s.color = "#d62728";
            break;
        case Strategy::TxOnly:
            s.color = "#1f77b4";
            break;
        case Strategy::RxOnly:
            s.color = "#2ca02c";
            break;
        case Strategy::Equal:
            s.color = "#7f7f7f";
            break;
        }
        for (const auto& r : result.records) {
            s.x.push_back(r.alpha);
            switch (st) {
            case Strategy::Joint:
                s.y.push_back(r.joint_db);
                break;
            case Strategy::TxOnly:
                s.y.push_back(r.tx_only_db);
                break;
            case Strategy::RxOnly:
                s.y.push_back(r.rx_only_db);
                break;
            case Strategy::Equal:
                s.y.push_back(r.equal_db);
                break;
            }
        }
        spec.series.push_back(std::move(s));
    }
    return spec;
}

PlotSpec threshold_plot(const std::vector<ThresholdPoint>& points)
{
    if (points.empty())
        throw InvalidArgument("empty threshold sweep");
    PlotSpec spec;
    spec.title = "Convergence threshold trade-off";
    spec.x_label = "delta (dB)";
    spec.y_label = "mean reduction (%)";
    spec.y2_label = "mean iterations";
    spec.log_x = true;
    PlotSeries reduction{"mean reduction %", "#d62728", {}, {}, false};
    PlotSeries iterations{"mean iterations", "#1f77b4", {}, {}, true};
    for (const auto& p : points) {
        reduction.x.push_back(p.delta);
        reduction.y.push_back(p.mean_reduction_pct);
        iterations.x.push_back(p.delta);
        iterations.y.push_back(p.mean_iterations);
    }
    spec.series = {std::move(reduction), std::move(iterations)};
    return spec;
}

PlotSpec trace_plot(const OptimizationTrace& trace, double equal_db)
{
    if (trace.entries.empty())
        throw InvalidArgument("empty trace");
    PlotSpec spec;
    spec.title = "Alternating optimization";
    spec.x_label = "iteration";
    spec.y_label = "pathloss (dB)";
    PlotSeries joint{"joint", "#d62728", {}, {}, false};
    for (const auto& e : trace.entries) {
        joint.x.push_back(e.iteration);
        joint.y.push_back(e.pathloss_db);
    }
    PlotSeries equal{"equal", "#7f7f7f", {joint.x.front(), joint.x.back()}, {equal_db, equal_db}, false};
    if (joint.x.size() == 1)
        equal = {"equal", "#7f7f7f", {joint.x.front()}, {equal_db}, false};
    spec.series = {std::move(joint), std::move(equal)};
    return spec;
}

} // namespace tricoil
