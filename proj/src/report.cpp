// SPDX-License-Identifier: Apache-2.0
#include "tricoil/report.hpp"

#include <cmath>
#include <cstdio>

namespace tricoil {

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trace_csv(std::ostream& out, const OptimizationTrace& trace, double alpha)
{
    out << "iter,alpha,i1,i2,i3,s1,s2,s3,pathloss_db\n";
    for (const auto& e : trace.entries) {
        out << e.iteration << ',' << format_number(alpha);
        for (int k = 0; k < 3; ++k)
            out << ',' << format_number(e.current[k]);
        for (int k = 0; k < 3; ++k)
            out << ',' << format_number(e.weights[k]);
        out << ',' << format_number(e.pathloss_db) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result)
{
    out << "alpha,joint_db,txonly_db,rxonly_db,equal_db,iters,converged\n";
    for (const auto& r : result.records)
        out << format_number(r.alpha) << ',' << format_number(r.joint_db) << ','
            << format_number(r.tx_only_db) << ',' << format_number(r.rx_only_db) << ','
            << format_number(r.equal_db) << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << '\n';
}

void write_threshold_csv(std::ostream& out, const std::vector<ThresholdPoint>& points)
{
    out << "delta,mean_reduction_pct,mean_iters\n";
    for (const auto& p : points)
        out << format_number(p.delta) << ',' << format_number(p.mean_reduction_pct) << ','
            << format_number(p.mean_iterations) << '\n';
}

void write_oracle_csv(std::ostream& out, const std::vector<OracleReport>& reports)
{
    out << "claim,closed_form,oracle_best,gap,samples,seed\n";
    for (const auto& r : reports)
        out << r.claim << ',' << format_number(r.closed_form) << ',' << format_number(r.oracle_best) << ','
            << format_number(r.gap) << ',' << r.samples << ',' << r.seed << '\n';
}

void write_mutual_csv(std::ostream& out, const MutualMatrix& m)
{
    out << "tx,rx,henry\n";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out << i + 1 << ',' << j + 1 << ',' << format_number(m.at(i, j)) << '\n';
}

} // namespace tricoil
