// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tricoil/experiments.hpp"
#include "tricoil/oracle.hpp"

namespace tricoil {

/// 17 significant digits, "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

// Result tables. Every writer emits a header row first.

/// iter,alpha,i1,i2,i3,s1,s2,s3,pathloss_db
void write_trace_csv(std::ostream& out, const OptimizationTrace& trace, double alpha);

/// alpha,joint_db,txonly_db,rxonly_db,equal_db,iters,converged
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// delta,mean_reduction_pct,mean_iters
void write_threshold_csv(std::ostream& out, const std::vector<ThresholdPoint>& points);

/// claim,closed_form,oracle_best,gap,samples,seed
void write_oracle_csv(std::ostream& out, const std::vector<OracleReport>& reports);

/// tx,rx,henry
void write_mutual_csv(std::ostream& out, const MutualMatrix& m);

} // namespace tricoil
