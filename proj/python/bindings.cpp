// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>

#include "tricoil/circuit.hpp"
#include "tricoil/config.hpp"
#include "tricoil/error.hpp"
#include "tricoil/experiments.hpp"
#include "tricoil/geometry.hpp"
#include "tricoil/magnetics.hpp"
#include "tricoil/optimizer.hpp"
#include "tricoil/oracle.hpp"

namespace py = pybind11;
using namespace tricoil;

namespace {

using Triple = std::array<double, 3>;

Vec3 vec(const Triple& t) { return {t[0], t[1], t[2]}; }
Triple triple(const Vec3& v) { return {v.x, v.y, v.z}; }

MutualMatrix mutual_of(const Mat3& h) { return MutualMatrix{h}; }

LinkParams link_of(double omega, double r_t, double z_r, double z_l, double p0)
{
    LinkParams p{omega, r_t, z_r, z_l, p0};
    p.validate();
    return p;
}

Scenario scenario_of(const std::optional<std::string>& config_json)
{
    return config_json ? parse_config(*config_json).scenario() : default_scenario();
}

py::dict trace_dict(const OptimizationTrace& trace)
{
    py::list currents, weights, losses;
    for (const auto& e : trace.entries) {
        currents.append(triple(e.current));
        weights.append(triple(e.weights.values()));
        losses.append(e.pathloss_db);
    }
    py::dict d;
    d["currents"] = currents;
    d["weights"] = weights;
    d["pathloss_db"] = losses;
    d["iterations"] = trace.iterations();
    d["converged"] = trace.converged;
    d["best_index"] = trace.entries.empty() ? 0 : trace.best_index();
    return d;
}

py::dict report_dict(const OracleReport& r)
{
    py::dict d;
    d["claim"] = r.claim;
    d["closed_form"] = r.closed_form;
    d["oracle_best"] = r.oracle_best;
    d["gap"] = r.gap;
    d["samples"] = r.samples;
    d["seed"] = r.seed;
    d["passed"] = r.passed;
    d["low_confidence"] = r.low_confidence;
    d["concentration"] = r.concentration;
    d["rule_shortfall"] = r.rule_shortfall;
    return d;
}

} // namespace

PYBIND11_MODULE(_tricoil, m)
{
    m.doc() = "Tri-directional coil magnetic-induction link model and beamforming optimizer";

    const auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
    py::register_exception<SingularGeometry>(m, "SingularGeometry", base);
    py::register_exception<NoCoupling>(m, "NoCoupling", base);
    py::register_exception<ValidationError>(m, "ValidationError", base);
    py::register_exception<ParseError>(m, "ParseError", base);

    m.attr("MU0") = kMu0;

    m.def(
        "receiver_pose",
        [](double alpha, const std::string& frame_mode) {
            const TriadPose p = receiver_pose_from_alpha(SweepAngle(alpha), frame_mode_from_string(frame_mode));
            return std::array<Triple, 3>{triple(p.normals[0]), triple(p.normals[1]), triple(p.normals[2])};
        },
        py::arg("alpha"), py::arg("frame_mode") = "orthonormal",
        "Receiver coil normals (n1, n2, n3) for rotation angle alpha.");

    m.def(
        "alpha_grid",
        [](int count) {
            std::vector<double> out;
            for (const auto& a : alpha_grid(count))
                out.push_back(a.radians());
            return out;
        },
        py::arg("count"));

    m.def("coil_resistance",
          [](int turns, double radius, double r0) { return coil_resistance(CoilSpec(turns, radius, r0)); },
          py::arg("turns") = 10, py::arg("radius") = 0.1, py::arg("wire_resistance_per_meter") = 0.01);

    m.def(
        "dipole_mutual",
        [](const Triple& n_t, const Triple& n_r, const Triple& offset, int turns, double radius) {
            const CoilSpec coil(turns, radius, 0.0);
            return dipole_mutual(vec(n_t), vec(n_r), vec(offset), coil, coil);
        },
        py::arg("n_t"), py::arg("n_r"), py::arg("offset"), py::arg("turns") = 10, py::arg("radius") = 0.1);

    m.def(
        "scenario_mutual",
        [](double alpha, const std::optional<std::string>& config_json) {
            return scenario_mutual(scenario_of(config_json), SweepAngle(alpha)).h;
        },
        py::arg("alpha"), py::arg("config_json") = py::none(),
        "Mutual-inductance matrix [tx][rx] of the configured scenario at alpha.");

    m.def(
        "symmetric_eig3",
        [](const Mat3& q) {
            const auto pairs = symmetric_eig3(q);
            Triple values{};
            std::array<Triple, 3> vectors{};
            for (int k = 0; k < 3; ++k) {
                values[k] = pairs[k].value;
                vectors[k] = triple(pairs[k].vector);
            }
            return py::make_tuple(values, vectors);
        },
        py::arg("q"), "Eigenvalues (descending) and unit eigenvectors of a symmetric 3x3 matrix.");

    m.def(
        "pathloss_db",
        [](const Mat3& mm, const Triple& current, const Triple& weights, double omega, double r_t, double z_r,
           double z_l) {
            return pathloss_db(mutual_of(mm), vec(current), CombinerWeights(vec(weights)),
                               link_of(omega, r_t, z_r, z_l, 1.0));
        },
        py::arg("m"), py::arg("current"), py::arg("weights"), py::arg("omega"), py::arg("r_t"), py::arg("z_r"),
        py::arg("z_l"));

    m.def(
        "optimal_current",
        [](const Mat3& mm, const Triple& weights, double p0, double r_t) {
            return triple(optimal_current(mutual_of(mm), CombinerWeights(vec(weights)),
                                          link_of(kDefaultOmega, r_t, r_t, r_t, p0)));
        },
        py::arg("m"), py::arg("weights"), py::arg("p0"), py::arg("r_t"));

    m.def(
        "optimal_weights",
        [](const Mat3& mm, const Triple& current) {
            return triple(optimal_weights(mutual_of(mm), vec(current)).values());
        },
        py::arg("m"), py::arg("current"));

    m.def(
        "alternate",
        [](const Mat3& mm, double p0, double r_t, double delta, int max_iter) {
            const LinkParams p = link_of(kDefaultOmega, r_t, r_t, r_t, p0);
            return trace_dict(alternate(mutual_of(mm), p, CombinerWeights::equal(), delta, max_iter));
        },
        py::arg("m"), py::arg("p0"), py::arg("r_t"), py::arg("delta") = kDefaultDelta,
        py::arg("max_iter") = kDefaultMaxIterations);

    m.def(
        "run_strategy",
        [](double alpha, const std::string& strategy, double delta, const std::optional<std::string>& config_json) {
            const StrategyResult r =
                run_strategy(scenario_of(config_json), SweepAngle(alpha), strategy_from_string(strategy), delta);
            py::dict d;
            d["pathloss_db"] = r.pathloss_db;
            d["current"] = triple(r.current);
            d["weights"] = triple(r.weights.values());
            d["trace"] = trace_dict(r.trace);
            return d;
        },
        py::arg("alpha"), py::arg("strategy") = "joint", py::arg("delta") = kDefaultDelta,
        py::arg("config_json") = py::none());

    m.def(
        "angle_sweep",
        [](int angles, double delta, const std::optional<std::string>& config_json) {
            const SweepResult res = angle_sweep(scenario_of(config_json), alpha_grid(angles), delta);
            py::dict d;
            py::list alpha, joint, tx, rx, eq, iters, converged;
            for (const auto& r : res.records) {
                alpha.append(r.alpha);
                joint.append(r.joint_db);
                tx.append(r.tx_only_db);
                rx.append(r.rx_only_db);
                eq.append(r.equal_db);
                iters.append(r.iterations);
                converged.append(r.converged);
            }
            d["alpha"] = alpha;
            d["joint_db"] = joint;
            d["txonly_db"] = tx;
            d["rxonly_db"] = rx;
            d["equal_db"] = eq;
            d["iters"] = iters;
            d["converged"] = converged;
            return d;
        },
        py::arg("angles") = kDefaultAngleCount, py::arg("delta") = kDefaultDelta,
        py::arg("config_json") = py::none());

    m.def(
        "verify_current_step",
        [](const Mat3& mm, const Triple& weights, long long samples, std::uint64_t seed) {
            return report_dict(verify_current_step(mutual_of(mm), CombinerWeights(vec(weights)), samples, seed));
        },
        py::arg("m"), py::arg("weights"), py::arg("samples") = 100000, py::arg("seed") = 42);

    m.def(
        "verify_weight_step",
        [](const Mat3& mm, const Triple& current, int grid) {
            return report_dict(verify_weight_step(mutual_of(mm), vec(current), grid));
        },
        py::arg("m"), py::arg("current"), py::arg("grid") = 200);

    m.def(
        "normalize_config",
        [](const std::string& text) { return serialize_config(parse_config(text)); }, py::arg("text"),
        "Parse a JSON scenario configuration and return it with every default filled in.");
}
