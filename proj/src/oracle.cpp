// SPDX-License-Identifier: Apache-2.0
#include "tricoil/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tricoil/error.hpp"
#include "tricoil/optimizer.hpp"

namespace tricoil {

UnitSphereSampler::UnitSphereSampler(std::uint64_t seed) : engine_(seed) {}

double UnitSphereSampler::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double UnitSphereSampler::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Vec3 UnitSphereSampler::unit_vector()
{
    for (;;) {
        const Vec3 v{normal(), normal(), normal()};
        const double n = norm(v);
        if (n > 1e-12)
            return v / n;
    }
}

double relative_gap(double oracle, double closed_form)
{
    return (oracle - closed_form) / std::max(std::abs(closed_form), 1e-30);
}

OracleReport verify_current_step(const MutualMatrix& m, const CombinerWeights& s, long long samples,
                                 std::uint64_t seed)
{
    if (samples < 1)
        throw InvalidArgument("oracle needs at least one sample");

    const Mat3 q = beam_form_matrix(m, s);
    const auto rayleigh = [&](const Vec3& v) { return dot(v, q * v) / dot(v, v); };

    // Closed form goes through the same path as the optimizer, at unit power.
    const LinkParams unit{1.0, 1.0, 1.0, 1.0, 1.0};
    const Vec3 best_current = optimal_current(m, s, unit);

    OracleReport report;
    report.claim = "current_step";
    report.closed_form = rayleigh(best_current);
    report.samples = samples;
    report.seed = seed;
    report.low_confidence = samples < kMinConfidentSamples;

    UnitSphereSampler sampler(seed);
    double best = -std::numeric_limits<double>::infinity();
    for (long long k = 0; k < samples; ++k)
        best = std::max(best, rayleigh(sampler.unit_vector()));
    report.oracle_best = best;
    report.gap = relative_gap(best, report.closed_form);
    report.passed = report.gap <= 1e-9;
    if (report.low_confidence)
        report.note = "sample count below 1000";
    return report;
}

OracleReport verify_weight_step(const MutualMatrix& m, const DriveVector& i, int grid)
{
    if (grid < 1)
        throw InvalidArgument("weight grid must be positive");

    const Vec3 a = m.coupling_rows() * i;
    const Vec3 a2{a.x * a.x, a.y * a.y, a.z * a.z};
    const double total = a2.x + a2.y + a2.z;
    if (!(total > 0.0))
        throw NoCoupling("no receive coil sees the transmitted field");

    const double rule = dot(a2, a2) / total;
    const double concentration = std::max({a2.x, a2.y, a2.z});

    double grid_best = 0.0;
    for (int p = 0; p <= grid; ++p)
        for (int q = 0; q <= grid - p; ++q) {
            const double w0 = static_cast<double>(p) / grid;
            const double w1 = static_cast<double>(q) / grid;
            const double w2 = static_cast<double>(grid - p - q) / grid;
            grid_best = std::max(grid_best, w0 * a2.x + w1 * a2.y + w2 * a2.z);
        }

    OracleReport report;
    report.claim = "weight_step";
    report.closed_form = rule;
    report.oracle_best = grid_best;
    report.gap = relative_gap(grid_best, rule);
    report.samples = static_cast<long long>(grid + 1) * (grid + 2) / 2;
    report.concentration = concentration;
    report.rule_shortfall = 1.0 - rule / concentration;
    report.low_confidence = grid < 50;
    report.passed = grid_best >= rule * (1.0 - 1e-12) && grid_best <= concentration * (1.0 + 1e-12);
    report.note = "proportional rule vs concentration bound";
    return report;
}

DipoleExpansionReport verify_dipole_expansion(int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw InvalidArgument("dipole oracle needs at least one trial");

    const CoilSpec coil(10, 0.1, 0.01);
    const TriadPose tx = transmit_pose();
    const double k = kMu0 * 100.0 * coil.area() * coil.area() / (4.0 * std::numbers::pi);

    std::array<OracleReport, 3> rows;
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    UnitSphereSampler sampler(seed);
    for (int t = 0; t < trials; ++t) {
        Vec3 offset;
        do {
            offset = {6.0 * sampler.uniform() - 3.0, 6.0 * sampler.uniform() - 3.0,
                      6.0 * sampler.uniform() - 3.0};
        } while (norm(offset) < 0.1);
        const Vec3 n_r = sampler.unit_vector();
        const double r = norm(offset);
        const double scale = k / (r * r * r);

        for (int row = 0; row < 3; ++row) {
            const double kernel = dipole_mutual(tx.normals[row], n_r, offset, coil, coil);
            const double printed = paper_expansion(row, n_r, offset, coil, coil);
            const double deviation = std::abs(printed - kernel) / scale;
            if (t == 0 || deviation > worst[row]) {
                worst[row] = deviation;
                rows[row].closed_form = printed;
                rows[row].oracle_best = kernel;
            }
        }
    }

    static constexpr const char* names[3] = {"dipole_row1", "dipole_row2", "dipole_row3"};
    for (int row = 0; row < 3; ++row) {
        auto& rep = rows[row];
        rep.claim = names[row];
        rep.gap = worst[row];
        rep.samples = trials;
        rep.seed = seed;
        rep.low_confidence = trials < 100;
        if (row == 1) {
            rep.passed = worst[row] > 0.0;
            rep.note = "printed expansion deviates from the dipole kernel";
        } else {
            rep.passed = worst[row] <= 1e-12;
            rep.note = "printed expansion matches the dipole kernel";
        }
    }
    return {rows[0], rows[1], rows[2]};
}

} // namespace tricoil
