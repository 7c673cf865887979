// SPDX-License-Identifier: Apache-2.0
#include "tricoil/magnetics.hpp"

#include <cmath>
#include <string>

#include "tricoil/error.hpp"

namespace tricoil {

namespace {

double coupling_scale(const CoilSpec& tx, const CoilSpec& rx)
{
    return kMu0 * tx.turns() * rx.turns() * tx.area() * rx.area() / (4.0 * std::numbers::pi);
}

void require_separated(const Vec3& offset)
{
    if (!is_finite(offset))
        throw InvalidArgument("offset must be finite");
    if (norm(offset) == 0.0)
        throw SingularGeometry("transmit and receive centers coincide");
}

bool is_axis_aligned_transmitter(const TriadPose& pose)
{
    const TriadPose expected = transmit_pose();
    for (int i = 0; i < 3; ++i)
        if (norm(pose.normals[i] - expected.normals[i]) > 1e-12)
            return false;
    return true;
}

} // namespace

std::string_view to_string(FormulaMode mode)
{
    return mode == FormulaMode::Canonical ? "canonical" : "paper";
}

FormulaMode formula_mode_from_string(std::string_view name)
{
    if (name == "canonical")
        return FormulaMode::Canonical;
    if (name == "paper" || name == "paper-literal")
        return FormulaMode::PaperLiteral;
    throw InvalidArgument("unknown formula mode '" + std::string(name) + "'");
}

CoilSpec::CoilSpec(int turns, double radius, double wire_resistance_per_meter)
    : turns_(turns), radius_(radius), r0_(wire_resistance_per_meter)
{
    if (turns < 1)
        throw InvalidArgument("coil turns must be >= 1");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidArgument("coil radius must be positive");
    if (!(wire_resistance_per_meter >= 0.0) || !std::isfinite(wire_resistance_per_meter))
        throw InvalidArgument("wire resistance per meter must be non-negative");
}

TriadPose transmit_pose()
{
    return {{}, {Vec3{0, 0, 1}, Vec3{1, 0, 0}, Vec3{0, 1, 0}}};
}

double dipole_mutual(const Vec3& n_t, const Vec3& n_r, const Vec3& offset, const CoilSpec& tx,
                     const CoilSpec& rx)
{
    require_separated(offset);
    const double r = norm(offset);
    const Vec3 u = offset / r;
    return coupling_scale(tx, rx) / (r * r * r) * (3.0 * dot(n_t, u) * dot(n_r, u) - dot(n_t, n_r));
}

double paper_expansion(int tx_index, const Vec3& n_r, const Vec3& offset, const CoilSpec& tx,
                       const CoilSpec& rx)
{
    require_separated(offset);
    const double x = offset.x, y = offset.y, z = offset.z;
    const double r2 = dot(offset, offset);
    const double r5 = r2 * r2 * std::sqrt(r2);
    const double ca = n_r.x, cb = n_r.y, cg = n_r.z;

    double poly = 0.0;
    switch (tx_index) {
    case 0:
        poly = 3 * x * z * ca + 3 * y * z * cb + (2 * z * z - x * x - y * y) * cg;
        break;
    case 1:
        // As printed: the 3xz and (2x^2 - y^2 - z^2) terms carry cos(alpha) and
        // cos(gamma) the other way round from the dipole kernel.
        poly = 3 * x * y * cb + 3 * x * z * ca + (2 * x * x - y * y - z * z) * cg;
        break;
    case 2:
        poly = 3 * y * z * cg + 3 * x * y * ca + (2 * y * y - x * x - z * z) * cb;
        break;
    default:
        throw InvalidArgument("transmit coil index must be 0, 1 or 2");
    }
    return coupling_scale(tx, rx) / r5 * poly;
}

MutualMatrix mutual_matrix(const TriadPose& tx_pose, const TriadPose& rx_pose, const CoilSpec& tx,
                           const CoilSpec& rx, FormulaMode mode)
{
    const Vec3 offset = rx_pose.center - tx_pose.center;
    require_separated(offset);
    if (mode == FormulaMode::PaperLiteral && !is_axis_aligned_transmitter(tx_pose))
        throw InvalidArgument("paper-literal formulas need the transmitter normals (z, x, y)");

    MutualMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m.h[i][j] = mode == FormulaMode::Canonical
                            ? dipole_mutual(tx_pose.normals[i], rx_pose.normals[j], offset, tx, rx)
                            : paper_expansion(i, rx_pose.normals[j], offset, tx, rx);
    return m;
}

double coil_resistance(const CoilSpec& spec)
{
    return spec.wire_resistance_per_meter() * 2.0 * std::numbers::pi * spec.radius() * spec.turns();
}

} // namespace tricoil
