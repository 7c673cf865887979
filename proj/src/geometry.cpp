// SPDX-License-Identifier: Apache-2.0
#include "tricoil/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tricoil/error.hpp"

namespace tricoil {

namespace {

constexpr double kDegenerate = 1e-9;
constexpr double kPoseTolerance = 1e-9;

} // namespace

std::string_view to_string(FrameMode mode)
{
    return mode == FrameMode::Orthonormal ? "orthonormal" : "paper";
}

FrameMode frame_mode_from_string(std::string_view name)
{
    if (name == "orthonormal")
        return FrameMode::Orthonormal;
    if (name == "paper" || name == "paper-literal")
        return FrameMode::PaperLiteral;
    throw InvalidArgument("unknown frame mode '" + std::string(name) + "'");
}

SweepAngle::SweepAngle(double radians)
{
    if (!std::isfinite(radians))
        throw InvalidArgument("sweep angle must be finite");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(radians, two_pi);
    if (a < 0.0)
        a += two_pi;
    if (a >= two_pi)
        a = 0.0;
    alpha_ = a;
}

TriadPose canonical_pose(const Vec3& center)
{
    return {center, {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}};
}

TriadPose receiver_pose_from_alpha(SweepAngle alpha, FrameMode mode)
{
    const double a = alpha.radians();
    const Vec3 ex{1.0, 0.0, 0.0};

    if (mode == FrameMode::PaperLiteral) {
        const Vec3 n1{std::abs(std::sin(a)), 0.0, std::cos(a)};
        const Vec3 c = ex - n1;
        const double len = norm(c);
        if (len < kDegenerate)
            return canonical_pose();
        const Vec3 n2 = c / len;
        return {{}, {n1, n2, cross(n1, n2)}};
    }

    const Vec3 n1{std::sin(a), 0.0, std::cos(a)};
    const Vec3 c = ex - n1;
    const Vec3 projected = c - dot(c, n1) * n1;
    const double len = norm(projected);
    if (len < kDegenerate)
        return canonical_pose();
    const Vec3 n2 = projected / len;
    return {{}, {n1, n2, cross(n1, n2)}};
}

PoseValidation validate_pose(const TriadPose& pose, FrameMode mode)
{
    PoseValidation report;
    const auto& n = pose.normals;

    bool finite = is_finite(pose.center);
    for (const auto& v : n)
        finite = finite && is_finite(v);
    if (!finite) {
        report.ok = false;
        report.max_norm_residual = report.max_orthogonality_residual = report.handedness_residual =
            std::numeric_limits<double>::infinity();
        report.message = "non-finite component";
        return report;
    }

    double norm_res_12 = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double r = std::abs(norm(n[i]) - 1.0);
        report.max_norm_residual = std::max(report.max_norm_residual, r);
        if (i < 2)
            norm_res_12 = std::max(norm_res_12, r);
    }
    report.max_orthogonality_residual = std::max(
        {std::abs(dot(n[0], n[1])), std::abs(dot(n[0], n[2])), std::abs(dot(n[1], n[2]))});
    report.handedness_residual = norm(cross(n[0], n[1]) - n[2]);

    if (mode == FrameMode::Orthonormal) {
        if (report.max_norm_residual > kPoseTolerance) {
            report.ok = false;
            report.message = "normal is not unit length";
        } else if (report.max_orthogonality_residual > kPoseTolerance) {
            report.ok = false;
            report.message = "normals are not orthogonal";
        } else if (report.handedness_residual > kPoseTolerance) {
            report.ok = false;
            report.message = "frame is not right-handed";
        }
    } else if (norm_res_12 > kPoseTolerance) {
        report.ok = false;
        report.message = "normal is not unit length";
    }
    return report;
}

std::vector<SweepAngle> alpha_grid(int count)
{
    if (count < 2)
        throw InvalidArgument("alpha grid needs at least 2 points");
    std::vector<SweepAngle> grid;
    grid.reserve(static_cast<std::size_t>(count));
    const double step = 2.0 * std::numbers::pi / count;
    for (int k = 0; k < count; ++k)
        grid.emplace_back(k * step);
    return grid;
}

} // namespace tricoil
