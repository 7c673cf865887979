// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tricoil/vec3.hpp"

namespace tricoil {

/// How the receiver triad is built from the sweep angle.
///   Orthonormal  - Gram-Schmidt corrected, always a right-handed orthonormal frame.
///   PaperLiteral - n2 = c/|c|, n3 = n1 x n2 as printed; generally not orthogonal.
enum class FrameMode { Orthonormal, PaperLiteral };

std::string_view to_string(FrameMode mode);
FrameMode frame_mode_from_string(std::string_view name);

/// Receiver rotation angle, wrapped into [0, 2pi).
class SweepAngle {
public:
    explicit SweepAngle(double radians);
    double radians() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Center of a coil triad and the normals of its three coils.
struct TriadPose {
    Vec3 center;
    std::array<Vec3, 3> normals;

    friend bool operator==(const TriadPose&, const TriadPose&) = default;
};

/// Canonical basis at `center`, normals (x, y, z).
TriadPose canonical_pose(const Vec3& center = {});

/// Receiver triad for rotation angle alpha. The center is left at the origin;
/// callers place it.
TriadPose receiver_pose_from_alpha(SweepAngle alpha, FrameMode mode = FrameMode::Orthonormal);

struct PoseValidation {
    bool ok = true;
    double max_norm_residual = 0.0;        // max_i | |n_i| - 1 |
    double max_orthogonality_residual = 0.0; // max_{i<j} |n_i . n_j|
    double handedness_residual = 0.0;      // | n1 x n2 - n3 |
    std::string message;
};

/// Never throws. In orthonormal mode any residual above 1e-9 fails; in
/// paper-literal mode only the unit-norm check of n1 and n2 and finiteness
/// can fail, the other residuals are reported as-is.
PoseValidation validate_pose(const TriadPose& pose, FrameMode mode = FrameMode::Orthonormal);

/// `count` uniformly spaced angles over [0, 2pi) starting at 0.
std::vector<SweepAngle> alpha_grid(int count);

} // namespace tricoil
