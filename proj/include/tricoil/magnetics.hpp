// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>
#include <string_view>

#include "tricoil/geometry.hpp"
#include "tricoil/vec3.hpp"

namespace tricoil {

inline constexpr double kMu0 = 4.0 * std::numbers::pi * 1e-7; // H/m

/// Which closed form evaluates the transmit/receive coupling.
///   Canonical    - general magnetic-dipole kernel, any transmit orientation.
///   PaperLiteral - the per-coil polynomial expansions exactly as published,
///                  including the swapped direction cosines of the second
///                  transmit coil. Requires the axis-aligned transmitter.
enum class FormulaMode { Canonical, PaperLiteral };

std::string_view to_string(FormulaMode mode);
FormulaMode formula_mode_from_string(std::string_view name);

/// One coil of a triad. All three coils of a triad share the same spec.
class CoilSpec {
public:
    CoilSpec(int turns, double radius, double wire_resistance_per_meter);

    int turns() const noexcept { return turns_; }
    double radius() const noexcept { return radius_; }
    double wire_resistance_per_meter() const noexcept { return r0_; }
    double area() const noexcept { return std::numbers::pi * radius_ * radius_; }

    friend bool operator==(const CoilSpec&, const CoilSpec&) = default;

private:
    int turns_;
    double radius_;
    double r0_;
};

/// Mutual inductances between a transmit and a receive triad, in henries.
/// at(i, j) couples transmit coil T_i to receive coil R_j.
struct MutualMatrix {
    Mat3 h{};

    double at(int tx, int rx) const { return h[tx][rx]; }

    /// Row n is the coupling seen by receive coil n: E_n = j w sum_k M(k, n) I_k.
    Mat3 coupling_rows() const { return transpose(h); }

    friend bool operator==(const MutualMatrix&, const MutualMatrix&) = default;
};

/// Transmit triad used throughout: T1 || z, T2 || x, T3 || y, centered at the origin.
TriadPose transmit_pose();

/// mu0 N_t N_r S_t S_r / (4 pi r^3) [3 (n_t.u)(n_r.u) - n_t.n_r], u = offset/|offset|.
double dipole_mutual(const Vec3& n_t, const Vec3& n_r, const Vec3& offset, const CoilSpec& tx,
                     const CoilSpec& rx);

/// Published expansion for transmit coil `tx_index` (0 = T1 along z, 1 = T2
/// along x, 2 = T3 along y) against a receive normal with direction cosines
/// `n_r`. The second coil reproduces the printed cosine assignment.
double paper_expansion(int tx_index, const Vec3& n_r, const Vec3& offset, const CoilSpec& tx,
                       const CoilSpec& rx);

MutualMatrix mutual_matrix(const TriadPose& tx_pose, const TriadPose& rx_pose, const CoilSpec& tx,
                           const CoilSpec& rx, FormulaMode mode = FormulaMode::Canonical);

/// Series resistance of one coil: R0 * 2 pi radius * turns.
double coil_resistance(const CoilSpec& spec);

} // namespace tricoil
