// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>

#include "tricoil/magnetics.hpp"
#include "tricoil/vec3.hpp"

namespace tricoil {

/// Electrical operating point of the link. All impedances are resistive
/// (resonant compensation), all values SI.
struct LinkParams {
    double omega = 0.0; // rad/s
    double r_t = 0.0;   // transmit coil resistance, ohm
    double z_r = 0.0;   // receive coil impedance, ohm
    double z_l = 0.0;   // load impedance, ohm
    double p0 = 0.0;    // transmit power budget, W

    /// Throws InvalidArgument unless every field is finite and positive.
    void validate() const;

    /// Z_L w^2 / (Z_r + Z_L)^2, the constant factor of the receive power.
    double load_factor() const;
};

/// Transmit current amplitudes, amperes.
using DriveVector = Vec3;

/// Receive weights s1..s3 (the diagonal of S). Enforces unit square-sum.
class CombinerWeights {
public:
    /// Throws InvalidArgument unless s1^2 + s2^2 + s3^2 = 1 within 1e-12.
    explicit CombinerWeights(const Vec3& s);

    static CombinerWeights equal();

    const Vec3& values() const noexcept { return s_; }
    double operator[](int i) const { return s_[i]; }

    friend bool operator==(const CombinerWeights&, const CombinerWeights&) = default;

private:
    Vec3 s_;
};

/// E_n = j w sum_k M(k, n) I_k.
std::array<std::complex<double>, 3> receive_voltage(const MutualMatrix& m, const DriveVector& i,
                                                    double omega);

/// I^T A^T S^T S A I with A the coupling rows of m. This is the part of the
/// receive power that depends on the beamformer.
double beam_gain(const MutualMatrix& m, const DriveVector& i, const CombinerWeights& s);

double receive_power(const MutualMatrix& m, const DriveVector& i, const CombinerWeights& s,
                     const LinkParams& p);

double transmit_power(const DriveVector& i, double r_t);

/// -10 log10 of the receive/transmit power ratio, in dB. Returns +infinity
/// when nothing is received. Throws InvalidArgument for a zero drive.
double pathloss_db(const MutualMatrix& m, const DriveVector& i, const CombinerWeights& s,
                   const LinkParams& p);

} // namespace tricoil
