// SPDX-License-Identifier: Apache-2.0
#include "tricoil/circuit.hpp"

#include <cmath>
#include <limits>

#include "tricoil/error.hpp"

namespace tricoil {

void LinkParams::validate() const
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(omega))
        throw InvalidArgument("omega must be positive");
    if (!positive(r_t))
        throw InvalidArgument("r_t must be positive");
    if (!positive(z_r))
        throw InvalidArgument("z_r must be positive");
    if (!positive(z_l))
        throw InvalidArgument("z_l must be positive");
    if (!positive(p0))
        throw InvalidArgument("p0 must be positive");
}

double LinkParams::load_factor() const
{
    const double z = z_r + z_l;
    return z_l * omega * omega / (z * z);
}

CombinerWeights::CombinerWeights(const Vec3& s) : s_(s)
{
    if (!is_finite(s) || std::abs(dot(s, s) - 1.0) > 1e-12)
        throw InvalidArgument("receive weights must have unit square-sum");
}

CombinerWeights CombinerWeights::equal()
{
    const double w = 1.0 / std::sqrt(3.0);
    return CombinerWeights(Vec3{w, w, w});
}

std::array<std::complex<double>, 3> receive_voltage(const MutualMatrix& m, const DriveVector& i,
                                                    double omega)
{
    const Vec3 coupled = m.coupling_rows() * i;
    return {std::complex<double>(0.0, omega * coupled.x), std::complex<double>(0.0, omega * coupled.y),
            std::complex<double>(0.0, omega * coupled.z)};
}

double beam_gain(const MutualMatrix& m, const DriveVector& i, const CombinerWeights& s)
{
    const Vec3 a = m.coupling_rows() * i;
    double g = 0.0;
    for (int n = 0; n < 3; ++n) {
        const double y = s[n] * a[n];
        g += y * y;
    }
    return g;
}

double receive_power(const MutualMatrix& m, const DriveVector& i, const CombinerWeights& s,
                     const LinkParams& p)
{
    return p.load_factor() * beam_gain(m, i, s);
}

double transmit_power(const DriveVector& i, double r_t)
{
    return r_t * dot(i, i);
}

double pathloss_db(const MutualMatrix& m, const DriveVector& i, const CombinerWeights& s,
                   const LinkParams& p)
{
    const double pt = transmit_power(i, p.r_t);
    if (!(pt > 0.0))
        throw InvalidArgument("pathloss needs a non-zero transmit current");
    const double ratio = beam_gain(m, i, s) / pt * p.load_factor();
    if (!(ratio > 0.0))
        return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(ratio);
}

} // namespace tricoil
