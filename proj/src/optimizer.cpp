// SPDX-License-Identifier: Apache-2.0
#include "tricoil/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tricoil/error.hpp"

namespace tricoil {

namespace {

double max_abs(const Mat3& q)
{
    double s = 0.0;
    for (const auto& r : q)
        for (double v : r)
            s = std::max(s, std::abs(v));
    return s;
}

double det(const Mat3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Vec3 normalized(const Vec3& v) { return v / norm(v); }

void apply_sign_convention(Vec3& v)
{
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(v[i]) > std::abs(v[k]))
            k = i;
    if (v[k] < 0.0)
        v = -v;
}

/// Eigenvector of b for an eigenvalue `lambda` of multiplicity one.
/// Returns false when (b - lambda I) is numerically zero.
bool isolated_eigenvector(const Mat3& b, double lambda, Vec3& out)
{
    const Vec3 r0{b[0][0] - lambda, b[0][1], b[0][2]};
    const Vec3 r1{b[1][0], b[1][1] - lambda, b[1][2]};
    const Vec3 r2{b[2][0], b[2][1], b[2][2] - lambda};
    const std::array<Vec3, 3> candidates{cross(r0, r1), cross(r0, r2), cross(r1, r2)};
    int best = 0;
    double best_norm = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double n = norm(candidates[i]);
        if (n > best_norm) {
            best_norm = n;
            best = i;
        }
    }
    if (!(best_norm > 1e-30))
        return false;
    out = candidates[best] / best_norm;
    return true;
}

/// Deterministic orthonormal pair spanning the plane orthogonal to unit v.
std::pair<Vec3, Vec3> complement(const Vec3& v)
{
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(v[i]) < std::abs(v[k]))
            k = i;
    Vec3 axis{};
    axis[k] = 1.0;
    const Vec3 u = normalized(cross(v, axis));
    return {u, cross(v, u)};
}

double quad(const Mat3& b, const Vec3& a, const Vec3& c) { return dot(a, b * c); }

/// One cyclic Jacobi sweep on D = V^T B V; rotates the columns of V.
void jacobi_sweep(const Mat3& b, std::array<Vec3, 3>& v)
{
    constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (auto [p, q] : pairs) {
        const double dpq = quad(b, v[p], v[q]);
        if (dpq == 0.0)
            continue;
        const double dpp = quad(b, v[p], v[p]);
        const double dqq = quad(b, v[q], v[q]);
        const double theta = 0.5 * std::atan2(2.0 * dpq, dpp - dqq);
        const double c = std::cos(theta), s = std::sin(theta);
        const Vec3 vp = c * v[p] + s * v[q];
        const Vec3 vq = -s * v[p] + c * v[q];
        v[p] = vp;
        v[q] = vq;
    }
}

} // namespace

std::array<EigenPair, 3> symmetric_eig3(const Mat3& q)
{
    for (const auto& r : q)
        for (double x : r)
            if (!std::isfinite(x))
                throw InvalidArgument("matrix has non-finite entries");

    const double scale = max_abs(q);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(q[i][j] - q[j][i]) > 1e-12 * scale)
                throw InvalidArgument("matrix is not symmetric");

    if (scale == 0.0)
        return {{{0.0, {1, 0, 0}}, {0.0, {0, 1, 0}}, {0.0, {0, 0, 1}}}};

    Mat3 b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b[i][j] = 0.5 * (q[i][j] + q[j][i]) / scale;

    const double off = b[0][1] * b[0][1] + b[0][2] * b[0][2] + b[1][2] * b[1][2];
    const double mean = (b[0][0] + b[1][1] + b[2][2]) / 3.0;
    const double spread2 = (b[0][0] - mean) * (b[0][0] - mean) + (b[1][1] - mean) * (b[1][1] - mean) +
                           (b[2][2] - mean) * (b[2][2] - mean) + 2.0 * off;
    const double spread = std::sqrt(spread2 / 6.0);

    std::array<Vec3, 3> basis{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    if (spread > 1e-15) {
        Mat3 c = b;
        for (int i = 0; i < 3; ++i)
            c[i][i] -= mean;
        for (auto& r : c)
            for (double& x : r)
                x /= spread;
        const double half_det = std::clamp(det(c) / 2.0, -1.0, 1.0);
        const double phi = std::acos(half_det) / 3.0;
        const double l1 = mean + 2.0 * spread * std::cos(phi);
        const double l3 = mean + 2.0 * spread * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
        const double l2 = 3.0 * mean - l1 - l3;

        const double isolated = (l1 - l2 >= l2 - l3) ? l1 : l3;
        Vec3 v0;
        if (isolated_eigenvector(b, isolated, v0)) {
            auto [u, w] = complement(v0);
            const double a00 = quad(b, u, u), a01 = quad(b, u, w), a11 = quad(b, w, w);
            const double theta = 0.5 * std::atan2(2.0 * a01, a00 - a11);
            const double ct = std::cos(theta), st = std::sin(theta);
            basis = {v0, ct * u + st * w, -st * u + ct * w};
            jacobi_sweep(b, basis);
        }
    }

    std::array<EigenPair, 3> pairs;
    for (int i = 0; i < 3; ++i) {
        Vec3 v = normalized(basis[i]);
        apply_sign_convention(v);
        pairs[i] = {quad(b, v, v) * scale, v};
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const EigenPair& x, const EigenPair& y) { return x.value > y.value; });
    return pairs;
}

Mat3 beam_form_matrix(const MutualMatrix& m, const CombinerWeights& s)
{
    const Mat3 a = m.coupling_rows();
    Mat3 q{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int n = 0; n < 3; ++n)
                q[i][j] += a[n][i] * s[n] * s[n] * a[n][j];
    return q;
}

DriveVector optimal_current(const MutualMatrix& m, const CombinerWeights& s, const LinkParams& p)
{
    p.validate();
    const Mat3 q = beam_form_matrix(m, s);
    const auto eig = symmetric_eig3(q);
    const double top = eig[0].value;
    if (!(top > 0.0))
        throw NoCoupling("beamforming matrix vanishes; no transmit direction couples");

    const Mat3 a = m.coupling_rows();
    Vec3 chosen = eig[0].vector;
    double chosen_coupling = norm(a * chosen);
    for (int k = 1; k < 3; ++k) {
        if (top - eig[k].value > 1e-9 * top)
            break;
        const double c = norm(a * eig[k].vector);
        if (c > chosen_coupling) {
            chosen = eig[k].vector;
            chosen_coupling = c;
        }
    }
    return std::sqrt(p.p0 / p.r_t) * chosen;
}

CombinerWeights optimal_weights(const MutualMatrix& m, const DriveVector& i)
{
    const Vec3 a = m.coupling_rows() * i;
    const double len = norm(a);
    if (!(len > 0.0))
        throw NoCoupling("no receive coil sees the transmitted field");
    Vec3 s{std::abs(a.x) / len, std::abs(a.y) / len, std::abs(a.z) / len};
    // Renormalize once so the unit square-sum holds to rounding.
    s = s / norm(s);
    return CombinerWeights(s);
}

std::size_t OptimizationTrace::best_index() const
{
    if (entries.empty())
        throw InvalidArgument("empty optimization trace");
    std::size_t best = 0;
    for (std::size_t k = 1; k < entries.size(); ++k)
        if (entries[k].pathloss_db < entries[best].pathloss_db)
            best = k;
    return best;
}

OptimizationTrace alternate(const MutualMatrix& m, const LinkParams& p, const CombinerWeights& s0,
                            double delta, int max_iter)
{
    if (!(delta > 0.0))
        throw InvalidArgument("convergence threshold must be positive");
    if (max_iter < 1)
        throw InvalidArgument("max_iter must be >= 1");
    p.validate();

    OptimizationTrace trace;
    trace.delta = delta;
    CombinerWeights s = s0;
    for (int n = 1; n <= max_iter; ++n) {
        const DriveVector current = optimal_current(m, s, p);
        s = optimal_weights(m, current);
        const double loss = pathloss_db(m, current, s, p);
        trace.entries.push_back({n, current, s, loss});
        if (n >= 2) {
            const double prev = trace.entries[trace.entries.size() - 2].pathloss_db;
            if (std::abs(loss - prev) <= delta) {
                trace.converged = true;
                break;
            }
        }
    }
    return trace;
}

} // namespace tricoil
