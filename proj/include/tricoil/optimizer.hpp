// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tricoil/circuit.hpp"
#include "tricoil/magnetics.hpp"
#include "tricoil/vec3.hpp"

namespace tricoil {

struct EigenPair {
    double value = 0.0;
    Vec3 vector;
};

/// Eigen-decomposition of a real symmetric 3x3 matrix.
///
/// Eigenvalues come from the trigonometric solution of the characteristic
/// cubic; eigenvectors from cross products of (Q - lambda I) for the most
/// isolated eigenvalue and an exact 2x2 rotation in its orthogonal
/// complement; one cyclic Jacobi sweep then polishes the basis. Pairs are
/// returned by descending eigenvalue. Each vector is unit length with its
/// largest-magnitude component positive (first index wins ties).
///
/// Throws InvalidArgument when q is not symmetric to 1e-12 relative.
std::array<EigenPair, 3> symmetric_eig3(const Mat3& q);

/// Q = A^T S^T S A, A the coupling rows of m.
Mat3 beam_form_matrix(const MutualMatrix& m, const CombinerWeights& s);

/// Transmit step: sqrt(P0 / R_t) times the top eigenvector of Q. When the
/// top eigenvalue is degenerate (1e-9 relative) the candidate with the
/// largest coupling norm |A v| is taken. Throws NoCoupling when Q vanishes.
DriveVector optimal_current(const MutualMatrix& m, const CombinerWeights& s, const LinkParams& p);

/// Receive step: s_n = |a_n| / |a| with a = A I. Throws NoCoupling when a = 0.
CombinerWeights optimal_weights(const MutualMatrix& m, const DriveVector& i);

struct TraceEntry {
    int iteration = 0;
    DriveVector current;
    CombinerWeights weights = CombinerWeights::equal();
    double pathloss_db = 0.0;
};

struct OptimizationTrace {
    std::vector<TraceEntry> entries;
    bool converged = false;
    double delta = 0.0;

    int iterations() const { return static_cast<int>(entries.size()); }
    /// Index of the lowest-pathloss entry (first one on ties).
    std::size_t best_index() const;
    const TraceEntry& best() const { return entries.at(best_index()); }
    const TraceEntry& last() const { return entries.back(); }
};

inline constexpr int kDefaultMaxIterations = 100;

/// Alternates the transmit and receive steps starting from weights s0. Stops
/// once |L(n) - L(n-1)| <= delta (dB) or after max_iter rounds; in the latter
/// case converged is false. delta may be +infinity.
OptimizationTrace alternate(const MutualMatrix& m, const LinkParams& p, const CombinerWeights& s0,
                            double delta, int max_iter = kDefaultMaxIterations);

} // namespace tricoil
