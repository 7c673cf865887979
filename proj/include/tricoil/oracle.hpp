// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tricoil/circuit.hpp"
#include "tricoil/magnetics.hpp"

namespace tricoil {

/// Seeded source of uniform unit vectors.
///
/// Engine: std::mt19937_64 (its output sequence is fixed by the standard).
/// Uniform doubles take the top 53 bits of one draw, u = (x >> 11) * 2^-53.
/// Normals use the basic Box-Muller transform, producing two values per pair
/// of uniforms (the first uniform is shifted to (0, 1]). A unit vector is
/// three consecutive normals divided by their norm. std::normal_distribution
/// is avoided because its output differs between standard libraries.
class UnitSphereSampler {
public:
    explicit UnitSphereSampler(std::uint64_t seed);

    double uniform();
    double normal();
    Vec3 unit_vector();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct OracleReport {
    std::string claim;
    double closed_form = 0.0;
    double oracle_best = 0.0;
    /// (oracle_best - closed_form) / max(|closed_form|, 1e-30)
    double gap = 0.0;
    long long samples = 0;
    std::uint64_t seed = 0;
    bool passed = true;
    bool low_confidence = false;
    /// verify_weight_step only: max_n a_n^2 and 1 - rule / concentration.
    double concentration = 0.0;
    double rule_shortfall = 0.0;
    std::string note;
};

double relative_gap(double oracle, double closed_form);

inline constexpr long long kMinConfidentSamples = 1000;

/// Checks the eigenvector transmit step against `samples` random unit
/// currents. closed_form and oracle_best are Rayleigh quotients of Q; the
/// claim passes when no sample beats the closed form by more than 1e-9
/// relative. Fewer than 1000 samples sets low_confidence.
OracleReport verify_current_step(const MutualMatrix& m, const CombinerWeights& s, long long samples,
                                 std::uint64_t seed);

/// Compares the proportional receive-weight rule with a grid search over
/// s^2 on the simplex (step 1/grid) and with the analytic concentration
/// bound max_n a_n^2. closed_form = rule objective, oracle_best = grid best.
OracleReport verify_weight_step(const MutualMatrix& m, const DriveVector& i, int grid);

struct DipoleExpansionReport {
    OracleReport first_row;  // T1 expansion vs dipole kernel
    OracleReport second_row; // T2 expansion as printed vs dipole kernel
    OracleReport third_row;  // T3 expansion vs dipole kernel
};

/// Random geometries: offsets with components in [-3, 3] (|r| >= 0.1),
/// random unit receive normals, 10 turns and 0.1 m radius. Differences are
/// measured relative to the coupling scale mu0 N^2 S^2 / (4 pi r^3) of each
/// trial. Rows one and three pass at 1e-12; row two reports its largest
/// deviation and passes when that deviation is non-zero.
DipoleExpansionReport verify_dipole_expansion(int trials, std::uint64_t seed);

} // namespace tricoil
