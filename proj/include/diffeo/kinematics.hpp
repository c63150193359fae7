#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "diffeo/polynomial.hpp"
#include "diffeo/rng.hpp"

namespace diffeo {

// Subset of external legs {1..n}, bit i-1 for leg i. Every edge of a tree
// carries the momentum sum of the legs below it.
using LegSet = std::uint32_t;

int leg_count(LegSet legs);

// (sum of momenta over P)^2 with external legs on shell: |P| M + 2 sum_{i<j in P} s_i_j.
Polynomial square_momentum(LegSet legs);

// Exact rational assignment to M and the s_i_j, for polynomial identity
// testing of amplitude expressions with propagator denominators.
struct KinematicPoint {
    Rational mass_sq;
    std::map<std::pair<int, int>, Rational> dot;  // key (i,j) with i < j

    std::map<Indeterminate, Rational> assignment() const;
};

// A point is valid when no propagator denominator (sum of momenta)^2 - M over
// any leg subset of size >= 2 vanishes.
bool kinematic_point_valid(const KinematicPoint& point, int n);

// Integer components uniform in [-10^6, 10^6], resampled until valid for n legs.
KinematicPoint sample_kinematic_point(int n, SplitMix64& rng);

Rational square_momentum_value(LegSet legs, const KinematicPoint& point);

}  // namespace diffeo
