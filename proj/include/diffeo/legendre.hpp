#pragma once

#include <map>

#include "diffeo/rational.hpp"
#include "diffeo/report.hpp"
#include "diffeo/series.hpp"

namespace diffeo {

// Formal action: an OGF with zero constant and linear coefficients and an
// invertible (nonzero constant) quadratic coefficient.
struct ActionSeries {
    Series a;

    explicit ActionSeries(Series series);
};

// A = -(phi^2/2 + a_1 phi^3/3 + ... + a_{N-2} phi^N/N), so that F = -A'.
ActionSeries build_A(const Diffeomorphism& diffeo, int order);

// Combinatorial Legendre transform with the sign convention frozen by the
// tree-amplitude relation: the literal (A o A'^{-1})(x) - x A'^{-1}(x) is
// computed first and then reflected (x -> -x). Under this convention the
// transform of build_A(F) has EGF coefficient b_{n-1} at order n, and applying
// the transform twice returns A(-x).
Series legendre_transform(const ActionSeries& action, int order);

// Child-arity profile of a rooted tree: profile[j] = number of vertices with
// j+1 children.
using TreeProfile = std::map<int, int>;

// Number of plane rooted trees with the given number of leaves per profile;
// every internal vertex has >= 2 children.
std::map<TreeProfile, BigInt> rooted_tree_profile_counts(int leaves);

// Compositional inverse of the diffeomorphism's OGF via the signed
// profile-counted tree sum r_n = sum (-1)^{sum m_j} B(n+1, m_1, ...) prod a_j^{m_j};
// an algorithm fully independent of series inversion.
Series loday_inverse(const Diffeomorphism& diffeo, int order);

// EGF coefficient n of the transform of build_A equals b_{n-1} for 3 <= n <= order.
Report check_legendre_b_relation(int order);

// loday_inverse agrees with series inversion coefficient by coefficient.
Report check_loday_vs_invert(int order);

}  // namespace diffeo
