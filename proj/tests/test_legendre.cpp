#include <doctest.h>

#include "diffeo/amplitudes.hpp"
#include "diffeo/errors.hpp"
#include "diffeo/legendre.hpp"
#include "diffeo/rng.hpp"

using namespace diffeo;

namespace {

Diffeomorphism identity_diffeo(int order) {
    std::map<int, Rational> zeros;
    for (int j = 1; j < order; ++j) zeros[j] = Rational(0);
    return Diffeomorphism::with_coeffs(order, zeros);
}

// Plane-tree counts with all internal arities >= 2 satisfy
// n s_n = 3(2n-3) s_{n-1} - (n-3) s_{n-2}; an oracle independent of the
// profile enumeration.
BigInt super_catalan(int leaves) {
    if (leaves <= 2) return 1;
    BigInt prev2 = 1, prev1 = 1;  // s_1, s_2
    for (int n = 3; n <= leaves; ++n) {
        BigInt current = (3 * (2 * n - 3) * prev1 - (n - 3) * prev2) / n;
        prev2 = prev1;
        prev1 = current;
    }
    return prev1;
}

BigInt catalan(int n) {
    return binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n)) / (n + 1);
}

ActionSeries random_action(SplitMix64& rng, int order) {
    Series a(SeriesKind::OGF, order);
    a.set_coeff(2, Polynomial{rng.uniform(0, 1) == 0 ? ratio(1, 2) : ratio(-1, 2)});
    for (int k = 3; k <= order; ++k)
        a.set_coeff(k, Polynomial{ratio(rng.uniform(-8, 8), rng.uniform(1, 5))});
    return ActionSeries{std::move(a)};
}

}  // namespace

TEST_CASE("build_A") {
    const Series identity_action = build_A(identity_diffeo(4), 4).a;
    CHECK(identity_action.coeff(2) == Polynomial{ratio(-1, 2)});
    CHECK(identity_action.coeff(3).is_zero());
    CHECK(identity_action.coeff(4).is_zero());

    const Diffeomorphism diffeo = Diffeomorphism::symbolic(4);
    const Series a = build_A(diffeo, 4).a;
    CHECK(a.coeff(2) == Polynomial{ratio(-1, 2)});
    CHECK(a.coeff(3) == ratio(-1, 3) * Polynomial::variable(Indeterminate::a(1)));
    CHECK(a.coeff(4) == ratio(-1, 4) * Polynomial::variable(Indeterminate::a(2)));

    // F = -dA/dphi, checked term by term.
    const Series minus_f = a.derived();
    const Series f = series_from_diffeo(diffeo).truncated(3);
    for (int n = 0; n <= 3; ++n) CHECK(minus_f.coeff(n) == -f.coeff(n));
}

TEST_CASE("legendre transform of the free action is its negation") {
    const Series lt = legendre_transform(build_A(identity_diffeo(4), 4), 4);
    CHECK(lt.coeff(2) == Polynomial{ratio(1, 2)});
    CHECK(lt.coeff(3).is_zero());
    CHECK(lt.coeff(4).is_zero());
}

TEST_CASE("legendre transform reproduces the one-off-shell-edge series") {
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(6);
    const Series lt = legendre_transform(build_A(diffeo, 6), 6).to_kind(SeriesKind::EGF);
    CHECK(lt.coeff(3) == Polynomial::parse("-2*a1"));                 // b_2
    CHECK(lt.coeff(4) == Polynomial::parse("12*a1^2 - 6*a2"));        // b_3
    CHECK(lt.coeff(5) == b_closed(4, diffeo));
    CHECK(lt.coeff(6) == b_closed(5, diffeo));
}

TEST_CASE("legendre b-relation up to order 10") {
    const Report report = check_legendre_b_relation(10);
    CHECK(report.all_ok());
    CHECK(report.items.size() == 8);
}

TEST_CASE("action series preconditions") {
    Series bad_linear(SeriesKind::OGF, 3);
    bad_linear.set_coeff(1, Polynomial{1});
    bad_linear.set_coeff(2, Polynomial{ratio(-1, 2)});
    CHECK_THROWS_AS(ActionSeries{bad_linear}, NotInvertible);

    Series no_quadratic(SeriesKind::OGF, 3);
    no_quadratic.set_coeff(3, Polynomial{1});
    CHECK_THROWS_AS(ActionSeries{no_quadratic}, NotInvertible);

    Series symbolic_quadratic(SeriesKind::OGF, 3);
    symbolic_quadratic.set_coeff(2, Polynomial::variable(Indeterminate::a(1)));
    CHECK_THROWS_AS(ActionSeries{symbolic_quadratic}, NotInvertible);
}

TEST_CASE("double transform is the reflection") {
    // L(L A)(x) = A(-x): the involution holds composed with parity, a
    // consequence of (LA)' = -(A')^{-1} under this sign convention.
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        const ActionSeries action = random_action(rng, 8);
        const Series once = legendre_transform(action, 8);
        const Series twice = legendre_transform(ActionSeries{once}, 8);
        CHECK(twice == action.a.reflected());
    }
}

TEST_CASE("profile counts") {
    // r_1: a single binary root.
    const auto two_leaves = rooted_tree_profile_counts(2);
    CHECK(two_leaves.size() == 1);
    CHECK(two_leaves.at(TreeProfile{{1, 1}}) == 1);

    // r_2: two plane trees with two binary vertices, one ternary tree.
    const auto three_leaves = rooted_tree_profile_counts(3);
    CHECK(three_leaves.at(TreeProfile{{1, 2}}) == 2);
    CHECK(three_leaves.at(TreeProfile{{2, 1}}) == 1);

    for (int leaves = 2; leaves <= 9; ++leaves) {
        BigInt total = 0;
        BigInt binary = 0;
        for (const auto& [profile, count] : rooted_tree_profile_counts(leaves)) {
            total += count;
            if (profile.size() == 1 && profile.begin()->first == 1) binary = count;
        }
        CHECK(total == super_catalan(leaves));
        CHECK(binary == catalan(leaves - 1));
    }
}

TEST_CASE("loday inversion examples") {
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(4);
    const Series trees = loday_inverse(diffeo, 4);
    CHECK(trees.coeff(1) == Polynomial{1});
    CHECK(trees.coeff(2) == Polynomial::parse("-1*a1"));
    CHECK(trees.coeff(3) == Polynomial::parse("2*a1^2 - 1*a2"));
    CHECK(trees.coeff(4) == Polynomial::parse("-5*a1^3 + 5*a1*a2 - 1*a3"));

    const Series identity_trees = loday_inverse(identity_diffeo(4), 4);
    CHECK(identity_trees == Series::identity(SeriesKind::OGF, 4));
}

TEST_CASE("loday inversion equals series inversion up to order 8") {
    const Report report = check_loday_vs_invert(8);
    CHECK(report.all_ok());
}
