#include <doctest.h>

#include <functional>
#include <map>
#include <vector>

#include "diffeo/amplitudes.hpp"
#include "diffeo/bell.hpp"
#include "diffeo/errors.hpp"

using namespace diffeo;

namespace {

// Total-partition count by the species recurrence, computed over integer
// partition classes with multinomial weights; independent of the streaming
// enumerator.
BigInt tree_count_oracle(int n, std::map<int, BigInt>& memo) {
    if (n == 1) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    BigInt total = 0;
    // Integer partitions of n into k >= 2 parts, as multiplicity vectors.
    std::vector<int> parts;
    const std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
        if (remaining == 0) {
            if (parts.size() < 2) return;
            // number of set partitions with these block sizes: n! / (prod size!^mult mult!)
            BigInt ways = factorial(static_cast<unsigned>(n));
            int run = 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                ways /= factorial(static_cast<unsigned>(parts[i]));
                if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
                    ++run;
                } else {
                    ways /= factorial(static_cast<unsigned>(run));
                    run = 1;
                }
            }
            BigInt product = ways;
            for (int part : parts) product *= tree_count_oracle(part, memo);
            total += product;
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            recurse(remaining - part, part);
            parts.pop_back();
        }
    };
    recurse(n, n - 1);  // max_part n-1: at least two blocks

    memo.emplace(n, total);
    return total;
}

KinematicPoint fixed_point(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return sample_kinematic_point(n, rng);
}

// Weight of a monomial with weight(a_j) = j; the compositional-inverse grading.
std::uint64_t a_weight(const Monomial& monomial) {
    std::uint64_t weight = 0;
    for (const auto& [var, exp] : monomial) {
        REQUIRE(var.kind == VarKind::DiffeoCoeff);
        weight += static_cast<std::uint64_t>(var.i) * exp;
    }
    return weight;
}

}  // namespace

TEST_CASE("vertex coefficient polynomials") {
    const FeynmanRules rules{Diffeomorphism::symbolic(6)};
    CHECK(rules.d_coeff(1).str() == "4*a1");
    CHECK(rules.d_coeff(2).str() == "8*a1^2 + 12*a2");
    CHECK(rules.c_coeff(1).str() == "12*a1");
    CHECK(rules.c_coeff(2).str() == "24*a1^2 + 48*a2");
    CHECK(rules.d_coeff(0) == Polynomial{1});
    CHECK(rules.c_coeff(0) == Polynomial{2});
}

TEST_CASE("square momentum expansion") {
    CHECK(square_momentum(0b1).str() == "1*M");
    CHECK(square_momentum(0b11).str() == "2*M + 2*s_1_2");
    CHECK(square_momentum(0b111).str() == "3*M + 2*s_1_2 + 2*s_1_3 + 2*s_2_3");
    CHECK_THROWS_AS(square_momentum(0), std::invalid_argument);
}

TEST_CASE("square momentum value matches the symbolic expansion") {
    const KinematicPoint point = fixed_point(4, 5);
    for (LegSet legs : {0b1u, 0b101u, 0b1111u})
        CHECK(square_momentum_value(legs, point) == square_momentum(legs).eval(point.assignment()));
}

TEST_CASE("tree enumeration counts") {
    CHECK(count_enumerated_trees(1) == 1);
    CHECK(count_enumerated_trees(2) == 1);
    CHECK(count_enumerated_trees(3) == 4);
    CHECK(count_enumerated_trees(4) == 26);
    CHECK(count_enumerated_trees(5) == 236);
    CHECK(count_enumerated_trees(6) == 2752);
}

TEST_CASE("tree enumeration matches the species recurrence up to n = 7") {
    std::map<int, BigInt> memo;
    for (int n = 1; n <= 7; ++n)
        CHECK(BigInt(count_enumerated_trees(n)) == tree_count_oracle(n, memo));
}

TEST_CASE("enumerated trees are well formed") {
    enumerate_trees(4, [&](const Tree& tree) {
        REQUIRE(tree.legs == 0b1111u);
        const std::function<void(const Tree&)> walk = [&](const Tree& node) {
            if (node.is_leaf()) {
                CHECK(node.legs == (1u << (node.leaf - 1)));
                return;
            }
            CHECK(node.children.size() >= 2);  // internal degree >= 3
            LegSet seen = 0;
            for (const Tree& child : node.children) {
                CHECK((seen & child.legs) == 0);
                seen |= child.legs;
                walk(child);
            }
            CHECK(seen == node.legs);
        };
        walk(tree);
    });
}

TEST_CASE("tree values reproduce the worked examples") {
    const FeynmanRules rules{Diffeomorphism::symbolic(5)};
    const KinematicPoint point = fixed_point(4, 11);

    // n = 1: bare leg, value 1.
    enumerate_trees(1, [&](const Tree& tree) { CHECK(tree_value(tree, rules, point) == Polynomial{1}); });

    // n = 2: the single cherry gives -2 a1 at any valid point.
    enumerate_trees(2, [&](const Tree& tree) {
        CHECK(tree_value(tree, rules, point) == Polynomial::parse("-2*a1"));
    });

    // n = 3: the four trees sum to 12 a1^2 - 6 a2.
    CHECK(b_direct(3, rules, point) == Polynomial::parse("12*a1^2 - 6*a2"));
}

TEST_CASE("b values by every route") {
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(6);
    const FeynmanRules rules{diffeo};
    const KinematicPoint point = fixed_point(5, 21);

    CHECK(b_direct(1, rules, point) == Polynomial{1});
    CHECK(b_direct(2, rules, point) == Polynomial::parse("-2*a1"));
    CHECK(b_recurrence(2, rules, point) == Polynomial::parse("-2*a1"));
    CHECK(b_recurrence(3, rules, point) == Polynomial::parse("12*a1^2 - 6*a2"));
    CHECK(b_closed(1, diffeo) == Polynomial{1});
    CHECK(b_closed(2, diffeo) == Polynomial::parse("-2*a1"));
    CHECK(b_closed(3, diffeo) == Polynomial::parse("12*a1^2 - 6*a2"));
    CHECK(b_closed(4, diffeo) == Polynomial::parse("-120*a1^3 + 120*a1*a2 - 24*a3"));
    CHECK(b_inverse(3, diffeo) == Polynomial::parse("12*a1^2 - 6*a2"));

    for (int n = 1; n <= 5; ++n) {
        const Polynomial closed = b_closed(n, diffeo);
        CHECK(b_direct(n, rules, point) == closed);
        CHECK(b_recurrence(n, rules, point) == closed);
        CHECK(b_inverse(n, diffeo) == closed);
    }
}

TEST_CASE("route agreement report") {
    const Report report = check_b_agreement(5, 8, 42);
    CHECK(report.all_ok());
    CHECK(report.items.size() == 8 + 2 * 5);
}

TEST_CASE("kinematic independence of b_direct") {
    const Report report = check_amplitude_independence(5, 8, 42);
    CHECK(report.all_ok());
}

TEST_CASE("onshell amplitude check") {
    CHECK(onshell_amplitude_check(3, 6, 7).all_ok());
    CHECK(onshell_amplitude_check(4, 6, 7).all_ok());
    CHECK_THROWS_AS(onshell_amplitude_check(2, 5, 7), std::invalid_argument);
}

TEST_CASE("homogeneity: monomials of b_n carry weight n-1") {
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(10);
    for (int n = 1; n <= 10; ++n) {
        const Polynomial b = b_closed(n, diffeo);
        for (const auto& [monomial, coeff] : b.terms())
            CHECK(a_weight(monomial) == static_cast<std::uint64_t>(n - 1));
    }
}

TEST_CASE("degenerate kinematic points raise ZeroDenominator") {
    KinematicPoint degenerate;
    degenerate.mass_sq = Rational(0);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) degenerate.dot[{i, j}] = Rational(0);
    CHECK(!kinematic_point_valid(degenerate, 3));
    const FeynmanRules rules{Diffeomorphism::symbolic(4)};
    CHECK_THROWS_AS(b_direct(3, rules, degenerate), ZeroDenominator);
    CHECK_THROWS_AS(b_recurrence(3, rules, degenerate), ZeroDenominator);
}

TEST_CASE("sampled points are valid and reproducible") {
    SplitMix64 rng_a(424242), rng_b(424242);
    const KinematicPoint pa = sample_kinematic_point(5, rng_a);
    const KinematicPoint pb = sample_kinematic_point(5, rng_b);
    CHECK(pa.mass_sq == pb.mass_sq);
    CHECK(pa.dot == pb.dot);
    CHECK(kinematic_point_valid(pa, 5));
}
