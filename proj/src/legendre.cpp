#include "diffeo/legendre.hpp"

#include <string>

#include "diffeo/amplitudes.hpp"
#include "diffeo/errors.hpp"

namespace diffeo {

ActionSeries::ActionSeries(Series series) : a(std::move(series)) {
    if (a.kind() != SeriesKind::OGF) a = a.to_kind(SeriesKind::OGF);
    if (a.order() < 2) throw NotInvertible("action series needs truncation order >= 2");
    if (!a.coeff(0).is_zero() || !a.coeff(1).is_zero())
        throw NotInvertible("action series must have zero constant and linear coefficients");
    if (!a.coeff(2).is_constant() || a.coeff(2).constant_value() == 0)
        throw NotInvertible("action series needs an invertible quadratic coefficient, got " +
                            a.coeff(2).str());
}

ActionSeries build_A(const Diffeomorphism& diffeo, int order) {
    if (order < 2) throw NotInvertible("build_A needs order >= 2");
    if (diffeo.order() < order - 1)
        throw std::out_of_range("build_A at order " + std::to_string(order) +
                                " needs diffeomorphism coefficients up to a_" + std::to_string(order - 2));
    Series a(SeriesKind::OGF, order);
    for (int k = 2; k <= order; ++k) a.set_coeff(k, ratio(-1, k) * diffeo.a(k - 2));
    return ActionSeries{std::move(a)};
}

Series legendre_transform(const ActionSeries& action, int order) {
    if (order < 2) throw NotInvertible("legendre_transform needs order >= 2");
    if (order > action.a.order())
        throw std::out_of_range("legendre_transform at order " + std::to_string(order) +
                                " exceeds the action's truncation order " +
                                std::to_string(action.a.order()));
    const Series a = action.a.truncated(order);

    // A' = alpha * u with u tangent to the identity; then A'^{-1}(y) = u^{-1}(y/alpha).
    const Series a_prime = a.derived();  // order - 1
    const Rational alpha = a_prime.coeff(1).constant_value();
    const Series normalized = a_prime.scaled(Rational(1) / alpha);
    const Series inverse_prime =
        invert(normalized).scaled_variable(Rational(1) / alpha).padded_as_polynomial(order);
    // The padding coefficient at t^order is never used: A has no linear term,
    // so [t^order] A(g) only involves g up to order-1.

    const Series a_of_g =
        compose(a.to_kind(SeriesKind::EGF), inverse_prime.to_kind(SeriesKind::EGF)).to_kind(SeriesKind::OGF);
    const Series x_times_g = inverse_prime.truncated(order - 1).shifted_up();
    return series_sub(a_of_g, x_times_g).reflected();
}

namespace {

// Plane rooted trees with a given number of leaves, every internal vertex with
// >= 2 children, streamed as profiles. Children are ordered, so a profile's
// multiplicity counts embeddings: compositions of the leaves over the children.
void profile_recurse(int leaves, TreeProfile& profile, const std::function<void()>& done);

// Distributes `remaining` leaves over `slots` ordered child subtrees.
void compose_children(int remaining, int slots, TreeProfile& profile,
                      const std::function<void()>& done) {
    if (slots == 0) {
        if (remaining == 0) done();
        return;
    }
    for (int first = 1; first <= remaining - (slots - 1); ++first) {
        profile_recurse(first, profile,
                        [&] { compose_children(remaining - first, slots - 1, profile, done); });
    }
}

// Calls done() once per plane tree with the tree's vertices accumulated in `profile`.
void profile_recurse(int leaves, TreeProfile& profile, const std::function<void()>& done) {
    if (leaves == 1) {
        done();
        return;
    }
    for (int arity = 2; arity <= leaves; ++arity) {
        ++profile[arity - 1];  // root has `arity` children: profile index j = arity - 1
        compose_children(leaves, arity, profile, done);
        if (--profile[arity - 1] == 0) profile.erase(arity - 1);
    }
}

}  // namespace

std::map<TreeProfile, BigInt> rooted_tree_profile_counts(int leaves) {
    if (leaves < 1) throw std::invalid_argument("trees need at least one leaf");
    std::map<TreeProfile, BigInt> counts;
    TreeProfile profile;
    profile_recurse(leaves, profile, [&] { counts[profile] += 1; });
    return counts;
}

Series loday_inverse(const Diffeomorphism& diffeo, int order) {
    Series result(SeriesKind::OGF, order);
    if (order >= 1) result.set_coeff(1, Polynomial{1});
    for (int n = 1; n + 1 <= order; ++n) {
        Polynomial r_n;
        for (const auto& [profile, count] : rooted_tree_profile_counts(n + 1)) {
            int vertices = 0;
            Polynomial monomial{1};
            for (const auto& [j, m] : profile) {
                vertices += m;
                monomial = monomial * diffeo.a(j).pow(static_cast<std::uint32_t>(m));
            }
            const Rational sign = vertices % 2 == 0 ? Rational(count) : Rational(-count);
            r_n += sign * monomial;
        }
        result.set_coeff(n + 1, std::move(r_n));
    }
    return result;
}

Report check_legendre_b_relation(int order) {
    Report report;
    report.suite = "legendre";
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(order);
    const Series transform = legendre_transform(build_A(diffeo, order), order).to_kind(SeriesKind::EGF);
    for (int n = 3; n <= order; ++n) {
        const Polynomial& lhs = transform.coeff(n);
        const Polynomial rhs = b_closed(n - 1, diffeo);
        report.record("legendre-b n=" + std::to_string(n), lhs == rhs, lhs.str(), rhs.str());
    }
    return report;
}

Report check_loday_vs_invert(int order) {
    Report report;
    report.suite = "loday";
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(order);
    const Series trees = loday_inverse(diffeo, order);
    const Series inverse = invert(series_from_diffeo(diffeo));
    for (int n = 1; n <= order; ++n) {
        report.record("loday n=" + std::to_string(n), trees.coeff(n) == inverse.coeff(n),
                      trees.coeff(n).str(), inverse.coeff(n).str());
    }
    return report;
}

}  // namespace diffeo
