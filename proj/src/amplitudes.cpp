#include "diffeo/amplitudes.hpp"

#include <string>

#include "diffeo/bell.hpp"
#include "diffeo/errors.hpp"
#include "diffeo/parallel.hpp"

namespace diffeo {

const Polynomial& FeynmanRules::d_coeff(int r) const {
    if (r < 0) throw std::invalid_argument("d_coeff requires r >= 0");
    auto it = d_memo_.find(r);
    if (it != d_memo_.end()) return it->second;
    Polynomial sum;
    for (int j = 0; j <= r; ++j)
        sum += Rational((j + 1) * (r - j + 1)) * (diffeo_.a(j) * diffeo_.a(r - j));
    Polynomial value = Rational(factorial(static_cast<unsigned>(r))) * sum;
    return d_memo_.emplace(r, std::move(value)).first->second;
}

const Polynomial& FeynmanRules::c_coeff(int r) const {
    if (r < 0) throw std::invalid_argument("c_coeff requires r >= 0");
    auto it = c_memo_.find(r);
    if (it != c_memo_.end()) return it->second;
    Polynomial sum;
    for (int j = 0; j <= r; ++j) sum += diffeo_.a(j) * diffeo_.a(r - j);
    Polynomial value = Rational(factorial(static_cast<unsigned>(r + 2))) * sum;
    return c_memo_.emplace(r, std::move(value)).first->second;
}

namespace {

// Multiplies the vertex factor of `node` and all its descendants into
// `numerator` and collects the propagator denominator of the edge above each
// internal vertex.
void accumulate_tree(const Tree& node, const FeynmanRules& rules, const KinematicPoint& point,
                     Polynomial& numerator, Rational& denominator, int& vertex_count) {
    if (node.is_leaf()) return;
    ++vertex_count;

    const int degree = static_cast<int>(node.children.size()) + 1;
    Rational incident_sq = square_momentum_value(node.legs, point);  // parent edge
    for (const Tree& child : node.children) incident_sq += square_momentum_value(child.legs, point);

    const Polynomial vertex = ratio(1, 2) * (incident_sq * rules.d_coeff(degree - 2) -
                                             point.mass_sq * rules.c_coeff(degree - 2));
    numerator = numerator * vertex;

    const Rational prop = square_momentum_value(node.legs, point) - point.mass_sq;
    if (prop == 0)
        throw ZeroDenominator("propagator on leg set " + std::to_string(node.legs) +
                              " vanishes at this kinematic point");
    denominator *= prop;

    for (const Tree& child : node.children) accumulate_tree(child, rules, point, numerator, denominator, vertex_count);
}

}  // namespace

Polynomial tree_value(const Tree& tree, const FeynmanRules& rules, const KinematicPoint& point) {
    Polynomial numerator{1};
    Rational denominator{1};
    int vertex_count = 0;
    accumulate_tree(tree, rules, point, numerator, denominator, vertex_count);
    Rational scale = Rational(1) / denominator;
    if (vertex_count % 2 != 0) scale = -scale;
    return scale * numerator;
}

Polynomial b_direct(int n, const FeynmanRules& rules, const KinematicPoint& point) {
    if (n < 1) throw std::invalid_argument("b_direct requires n >= 1");
    Polynomial sum;
    enumerate_trees(n, [&](const Tree& tree) { sum += tree_value(tree, rules, point); });
    return sum;
}

namespace {

Polynomial b_recurrence_impl(int n, const FeynmanRules& rules, const KinematicPoint& point,
                             std::map<int, Polynomial>& memo) {
    if (n == 1) return Polynomial{1};
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    const LegSet all = (1u << n) - 1;
    const Rational total_sq = square_momentum_value(all, point);
    const Rational denom = total_sq - point.mass_sq;
    if (denom == 0) throw ZeroDenominator("off-shell edge denominator vanishes");

    Polynomial sum;
    for_each_set_partition(n, 0, [&](const std::vector<std::vector<int>>& partition) {
        const int k = static_cast<int>(partition.size());
        if (k < 2) return;

        Polynomial sub_product{1};
        Rational blocks_sq(0);
        for (const auto& block : partition) {
            LegSet legs = 0;
            for (int leg : block) legs |= 1u << (leg - 1);
            blocks_sq += square_momentum_value(legs, point);
            sub_product = sub_product *
                          b_recurrence_impl(static_cast<int>(block.size()), rules, point, memo);
        }

        Polynomial inner;
        for (int j = 0; j <= k - 1; ++j) {
            const Rational bracket = -point.mass_sq * Rational((k + 1) * k) +
                                     Rational((j + 1) * (k - j)) * (blocks_sq + total_sq);
            inner += bracket * (rules.diffeo().a(j) * rules.diffeo().a(k - 1 - j));
        }
        const Rational weight = Rational(factorial(static_cast<unsigned>(k - 1))) / (2 * denom);
        sum += weight * (sub_product * inner);
    });

    Polynomial value = -sum;
    memo.emplace(n, value);
    return value;
}

}  // namespace

Polynomial b_recurrence(int n, const FeynmanRules& rules, const KinematicPoint& point) {
    if (n < 1) throw std::invalid_argument("b_recurrence requires n >= 1");
    std::map<int, Polynomial> memo;
    return b_recurrence_impl(n, rules, point, memo);
}

Polynomial b_closed(int n, const Diffeomorphism& diffeo) {
    if (n < 1) throw std::invalid_argument("b_closed requires n >= 1");
    if (n == 1) return Polynomial{1};
    const int m = n - 1;  // formula index: b_{m+1} from B_{m,k}
    BellArgs args;
    args.x.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j)
        args.x.push_back(-(Rational(factorial(static_cast<unsigned>(j))) * diffeo.a(j)));
    BellTable table(std::move(args));

    Polynomial sum;
    for (int k = 1; k <= m; ++k) {
        const Polynomial& bell = table.fast(m, k);
        if (bell.is_zero()) continue;
        sum += ratio(factorial(static_cast<unsigned>(m + k)), factorial(static_cast<unsigned>(m))) * bell;
    }
    return sum;
}

Polynomial b_inverse(int n, const Diffeomorphism& diffeo) {
    if (n < 1) throw std::invalid_argument("b_inverse requires n >= 1");
    if (diffeo.order() < n)
        throw std::out_of_range("diffeomorphism order too small for b_" + std::to_string(n));
    const Series inverse = invert(series_from_diffeo(diffeo));
    return Rational(factorial(static_cast<unsigned>(n))) * inverse.coeff(n);
}

Report check_amplitude_independence(int n_max, int trials, std::uint64_t seed) {
    if (n_max < 2) throw std::invalid_argument("check_amplitude_independence requires n_max >= 2");
    if (trials < 1) throw std::invalid_argument("check_amplitude_independence requires trials >= 1");
    Report report;
    report.suite = "amplitudes";

    SplitMix64 rng(seed);
    std::vector<KinematicPoint> points;
    points.reserve(static_cast<std::size_t>(trials));
    for (int trial = 0; trial < trials; ++trial) points.push_back(sample_kinematic_point(n_max, rng));

    for (int m = 2; m <= n_max; ++m) {
        std::vector<Polynomial> values(static_cast<std::size_t>(trials));
        parallel_for(trials, [&](int trial) {
            // Per-task rules object: the d/c memo tables are not shared.
            const FeynmanRules rules{Diffeomorphism::symbolic(m + 1)};
            values[static_cast<std::size_t>(trial)] = b_direct(m, rules, points[static_cast<std::size_t>(trial)]);
        });
        for (int trial = 1; trial < trials; ++trial) {
            report.record("b" + std::to_string(m) + " trial=" + std::to_string(trial),
                          values[static_cast<std::size_t>(trial)] == values[0],
                          values[static_cast<std::size_t>(trial)].str(), values[0].str());
        }
    }
    return report;
}

Report check_b_agreement(int tree_max, int closed_max, std::uint64_t seed) {
    if (tree_max < 1 || closed_max < tree_max)
        throw std::invalid_argument("check_b_agreement requires 1 <= tree_max <= closed_max");
    Report report;
    report.suite = "b-agreement";

    const Diffeomorphism diffeo = Diffeomorphism::symbolic(closed_max + 1);
    const FeynmanRules rules{diffeo};
    SplitMix64 rng(seed);
    const KinematicPoint point = sample_kinematic_point(tree_max, rng);
    const Series inverse = invert(series_from_diffeo(diffeo));

    for (int n = 1; n <= closed_max; ++n) {
        const Polynomial closed = b_closed(n, diffeo);
        const Polynomial from_inverse =
            Rational(factorial(static_cast<unsigned>(n))) * inverse.coeff(n);
        report.record("closed=inverse n=" + std::to_string(n), closed == from_inverse, closed.str(),
                      from_inverse.str());
        if (n <= tree_max) {
            const Polynomial direct = b_direct(n, rules, point);
            const Polynomial recurrence = b_recurrence(n, rules, point);
            report.record("direct=closed n=" + std::to_string(n), direct == closed, direct.str(),
                          closed.str());
            report.record("recurrence=closed n=" + std::to_string(n), recurrence == closed,
                          recurrence.str(), closed.str());
        }
    }
    return report;
}

Report onshell_amplitude_check(int n, int trials, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("onshell_amplitude_check requires n >= 3");
    if (trials < 1) throw std::invalid_argument("onshell_amplitude_check requires trials >= 1");
    Report report;
    report.suite = "amplitude-independence";

    const int legs = n - 1;
    const FeynmanRules rules{Diffeomorphism::symbolic(n)};
    SplitMix64 rng(seed);

    Polynomial reference;
    for (int trial = 0; trial < trials; ++trial) {
        const KinematicPoint point = sample_kinematic_point(legs, rng);
        const Polynomial value = b_direct(legs, rules, point);
        if (trial == 0) {
            reference = value;
            report.record("b" + std::to_string(legs) + " trial=0 (reference)", true);
        } else {
            report.record("b" + std::to_string(legs) + " trial=" + std::to_string(trial),
                          value == reference, value.str(), reference.str());
        }
    }
    return report;
}

}  // namespace diffeo
