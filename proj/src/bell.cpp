#include "diffeo/bell.hpp"

#include <stdexcept>
#include <string>

#include "diffeo/errors.hpp"

namespace diffeo {

BellArgs BellArgs::symbolic(int count) {
    BellArgs args;
    args.x.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) args.x.push_back(Polynomial::variable(Indeterminate::x(i)));
    return args;
}

const Polynomial& BellArgs::at(int index_1based) const {
    if (index_1based < 1 || index_1based > size())
        throw std::out_of_range("BellArgs: x_" + std::to_string(index_1based) + " not provided (have " +
                                std::to_string(size()) + ")");
    return x[static_cast<std::size_t>(index_1based - 1)];
}

namespace {

// Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
// Prunes branches that cannot end with the requested block count.
void rgs_recurse(int n, int blocks, std::vector<int>& rgs, int used, int pos,
                 const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (pos == n) {
        if (blocks != 0 && used != blocks) return;
        std::vector<std::vector<int>> partition(static_cast<std::size_t>(used));
        for (int i = 0; i < n; ++i) partition[static_cast<std::size_t>(rgs[i])].push_back(i + 1);
        visit(partition);
        return;
    }
    const int remaining = n - pos;
    for (int b = 0; b <= used; ++b) {
        const int final_blocks = b == used ? used + 1 : used;
        if (blocks != 0 && (final_blocks > blocks || final_blocks + remaining - 1 < blocks)) continue;
        rgs[pos] = b;
        rgs_recurse(n, blocks, rgs, final_blocks, pos + 1, visit);
    }
}

}  // namespace

void for_each_set_partition(int n, int blocks,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (n < 0) throw std::invalid_argument("set partition of negative ground set");
    if (n == 0) {
        if (blocks == 0) visit({});
        return;
    }
    if (blocks > n) return;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    rgs_recurse(n, blocks, rgs, 0, 0, visit);
}

Polynomial bell_oracle(int n, int k, const BellArgs& args) {
    if (n < 0 || k < 0) throw std::invalid_argument("bell_oracle requires n, k >= 0");
    if (n == 0 && k == 0) return Polynomial{1};
    if (k > n || k == 0) return Polynomial{};
    Polynomial sum;
    for_each_set_partition(n, k, [&](const std::vector<std::vector<int>>& partition) {
        Polynomial product{1};
        for (const auto& block : partition) product = product * args.at(static_cast<int>(block.size()));
        sum += product;
    });
    return sum;
}

const Polynomial& BellTable::fast(int n, int k) const {
    if (n < 0 || k < 0) throw std::invalid_argument("bell_fast requires n, k >= 0");
    auto it = memo_.find({n, k});
    if (it != memo_.end()) return it->second;

    Polynomial value;
    if (n == 0 && k == 0) {
        value = Polynomial{1};
    } else if (k >= 1 && k <= n) {
        // k B_{n,k} = sum_{s=1}^{n-k+1} C(n,s) x_s B_{n-s,k-1}
        Polynomial sum;
        for (int s = 1; s <= n - k + 1; ++s) {
            const Polynomial& sub = fast(n - s, k - 1);
            if (sub.is_zero()) continue;
            sum += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(s))) *
                   (args_.at(s) * sub);
        }
        value = ratio(1, k) * sum;
    }
    return memo_.emplace(std::pair{n, k}, std::move(value)).first->second;
}

Polynomial bell_fast(int n, int k, const BellArgs& args) { return BellTable(args).fast(n, k); }

namespace {

std::string nk_name(const char* prefix, int n, int k) {
    return std::string(prefix) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

}  // namespace

Report check_genfunc_definition(int n_max, int k_max) {
    Report report;
    report.suite = "genfunc";
    BellTable table(BellArgs::symbolic(n_max + 1));

    // exp(u sum_m x_m t^m / m!) = sum_{n,k} B_{n,k} t^n/n! u^k: the coefficient
    // of u^k is S(t)^k / k! with S = sum_m x_m t^m/m!, an EGF whose n-th
    // coefficient must be B_{n,k}. Powers are expanded by binomial convolution.
    std::vector<Polynomial> s_coeffs(static_cast<std::size_t>(n_max) + 1);
    for (int m = 1; m <= n_max; ++m) s_coeffs[static_cast<std::size_t>(m)] = table.args().at(m);

    std::vector<Polynomial> power(static_cast<std::size_t>(n_max) + 1);  // S^k, EGF coefficients
    power[0] = Polynomial{1};
    for (int k = 0; k <= k_max; ++k) {
        const Rational inv_kfact = ratio(1, factorial(static_cast<unsigned>(k)));
        for (int n = 0; n <= n_max; ++n) {
            const Polynomial lhs = inv_kfact * power[static_cast<std::size_t>(n)];
            const Polynomial& rhs = table.fast(n, k);
            report.record(nk_name("genfunc", n, k), lhs == rhs, lhs.str(), rhs.str());
        }
        if (k == k_max) break;
        std::vector<Polynomial> next(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) {
            Polynomial acc;
            for (int s = 0; s <= n; ++s) {
                if (power[static_cast<std::size_t>(s)].is_zero()) continue;
                acc += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(s))) *
                       (power[static_cast<std::size_t>(s)] * s_coeffs[static_cast<std::size_t>(n - s)]);
            }
            next[static_cast<std::size_t>(n)] = std::move(acc);
        }
        power = std::move(next);
    }
    return report;
}

Report check_lemma_localization(int n_max) {
    Report report;
    report.suite = "localization";
    BellTable table(BellArgs::symbolic(n_max));
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            Polynomial rhs_blocks, rhs_elements;
            for (int s = 1; s <= n; ++s) {
                const Polynomial& sub = table.fast(n - s, k - 1);
                if (sub.is_zero()) continue;
                const Rational binom(binomial(static_cast<unsigned>(n), static_cast<unsigned>(s)));
                const Polynomial common = table.args().at(s) * sub;
                rhs_blocks += binom * common;
                rhs_elements += (binom * Rational(s)) * common;
            }
            const Polynomial lhs_blocks = Rational(k) * table.fast(n, k);
            const Polynomial lhs_elements = Rational(n) * table.fast(n, k);
            report.record(nk_name("localization-blocks", n, k), lhs_blocks == rhs_blocks,
                          lhs_blocks.str(), rhs_blocks.str());
            report.record(nk_name("localization-elements", n, k), lhs_elements == rhs_elements,
                          lhs_elements.str(), rhs_elements.str());
        }
    }
    return report;
}

Report check_starter(int n_max) {
    Report report;
    report.suite = "starter";
    BellTable table(BellArgs::symbolic(n_max + 1));
    // B_{n+1,k+1} = sum_{alpha=0}^{n-k} C(n,alpha) x_{alpha+1} B_{n-alpha,k}
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            Polynomial rhs;
            for (int alpha = 0; alpha <= n - k; ++alpha) {
                const Polynomial& sub = table.fast(n - alpha, k);
                if (sub.is_zero()) continue;
                rhs += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(alpha))) *
                       (table.args().at(alpha + 1) * sub);
            }
            const Polynomial& lhs = table.fast(n + 1, k + 1);
            report.record(nk_name("starter", n, k), lhs == rhs, lhs.str(), rhs.str());
        }
    }
    return report;
}

namespace {

// Identity (7): nested strictly-decreasing chains n > alpha_1 > ... > alpha_k >= 1
// with alpha_i >= k - i + 1, accumulating binomial products and x-factors.
void nested_chain_sum(const BellTable& table, int n, int k, int level, int prev, const Rational& binoms,
                      Polynomial& factors, Polynomial& total) {
    if (level > k) {
        total += binoms * (factors * table.args().at(prev));
        return;
    }
    const int lo = k - level + 1;
    for (int alpha = lo; alpha <= prev - 1; ++alpha) {
        const Rational next_binoms =
            binoms * Rational(binomial(static_cast<unsigned>(prev), static_cast<unsigned>(alpha)));
        Polynomial next_factors = factors * table.args().at(prev - alpha);
        nested_chain_sum(table, n, k, level + 1, alpha, next_binoms, next_factors, total);
    }
}

}  // namespace

Report check_cvijovic(int n_max) {
    Report report;
    report.suite = "cvijovic";
    BellTable table(BellArgs::symbolic(n_max));

    // Identity (5), denominator-cleared:
    // (n-k) x_1 B_{n,k} = sum_{alpha=1}^{n-k} C(n,alpha) [(k+1) - (n+1)/(alpha+1)] x_{alpha+1} B_{n-alpha,k}
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            Polynomial rhs;
            for (int alpha = 1; alpha <= n - k; ++alpha) {
                const Polynomial& sub = table.fast(n - alpha, k);
                if (sub.is_zero()) continue;
                const Rational weight =
                    Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(alpha))) *
                    (Rational(k + 1) - ratio(n + 1, alpha + 1));
                rhs += weight * (table.args().at(alpha + 1) * sub);
            }
            const Polynomial lhs = Rational(n - k) * (table.args().at(1) * table.fast(n, k));
            report.record(nk_name("cvijovic-5", n, k), lhs == rhs, lhs.str(), rhs.str());
        }
    }

    // Identity (6): B_{n,k1+k2} = k1! k2!/(k1+k2)! sum_alpha C(n,alpha) B_{alpha,k1} B_{n-alpha,k2}
    for (int n = 0; n <= n_max; ++n) {
        for (int k1 = 0; k1 <= n; ++k1) {
            for (int k2 = 0; k1 + k2 <= n; ++k2) {
                Polynomial sum;
                for (int alpha = 0; alpha <= n; ++alpha) {
                    const Polynomial& left = table.fast(alpha, k1);
                    if (left.is_zero()) continue;
                    const Polynomial& right = table.fast(n - alpha, k2);
                    if (right.is_zero()) continue;
                    sum += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(alpha))) *
                           (left * right);
                }
                const Rational scale =
                    ratio(factorial(static_cast<unsigned>(k1)) * factorial(static_cast<unsigned>(k2)),
                          factorial(static_cast<unsigned>(k1 + k2)));
                const Polynomial rhs = scale * sum;
                const Polynomial& lhs = table.fast(n, k1 + k2);
                report.record("cvijovic-6 n=" + std::to_string(n) + " k1=" + std::to_string(k1) +
                                  " k2=" + std::to_string(k2),
                              lhs == rhs, lhs.str(), rhs.str());
            }
        }
    }

    // Identity (7): B_{n,k+1} as 1/(k+1)! times the nested chain sum.
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k + 1 <= n; ++k) {
            Polynomial total;
            if (k == 0) {
                total = table.args().at(n);
            } else {
                Polynomial factors{1};
                nested_chain_sum(table, n, k, 1, n, Rational(1), factors, total);
            }
            const Polynomial rhs = ratio(1, factorial(static_cast<unsigned>(k + 1))) * total;
            const Polynomial& lhs = table.fast(n, k + 1);
            report.record(nk_name("cvijovic-7", n, k), lhs == rhs, lhs.str(), rhs.str());
        }
    }
    return report;
}

}  // namespace diffeo
