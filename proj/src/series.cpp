#include "diffeo/series.hpp"

#include <string>

#include "diffeo/bell.hpp"
#include "diffeo/errors.hpp"

namespace diffeo {

Series::Series(SeriesKind kind, int order) : kind_(kind), order_(order) {
    if (order < 0) throw OrderUnderflow("series with truncation order " + std::to_string(order));
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::identity(SeriesKind kind, int order) {
    Series s(kind, order);
    if (order >= 1) s.set_coeff(1, Polynomial{1});
    return s;
}

const Polynomial& Series::coeff(int n) const {
    if (n < 0 || n > order_)
        throw std::out_of_range("series coefficient " + std::to_string(n) + " beyond truncation order " +
                                std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(int n, Polynomial value) {
    if (n < 0 || n > order_)
        throw std::out_of_range("series coefficient " + std::to_string(n) + " beyond truncation order " +
                                std::to_string(order_));
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

Series Series::to_kind(SeriesKind target) const {
    if (target == kind_) return *this;
    Series result(target, order_);
    for (int n = 0; n <= order_; ++n) {
        const BigInt nfact = factorial(static_cast<unsigned>(n));
        result.set_coeff(n, target == SeriesKind::EGF ? Rational(nfact) * coeff(n)
                                                      : ratio(1, nfact) * coeff(n));
    }
    return result;
}

Series Series::truncated(int new_order) const {
    if (new_order > order_)
        throw std::out_of_range("truncated() cannot raise the order; use padded_as_polynomial");
    Series result(kind_, new_order);
    for (int n = 0; n <= new_order; ++n) result.set_coeff(n, coeff(n));
    return result;
}

Series Series::padded_as_polynomial(int new_order) const {
    if (new_order < order_) return truncated(new_order);
    Series result(kind_, new_order);
    for (int n = 0; n <= order_; ++n) result.set_coeff(n, coeff(n));
    return result;
}

Series Series::scaled(const Rational& factor) const {
    Series result(kind_, order_);
    for (int n = 0; n <= order_; ++n) result.set_coeff(n, factor * coeff(n));
    return result;
}

Series Series::scaled_variable(const Rational& factor) const {
    Series result(kind_, order_);
    Rational power(1);
    for (int n = 0; n <= order_; ++n) {
        result.set_coeff(n, power * coeff(n));
        power *= factor;
    }
    return result;
}

Series Series::shifted_up() const {
    Series result(kind_, order_ + 1);
    for (int n = 0; n <= order_; ++n) {
        if (kind_ == SeriesKind::OGF) {
            result.set_coeff(n + 1, coeff(n));
        } else {
            // t * c_n t^n/n! = (n+1) c_n t^{n+1}/(n+1)!
            result.set_coeff(n + 1, Rational(n + 1) * coeff(n));
        }
    }
    return result;
}

Series Series::derived() const {
    if (order_ == 0) throw OrderUnderflow("derivative of an order-0 series");
    Series result(kind_, order_ - 1);
    for (int n = 0; n < order_; ++n)
        result.set_coeff(n, kind_ == SeriesKind::EGF ? coeff(n + 1) : Rational(n + 1) * coeff(n + 1));
    return result;
}

Series Series::integrated() const {
    Series result(kind_, order_ + 1);
    for (int n = 0; n <= order_; ++n)
        result.set_coeff(n + 1, kind_ == SeriesKind::EGF ? coeff(n) : ratio(1, n + 1) * coeff(n));
    return result;
}

Series Series::t_derivative() const {
    Series result(kind_, order_);
    for (int n = 0; n <= order_; ++n) result.set_coeff(n, Rational(n) * coeff(n));
    return result;
}

namespace {

int common_order(const Series& f, const Series& g) { return std::min(f.order(), g.order()); }

void require_same_kind(const Series& f, const Series& g, const char* op) {
    if (f.kind() != g.kind()) throw std::logic_error(std::string(op) + " requires matching series kinds");
}

}  // namespace

Series series_add(const Series& f, const Series& g) {
    require_same_kind(f, g, "series_add");
    Series result(f.kind(), common_order(f, g));
    for (int n = 0; n <= result.order(); ++n) result.set_coeff(n, f.coeff(n) + g.coeff(n));
    return result;
}

Series series_sub(const Series& f, const Series& g) {
    require_same_kind(f, g, "series_sub");
    Series result(f.kind(), common_order(f, g));
    for (int n = 0; n <= result.order(); ++n) result.set_coeff(n, f.coeff(n) - g.coeff(n));
    return result;
}

Series series_mul(const Series& f, const Series& g) {
    require_same_kind(f, g, "series_mul");
    Series result(f.kind(), common_order(f, g));
    for (int n = 0; n <= result.order(); ++n) {
        Polynomial acc;
        for (int s = 0; s <= n; ++s) {
            if (f.coeff(s).is_zero() || g.coeff(n - s).is_zero()) continue;
            Polynomial product = f.coeff(s) * g.coeff(n - s);
            if (f.kind() == SeriesKind::EGF)
                product = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(s))) * product;
            acc += product;
        }
        result.set_coeff(n, std::move(acc));
    }
    return result;
}

Series compose(const Series& f, const Series& g) {
    if (f.kind() != SeriesKind::EGF || g.kind() != SeriesKind::EGF)
        throw std::logic_error("compose requires EGF operands");
    if (f.order() != g.order())
        throw OrderMismatch("compose requires equal truncation orders (" + std::to_string(f.order()) +
                            " vs " + std::to_string(g.order()) + ")");
    if (!g.coeff(0).is_zero()) throw NonzeroConstantTerm("inner series of compose: " + g.coeff(0).str());

    const int order = f.order();
    BellArgs args;
    args.x.reserve(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) args.x.push_back(g.coeff(n));
    BellTable table(std::move(args));

    Series result(SeriesKind::EGF, order);
    for (int n = 0; n <= order; ++n) {
        Polynomial acc;
        for (int k = 0; k <= n; ++k) {
            if (f.coeff(k).is_zero()) continue;
            const Polynomial& bell = table.fast(n, k);
            if (bell.is_zero()) continue;
            acc += f.coeff(k) * bell;
        }
        result.set_coeff(n, std::move(acc));
    }
    return result;
}

Series invert(const Series& f) {
    if (f.order() < 1) throw OrderUnderflow("invert needs at least truncation order 1");
    if (!f.coeff(0).is_zero()) throw NotInvertible("constant term must be 0, got " + f.coeff(0).str());
    if (!(f.coeff(1) == Polynomial{1}))
        throw NotInvertible("linear coefficient must be 1, got " + f.coeff(1).str());

    // Work on OGF coefficients; undetermined coefficients order by order:
    // [t^n] f(g(t)) = g_n + (terms of f_k, k >= 2, in g_1..g_{n-1}) = 0.
    const Series f_ogf = f.to_kind(SeriesKind::OGF);
    const int order = f.order();
    std::vector<Polynomial> g(static_cast<std::size_t>(order) + 1);
    g[1] = Polynomial{1};
    for (int n = 2; n <= order; ++n) {
        // Powers of the partial inverse, truncated at t^n; g has no constant
        // term, so [t^n] g^k never touches the still-unknown g_n for k >= 2.
        std::vector<Polynomial> power(static_cast<std::size_t>(n) + 1);  // power[m] = [t^m] g^k
        for (std::size_t m = 1; m < static_cast<std::size_t>(n); ++m) power[m] = g[m];
        Polynomial correction;
        for (int k = 2; k <= n; ++k) {
            std::vector<Polynomial> next(static_cast<std::size_t>(n) + 1);
            for (int m = k; m <= n; ++m) {
                Polynomial acc;
                for (int s = 1; s <= m - k + 1; ++s) {
                    if (g[static_cast<std::size_t>(s)].is_zero()) continue;
                    const Polynomial& tail = power[static_cast<std::size_t>(m - s)];
                    if (tail.is_zero()) continue;
                    acc += g[static_cast<std::size_t>(s)] * tail;
                }
                next[static_cast<std::size_t>(m)] = std::move(acc);
            }
            power = std::move(next);
            if (!f_ogf.coeff(k).is_zero() && !power[static_cast<std::size_t>(n)].is_zero())
                correction += f_ogf.coeff(k) * power[static_cast<std::size_t>(n)];
        }
        g[static_cast<std::size_t>(n)] = -correction;
    }

    Series result(SeriesKind::OGF, order);
    for (int n = 1; n <= order; ++n) result.set_coeff(n, g[static_cast<std::size_t>(n)]);
    return result.to_kind(f.kind());
}

Diffeomorphism Diffeomorphism::symbolic(int order) {
    if (order < 1) throw std::invalid_argument("diffeomorphism order must be >= 1");
    std::vector<Polynomial> a;
    a.reserve(static_cast<std::size_t>(order));
    a.push_back(Polynomial{1});
    for (int j = 1; j < order; ++j) a.push_back(Polynomial::variable(Indeterminate::a(j)));
    return Diffeomorphism(std::move(a));
}

Diffeomorphism Diffeomorphism::with_coeffs(int order, const std::map<int, Rational>& values) {
    Diffeomorphism diffeo = symbolic(order);
    for (const auto& [j, value] : values) {
        if (j < 1 || j >= order)
            throw std::out_of_range("coefficient a_" + std::to_string(j) + " outside order " +
                                    std::to_string(order));
        diffeo.a_[static_cast<std::size_t>(j)] = Polynomial{value};
    }
    return diffeo;
}

const Polynomial& Diffeomorphism::a(int j) const {
    if (j < 0 || j >= order())
        throw std::out_of_range("diffeomorphism coefficient a_" + std::to_string(j) + " beyond order " +
                                std::to_string(order()));
    return a_[static_cast<std::size_t>(j)];
}

Series series_from_diffeo(const Diffeomorphism& diffeo) {
    Series result(SeriesKind::OGF, diffeo.order());
    for (int j = 0; j < diffeo.order(); ++j) result.set_coeff(j + 1, diffeo.a(j));
    return result;
}

}  // namespace diffeo
