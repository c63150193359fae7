#pragma once

#include <vector>

#include "diffeo/polynomial.hpp"

namespace diffeo {

enum class SeriesKind { EGF, OGF };

// Truncated formal power series in t with Polynomial coefficients. An EGF
// stores c_n for sum c_n t^n/n!, an OGF stores plain coefficients. The
// truncation order is explicit state: coefficients beyond it are undefined,
// never assumed zero, and binary operations take the minimum of the operands'
// orders.
class Series {
  public:
    Series(SeriesKind kind, int order);

    static Series zero(SeriesKind kind, int order) { return Series(kind, order); }
    // The series t.
    static Series identity(SeriesKind kind, int order);

    SeriesKind kind() const { return kind_; }
    int order() const { return order_; }
    const Polynomial& coeff(int n) const;
    void set_coeff(int n, Polynomial value);

    Series to_kind(SeriesKind target) const;
    Series truncated(int new_order) const;
    // Declares the tail zero up to new_order. Only valid where the caller
    // knows the series is an exact polynomial (e.g. a diffeomorphism's OGF).
    Series padded_as_polynomial(int new_order) const;

    Series scaled(const Rational& factor) const;
    // Substitutes t -> factor * t.
    Series scaled_variable(const Rational& factor) const;
    // Substitutes t -> -t.
    Series reflected() const { return scaled_variable(Rational(-1)); }
    // Multiplies by t (truncation order increases by one).
    Series shifted_up() const;

    Series derived() const;      // d/dt, order drops by one
    Series integrated() const;   // integral with constant 0, order rises by one
    Series t_derivative() const; // t * d/dt, order preserved

    bool operator==(const Series& other) const = default;

  private:
    SeriesKind kind_;
    int order_;
    std::vector<Polynomial> coeffs_;
};

Series series_add(const Series& f, const Series& g);
Series series_sub(const Series& f, const Series& g);
Series series_mul(const Series& f, const Series& g);

// Faa di Bruno composition of EGFs: h_n = sum_k f_k B_{n,k}(g_1, g_2, ...).
// Requires g_0 = 0 and equal kinds/orders.
Series compose(const Series& f, const Series& g);

// Compositional inverse of a series with zero constant term and unit linear
// coefficient, by order-by-order coefficient solving. Result has the same kind.
Series invert(const Series& f);

// Formal power-series reparameterization t -> t + a_1 t^2 + ... tangent to the
// identity; a_0 = 1 always.
class Diffeomorphism {
  public:
    // a_j = the indeterminate a_j for 1 <= j <= order-1.
    static Diffeomorphism symbolic(int order);
    // As symbolic(), with the listed a_j replaced by fixed values.
    static Diffeomorphism with_coeffs(int order, const std::map<int, Rational>& values);

    int order() const { return static_cast<int>(a_.size()); }
    // Coefficient a_j; j = 0 returns 1.
    const Polynomial& a(int j) const;

  private:
    explicit Diffeomorphism(std::vector<Polynomial> a) : a_(std::move(a)) {}
    std::vector<Polynomial> a_;  // a_0 .. a_{order-1}
};

// OGF t + a_1 t^2 + ... + a_{N-1} t^N at truncation N.
Series series_from_diffeo(const Diffeomorphism& diffeo);

}  // namespace diffeo
