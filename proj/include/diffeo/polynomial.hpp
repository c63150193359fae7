#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "diffeo/indeterminate.hpp"
#include "diffeo/rational.hpp"

namespace diffeo {

// Exponent vector, sparse: only strictly positive exponents are stored.
using Monomial = std::map<Indeterminate, std::uint32_t>;

// Graded-lex order, largest first: higher total degree wins, ties broken by the
// exponent of the earliest alphabet variable. Gives the canonical printing order.
struct GrlexGreater {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

std::uint64_t monomial_degree(const Monomial& m);

// Multivariate polynomial over Rational in the closed alphabet. Immutable in
// spirit: all operations return new values, stored terms are never zero.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long long constant);
    static Polynomial variable(Indeterminate v);
    static Polynomial term(const Rational& coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The coefficient of the empty monomial (the whole value when is_constant()).
    Rational constant_value() const;
    const TermMap& terms() const { return terms_; }
    std::uint64_t total_degree() const;
    std::set<Indeterminate> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Rational& scalar, const Polynomial& p);
    Polynomial pow(std::uint32_t exponent) const;

    // Total evaluation; throws MissingAssignment if a variable is unassigned.
    Rational eval(const std::map<Indeterminate, Rational>& assignment) const;
    // Partial evaluation: assigned variables are replaced, others stay symbolic.
    Polynomial substitute(const std::map<Indeterminate, Rational>& assignment) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    // Canonical string form, e.g. "12*a1^2 - 6*a2"; parse() round-trips it.
    std::string str() const;
    static Polynomial parse(std::string_view text);

  private:
    void add_term(const Monomial& m, const Rational& coeff);
    TermMap terms_;
};

Polynomial operator*(const Polynomial& p, const Rational& scalar);

}  // namespace diffeo
