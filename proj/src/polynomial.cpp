#include "diffeo/polynomial.hpp"

#include <cctype>

#include "diffeo/errors.hpp"

namespace diffeo {

std::uint64_t monomial_degree(const Monomial& m) {
    std::uint64_t degree = 0;
    for (const auto& [var, exp] : m) degree += exp;
    return degree;
}

bool GrlexGreater::operator()(const Monomial& lhs, const Monomial& rhs) const {
    const auto dl = monomial_degree(lhs), dr = monomial_degree(rhs);
    if (dl != dr) return dl > dr;
    // Equal degree: the monomial with the higher exponent on the earliest
    // differing alphabet variable comes first.
    auto it = lhs.begin(), jt = rhs.begin();
    while (it != lhs.end() && jt != rhs.end()) {
        if (it->first != jt->first) return it->first < jt->first;
        if (it->second != jt->second) return it->second > jt->second;
        ++it;
        ++jt;
    }
    return it != lhs.end();
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(long long constant) : Polynomial(Rational(constant)) {}

Polynomial Polynomial::variable(Indeterminate v) {
    Polynomial p;
    p.terms_.emplace(Monomial{{v, 1}}, Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial " + str());
    return terms_.begin()->second;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t degree = 0;
    for (const auto& [m, c] : terms_) degree = std::max(degree, monomial_degree(m));
    return degree;
}

std::set<Indeterminate> Polynomial::variables() const {
    std::set<Indeterminate> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m) vars.insert(var);
    return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial result = *this;
    for (auto& [m, c] : result.terms_) c = -c;
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial result;
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            Monomial product = ml;
            for (const auto& [var, exp] : mr) product[var] += exp;
            result.add_term(product, cl * cr);
        }
    }
    return result;
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
    if (scalar == 0) return {};
    Polynomial result = p;
    for (auto& [m, c] : result.terms_) c *= scalar;
    return result;
}

Polynomial operator*(const Polynomial& p, const Rational& scalar) { return scalar * p; }

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result{1};
    for (std::uint32_t i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

namespace {

Rational rational_pow(const Rational& base, std::uint32_t exponent) {
    Rational result(1);
    for (std::uint32_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace

Rational Polynomial::eval(const std::map<Indeterminate, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (const auto& [var, exp] : m) {
            auto it = assignment.find(var);
            if (it == assignment.end()) throw MissingAssignment(var.name());
            value *= rational_pow(it->second, exp);
        }
        total += value;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<Indeterminate, Rational>& assignment) const {
    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        Monomial remaining;
        for (const auto& [var, exp] : m) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                remaining.emplace(var, exp);
            else
                value *= rational_pow(it->second, exp);
        }
        result.add_term(remaining, value);
    }
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += rational_str(negative ? Rational(-c) : c);
        for (const auto& [var, exp] : m) {
            out += "*" + var.name();
            if (exp > 1) out += "^" + std::to_string(exp);
        }
    }
    return out;
}

namespace {

// Recursive-descent parser for the canonical grammar
//   poly := term (('+'|'-') term)*
//   term := coef ('*' var ('^' exp)?)*  |  var ('^' exp)? ('*' var ('^' exp)?)*
//   coef := int | int '/' int
// Printing always emits an explicit coefficient; parsing is liberal and also
// accepts terms that start with a bare variable.
class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial result;
        skip_spaces();
        if (done()) throw ParseError("empty polynomial");
        bool negative = consume_sign();
        result += parse_term(negative);
        skip_spaces();
        while (!done()) {
            char op = peek();
            if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', got '") + op + "'");
            ++pos_;
            skip_spaces();
            result += parse_term(op == '-');
            skip_spaces();
        }
        return result;
    }

  private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_spaces() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool consume_sign() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            bool negative = peek() == '-';
            ++pos_;
            skip_spaces();
            return negative;
        }
        return false;
    }

    std::string read_while(bool (*pred)(char)) {
        std::string out;
        while (!done() && pred(peek())) out += text_[pos_++];
        return out;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_name_char(char c) {
        return is_digit(c) || c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }

    BigInt parse_int() {
        std::string digits = read_while(&is_digit);
        if (digits.empty()) throw ParseError("expected integer at position " + std::to_string(pos_));
        return BigInt(digits);
    }

    Rational parse_coef() {
        BigInt num = parse_int();
        skip_spaces();
        if (!done() && peek() == '/') {
            ++pos_;
            skip_spaces();
            BigInt den = parse_int();
            if (den == 0) throw ParseError("coefficient with zero denominator");
            return ratio(num, den);
        }
        return Rational(num);
    }

    Indeterminate parse_var() {
        std::string name = read_while(&is_name_char);
        auto var = Indeterminate::from_name(name);
        if (!var) throw ParseError("unknown indeterminate '" + name + "'");
        return *var;
    }

    std::uint32_t parse_exponent() {
        skip_spaces();
        if (done() || peek() != '^') return 1;
        ++pos_;
        skip_spaces();
        BigInt exp = parse_int();
        if (exp < 1 || exp > 1000000) throw ParseError("exponent out of range");
        return static_cast<std::uint32_t>(exp);
    }

    Polynomial parse_term(bool negative) {
        skip_spaces();
        if (done()) throw ParseError("dangling sign");
        Rational coeff(1);
        Monomial mono;
        const auto read_factor = [&] {
            const Indeterminate var = parse_var();
            mono[var] += parse_exponent();
            skip_spaces();
        };
        if (is_digit(peek())) {
            coeff = parse_coef();
            skip_spaces();
        } else {
            read_factor();
        }
        while (!done() && peek() == '*') {
            ++pos_;
            skip_spaces();
            read_factor();
        }
        if (negative) coeff = -coeff;
        return Polynomial::term(coeff, mono);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace diffeo
