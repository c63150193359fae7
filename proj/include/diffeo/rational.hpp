#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "diffeo/errors.hpp"

namespace diffeo {

// Exact arbitrary-precision scalars. cpp_rational keeps the canonical form we
// rely on everywhere: denominator > 0, fully reduced, zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sign-normalizing constructor; cpp_rational itself rejects negative denominators.
Rational ratio(BigInt num, BigInt den);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Accepts "int" or "int/int" with an optional leading sign.
Rational parse_rational(std::string_view text);

std::string rational_str(const Rational& r);

}  // namespace diffeo
