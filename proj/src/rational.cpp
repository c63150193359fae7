#include "diffeo/rational.hpp"

#include <mutex>
#include <vector>

namespace diffeo {

Rational ratio(BigInt num, BigInt den) {
    if (den == 0) throw ZeroDenominator("rational with denominator 0");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

BigInt factorial(unsigned n) {
    static std::vector<BigInt> cache{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) cache.push_back(cache.back() * BigInt(cache.size()));
    return cache[n];
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num, den = 1;
    try {
        num = BigInt(std::string(text.substr(0, slash)));
        if (slash != std::string_view::npos) den = BigInt(std::string(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal '" + std::string(text) + "'");
    }
    if (den == 0) throw ParseError("rational '" + std::string(text) + "' has zero denominator");
    return ratio(num, den);
}

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace diffeo
