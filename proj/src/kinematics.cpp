#include "diffeo/kinematics.hpp"

#include <bit>
#include <stdexcept>

namespace diffeo {

int leg_count(LegSet legs) { return std::popcount(legs); }

Polynomial square_momentum(LegSet legs) {
    if (legs == 0) throw std::invalid_argument("square_momentum of empty leg set");
    Polynomial result = Rational(leg_count(legs)) * Polynomial::variable(Indeterminate::mass_sq());
    for (int i = 1; i <= 32; ++i) {
        if (!(legs & (1u << (i - 1)))) continue;
        for (int j = i + 1; j <= 32; ++j) {
            if (!(legs & (1u << (j - 1)))) continue;
            result += Rational(2) * Polynomial::variable(Indeterminate::s(static_cast<std::uint32_t>(i),
                                                                          static_cast<std::uint32_t>(j)));
        }
    }
    return result;
}

std::map<Indeterminate, Rational> KinematicPoint::assignment() const {
    std::map<Indeterminate, Rational> values;
    values.emplace(Indeterminate::mass_sq(), mass_sq);
    for (const auto& [key, value] : dot)
        values.emplace(Indeterminate::s(static_cast<std::uint32_t>(key.first),
                                        static_cast<std::uint32_t>(key.second)),
                       value);
    return values;
}

Rational square_momentum_value(LegSet legs, const KinematicPoint& point) {
    Rational result = Rational(leg_count(legs)) * point.mass_sq;
    for (int i = 1; i <= 32; ++i) {
        if (!(legs & (1u << (i - 1)))) continue;
        for (int j = i + 1; j <= 32; ++j) {
            if (!(legs & (1u << (j - 1)))) continue;
            auto it = point.dot.find({i, j});
            if (it == point.dot.end())
                throw std::out_of_range("kinematic point lacks s_" + std::to_string(i) + "_" +
                                        std::to_string(j));
            result += 2 * it->second;
        }
    }
    return result;
}

bool kinematic_point_valid(const KinematicPoint& point, int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("kinematic point for 1..20 legs only");
    const LegSet all = (n == 32) ? ~0u : ((1u << n) - 1);
    for (LegSet subset = 1; subset <= all; ++subset) {
        if ((subset & all) != subset || leg_count(subset) < 2) continue;
        if (square_momentum_value(subset, point) == point.mass_sq) return false;
    }
    return true;
}

KinematicPoint sample_kinematic_point(int n, SplitMix64& rng) {
    constexpr std::int64_t kRange = 1000000;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        KinematicPoint point;
        point.mass_sq = rng.uniform_rational(-kRange, kRange);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) point.dot.emplace(std::pair{i, j}, rng.uniform_rational(-kRange, kRange));
        if (kinematic_point_valid(point, n)) return point;
    }
    throw std::runtime_error("could not sample a non-degenerate kinematic point");
}

}  // namespace diffeo
