#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace diffeo {

// Closed variable alphabet. Enumerator order is the canonical alphabet order:
//   a1 < a2 < ... < x1 < x2 < ... < M < s_1_2 < s_1_3 < ... < l3 < l4 < ...
enum class VarKind : std::uint8_t {
    DiffeoCoeff = 0,  // a_j, j >= 1 : diffeomorphism coefficients
    BellArg = 1,      // x_j, j >= 1 : generic Bell polynomial arguments
    MassSq = 2,       // M           : squared mass m^2
    DotProduct = 3,   // s_i_j, i<j  : momentum dot products p_i . p_j
    Coupling = 4,     // l_s, s >= 3 : interaction couplings lambda_s
};

struct Indeterminate {
    VarKind kind{VarKind::MassSq};
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    static Indeterminate a(std::uint32_t idx);
    static Indeterminate x(std::uint32_t idx);
    static Indeterminate mass_sq();
    static Indeterminate s(std::uint32_t i, std::uint32_t j);
    static Indeterminate coupling(std::uint32_t s);

    std::string name() const;
    // Validates against the closed alphabet; nullopt on anything else.
    static std::optional<Indeterminate> from_name(std::string_view text);

    auto operator<=>(const Indeterminate&) const = default;
};

}  // namespace diffeo
