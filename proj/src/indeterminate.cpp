#include "diffeo/indeterminate.hpp"

#include <cassert>
#include <stdexcept>

namespace diffeo {

namespace {

// Strictly positive decimal with no leading zero; nullopt otherwise.
std::optional<std::uint32_t> parse_index(std::string_view text) {
    if (text.empty() || text.size() > 9) return std::nullopt;
    if (text[0] == '0') return std::nullopt;
    std::uint32_t value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return value;
}

}  // namespace

Indeterminate Indeterminate::a(std::uint32_t idx) {
    assert(idx >= 1);
    return {VarKind::DiffeoCoeff, idx, 0};
}

Indeterminate Indeterminate::x(std::uint32_t idx) {
    assert(idx >= 1);
    return {VarKind::BellArg, idx, 0};
}

Indeterminate Indeterminate::mass_sq() { return {VarKind::MassSq, 0, 0}; }

Indeterminate Indeterminate::s(std::uint32_t i, std::uint32_t j) {
    if (!(i >= 1 && i < j)) throw std::invalid_argument("s_i_j requires 1 <= i < j");
    return {VarKind::DotProduct, i, j};
}

Indeterminate Indeterminate::coupling(std::uint32_t s) {
    if (s < 3) throw std::invalid_argument("coupling l_s requires s >= 3");
    return {VarKind::Coupling, s, 0};
}

std::string Indeterminate::name() const {
    switch (kind) {
        case VarKind::DiffeoCoeff: return "a" + std::to_string(i);
        case VarKind::BellArg: return "x" + std::to_string(i);
        case VarKind::MassSq: return "M";
        case VarKind::DotProduct: return "s_" + std::to_string(i) + "_" + std::to_string(j);
        case VarKind::Coupling: return "l" + std::to_string(i);
    }
    return {};
}

std::optional<Indeterminate> Indeterminate::from_name(std::string_view text) {
    if (text == "M") return mass_sq();
    if (text.size() >= 2 && (text[0] == 'a' || text[0] == 'x' || text[0] == 'l')) {
        auto idx = parse_index(text.substr(1));
        if (!idx) return std::nullopt;
        switch (text[0]) {
            case 'a': return a(*idx);
            case 'x': return x(*idx);
            default: return *idx >= 3 ? std::optional<Indeterminate>(coupling(*idx)) : std::nullopt;
        }
    }
    if (text.size() >= 5 && text.substr(0, 2) == "s_") {
        auto rest = text.substr(2);
        auto underscore = rest.find('_');
        if (underscore == std::string_view::npos) return std::nullopt;
        auto i = parse_index(rest.substr(0, underscore));
        auto j = parse_index(rest.substr(underscore + 1));
        if (!i || !j || !(*i < *j)) return std::nullopt;
        return s(*i, *j);
    }
    return std::nullopt;
}

}  // namespace diffeo
