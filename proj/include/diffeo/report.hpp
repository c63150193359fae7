#pragma once

#include <string>
#include <vector>

namespace diffeo {

// One verified identity instance. lhs/rhs hold the two sides' canonical
// polynomial strings when the check failed (kept empty on success to keep
// reports compact).
struct CheckItem {
    std::string name;
    bool ok = false;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    std::vector<CheckItem> items;

    bool all_ok() const {
        for (const auto& item : items)
            if (!item.ok) return false;
        return true;
    }

    void record(std::string name, bool ok, std::string lhs = {}, std::string rhs = {}) {
        items.push_back({std::move(name), ok, ok ? std::string{} : std::move(lhs),
                         ok ? std::string{} : std::move(rhs)});
    }

    void merge(const Report& other) {
        for (const auto& item : other.items) items.push_back(item);
    }
};

}  // namespace diffeo
