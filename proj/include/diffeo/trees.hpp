#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "diffeo/kinematics.hpp"

namespace diffeo {

// One Feynman tree hanging below the distinguished off-shell edge e. Leaves
// carry the external leg labels; every internal vertex has >= 2 children
// (degree >= 3 counting the parent edge).
struct Tree {
    int leaf = 0;                 // label when children is empty
    LegSet legs = 0;              // union of leaf labels below this node
    std::vector<Tree> children;   // empty for a leaf, size >= 2 otherwise

    bool is_leaf() const { return children.empty(); }
};

// Streams every leaf-labelled tree on legs {1..n}, each exactly once. Trees
// are produced by recursive root-partition expansion (canonical block order),
// one tree alive at a time.
void enumerate_trees(int n, const std::function<void(const Tree&)>& visit);

std::uint64_t count_enumerated_trees(int n);

}  // namespace diffeo
