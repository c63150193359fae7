#include "diffeo/trees.hpp"

#include <stdexcept>

#include "diffeo/bell.hpp"

namespace diffeo {

namespace {

void trees_on(const std::vector<int>& labels, const std::function<void(Tree&&)>& visit);

// Streams the cartesian product of subtree choices over the blocks of one
// root partition, assembling the root vertex when every block has a choice.
void product_over_blocks(const std::vector<std::vector<int>>& blocks, std::size_t index,
                         std::vector<Tree>& chosen, const std::function<void(Tree&&)>& emit) {
    if (index == blocks.size()) {
        Tree node;
        node.children = chosen;
        for (const Tree& child : node.children) node.legs |= child.legs;
        emit(std::move(node));
        return;
    }
    trees_on(blocks[index], [&](Tree&& subtree) {
        chosen.push_back(std::move(subtree));
        product_over_blocks(blocks, index + 1, chosen, emit);
        chosen.pop_back();
    });
}

void trees_on(const std::vector<int>& labels, const std::function<void(Tree&&)>& visit) {
    if (labels.size() == 1) {
        Tree leaf;
        leaf.leaf = labels[0];
        leaf.legs = 1u << (labels[0] - 1);
        visit(std::move(leaf));
        return;
    }
    for_each_set_partition(static_cast<int>(labels.size()), 0,
                           [&](const std::vector<std::vector<int>>& index_partition) {
                               if (index_partition.size() < 2) return;  // vertices have degree >= 3
                               std::vector<std::vector<int>> blocks;
                               blocks.reserve(index_partition.size());
                               for (const auto& block : index_partition) {
                                   std::vector<int> labelled;
                                   labelled.reserve(block.size());
                                   for (int index : block)
                                       labelled.push_back(labels[static_cast<std::size_t>(index - 1)]);
                                   blocks.push_back(std::move(labelled));
                               }
                               std::vector<Tree> chosen;
                               product_over_blocks(blocks, 0, chosen, visit);
                           });
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const Tree&)>& visit) {
    if (n < 1 || n > 20) throw std::invalid_argument("enumerate_trees supports 1..20 legs");
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(i);
    trees_on(labels, [&](Tree&& tree) { visit(tree); });
}

std::uint64_t count_enumerated_trees(int n) {
    std::uint64_t count = 0;
    enumerate_trees(n, [&](const Tree&) { ++count; });
    return count;
}

}  // namespace diffeo
