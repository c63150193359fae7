#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "diffeo/polynomial.hpp"
#include "diffeo/report.hpp"

namespace diffeo {

// Arguments x_1, x_2, ... for partial Bell polynomials. B_{n,k} consumes at
// most x_{n-k+1}; asking beyond the stored list is an error.
struct BellArgs {
    std::vector<Polynomial> x;  // x[0] holds x_1

    static BellArgs symbolic(int count);
    const Polynomial& at(int index_1based) const;
    int size() const { return static_cast<int>(x.size()); }
};

// Streams every set partition of {1..n} in restricted-growth-string order.
// Blocks are canonically ordered by their minimum element. When blocks == 0
// all partitions are visited, otherwise only those with exactly that many blocks.
void for_each_set_partition(int n, int blocks,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit);

// Definition route: sum over set partitions of {1..n} into k blocks of
// prod x_{|block|}. Exponential in n; the reference oracle.
Polynomial bell_oracle(int n, int k, const BellArgs& args);

// Recurrence route with memoization, one table per argument list:
//   k B_{n,k} = sum_s C(n,s) x_s B_{n-s,k-1}.
class BellTable {
  public:
    explicit BellTable(BellArgs args) : args_(std::move(args)) {}

    const Polynomial& fast(int n, int k) const;
    const BellArgs& args() const { return args_; }

  private:
    BellArgs args_;
    mutable std::map<std::pair<int, int>, Polynomial> memo_;
};

Polynomial bell_fast(int n, int k, const BellArgs& args);

// Identity suites of the Bell layer; every check is an exact symbolic equality.
Report check_genfunc_definition(int n_max, int k_max);
Report check_lemma_localization(int n_max);
Report check_starter(int n_max);
Report check_cvijovic(int n_max);

}  // namespace diffeo
