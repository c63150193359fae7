#pragma once

#include <map>

#include "diffeo/report.hpp"
#include "diffeo/series.hpp"
#include "diffeo/trees.hpp"

namespace diffeo {

// Feynman rules of the transformed theory. A vertex of degree k combines the
// kinematic and massive species:
//   d_r = r! sum_{j=0}^{r} (j+1)(r-j+1) a_j a_{r-j}
//   c_r = (r+2)! sum_{j=0}^{r} a_j a_{r-j}
// and contributes d_{k-2}/2 * (sum of incident squared momenta) - M c_{k-2}/2.
class FeynmanRules {
  public:
    explicit FeynmanRules(Diffeomorphism diffeo) : diffeo_(std::move(diffeo)) {}

    const Diffeomorphism& diffeo() const { return diffeo_; }
    const Polynomial& d_coeff(int r) const;
    const Polynomial& c_coeff(int r) const;

  private:
    Diffeomorphism diffeo_;
    mutable std::map<int, Polynomial> d_memo_;
    mutable std::map<int, Polynomial> c_memo_;
};

// Value of one tree: product of combined vertex factors, divided by every
// propagator denominator (internal edges and the distinguished edge e), with
// the global sign (-1)^V absorbing the i-factors (i^{2V} for V vertices and V
// propagators). Kinematics are evaluated exactly at the point, the a_j stay
// symbolic, so the result is a polynomial in the a_j.
Polynomial tree_value(const Tree& tree, const FeynmanRules& rules, const KinematicPoint& point);

// Sum of tree_value over all trees with n legs below e; equals b_n.
Polynomial b_direct(int n, const FeynmanRules& rules, const KinematicPoint& point);

// The same value from the literal recursive formula: a sum over set partitions
// of the legs into k >= 2 blocks with memoized sub-values b_{|P_i|}.
Polynomial b_recurrence(int n, const FeynmanRules& rules, const KinematicPoint& point);

// Closed Bell-polynomial form, no kinematics:
//   b_{n+1} = sum_{k=1}^{n} (n+k)!/n! B_{n,k}(-1! a_1, -2! a_2, ...).
// Indexed so that b_closed(n) returns b_n (n >= 1) like the other routes.
Polynomial b_closed(int n, const Diffeomorphism& diffeo);

// EGF coefficient route: n! [t^n] invert(series_from_diffeo(F)).
Polynomial b_inverse(int n, const Diffeomorphism& diffeo);

// Samples `trials` kinematic points and checks that b_direct(n-1) is the same
// polynomial at every one of them; point-independence is the machine-checkable
// form of the on-shell amplitude (p_e^2 - M) b_n vanishing at p_e^2 = M.
Report onshell_amplitude_check(int n, int trials, std::uint64_t seed);

// Point-independence of b_direct(m) for every 2 <= m <= n_max. Points are
// sampled up front from the seed; the per-point evaluations honor DIFFEO_THREADS.
Report check_amplitude_independence(int n_max, int trials, std::uint64_t seed);

// Route agreement: direct = recurrence = closed = n![invert]_n for n <= tree_max,
// closed = inversion for n <= closed_max.
Report check_b_agreement(int tree_max, int closed_max, std::uint64_t seed);

}  // namespace diffeo
