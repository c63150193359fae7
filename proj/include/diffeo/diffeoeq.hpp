#pragma once

#include <map>

#include "diffeo/report.hpp"
#include "diffeo/series.hpp"

namespace diffeo {

// Q = 1/2 d/dt (F^2) and P = integral of (F')^2, as EGFs:
//   q_k = k! (k+1)/2 sum_{j=0}^{k-1} a_j a_{k-1-j}
//   p_k = k!/k   sum_{j=0}^{k-1} a_j a_{k-1-j} (j+1)(k-j)
struct PQPack {
    Series f_ogf;  // OGF of the diffeomorphism, truncation N
    Series p;      // EGF, truncation N
    Series q;      // EGF, truncation N
};

// Builds the pack from the coefficient formulas and asserts the calculus route
// ((1/2)(F^2)', integral (F')^2) produces the same coefficients.
PQPack build_pq(const Diffeomorphism& diffeo, int order);

// Residual of t d/dt P(G) - Q(G); identically zero iff G solves the first
// generating-function differential equation.
Series ode1_residual(const Series& g_egf, const PQPack& pack);

// Residual of (P(G))'' + G'' * (P'(G)); truncation drops by two.
Series ode2_residual(const Series& g_egf, const PQPack& pack);

// Substitutes b = b_closed and verifies the split recurrences as polynomial
// identities in the a_j, together with their coefficient-level match against
// the ODE residuals (the match is checked on a generic non-solution sequence
// so it is not vacuous).
Report check_recurrence2(int n_max);
Report check_recurrence3(int n_max);

// Free theory plus interaction terms sum_s lambda_s/s! phi^s, s >= 3.
struct InteractingTheory {
    std::map<int, Polynomial> couplings;  // s -> lambda_s
    Diffeomorphism diffeo;

    // Couplings l3..l_{s_max} symbolic, diffeomorphism of the given order.
    static InteractingTheory symbolic(int s_max, int order);
    const Polynomial& coupling(int s) const;
};

// Transformed-vertex Feynman rule, real-normalized:
//   w_n^{(s)} = lambda_s B_{n,s}(1! a_0, 2! a_1, 3! a_2, ...), zero for n < s.
Polynomial w_coeff(const InteractingTheory& theory, int s, int n);

// Single-interaction-vertex tree sum, real-normalized:
//   W_n^{(s)} = lambda_s sum_{k=s}^{n} B_{k,s}(1!, 2! a_1, ...) B_{n,k}(b_1, b_2, ...).
Polynomial W_coeff(const InteractingTheory& theory, int s, int n);

// W_n^{(s)} = lambda_s [n == s] for every s in [3, s_max], n <= n_max.
Report check_smatrix(int s_max, int n_max);

// Both residuals vanish identically for G = invert(F) with symbolic a_j, and
// stay nonzero for the negative control G = F.
Report check_ode_suite(int order);

}  // namespace diffeo
