#include "diffeo/diffeoeq.hpp"

#include <stdexcept>
#include <string>

#include "diffeo/amplitudes.hpp"
#include "diffeo/bell.hpp"
#include "diffeo/errors.hpp"

namespace diffeo {

namespace {

Polynomial coeff_convolution(const Diffeomorphism& diffeo, int k, bool weighted) {
    Polynomial sum;
    for (int j = 0; j <= k - 1; ++j) {
        Polynomial product = diffeo.a(j) * diffeo.a(k - 1 - j);
        if (weighted) product = Rational((j + 1) * (k - j)) * product;
        sum += product;
    }
    return sum;
}

}  // namespace

PQPack build_pq(const Diffeomorphism& diffeo, int order) {
    if (diffeo.order() < order)
        throw std::out_of_range("build_pq at order " + std::to_string(order) +
                                " needs a diffeomorphism of at least that order");

    Series p(SeriesKind::EGF, order), q(SeriesKind::EGF, order);
    for (int k = 1; k <= order; ++k) {
        const BigInt kfact = factorial(static_cast<unsigned>(k));
        q.set_coeff(k, ratio(kfact * (k + 1), 2) * coeff_convolution(diffeo, k, false));
        p.set_coeff(k, ratio(kfact, k) * coeff_convolution(diffeo, k, true));
    }

    // Calculus route. The diffeomorphism's OGF is an exact polynomial with no
    // constant term, so padding with zeros keeps every computed coefficient
    // exact through t^{order+1}.
    const Series f = series_from_diffeo(diffeo).padded_as_polynomial(order + 1);
    const Series q_calc = series_mul(f, f).derived().scaled(ratio(1, 2)).truncated(order);
    const Series p_calc = [&] {
        const Series fp = f.derived();
        return series_mul(fp, fp).integrated().truncated(order);
    }();
    const Series p_ogf = p.to_kind(SeriesKind::OGF), q_ogf = q.to_kind(SeriesKind::OGF);
    if (!(p_ogf == p_calc) || !(q_ogf == q_calc))
        throw std::logic_error("P/Q coefficient formulas disagree with the calculus route");

    return PQPack{series_from_diffeo(diffeo).truncated(order), std::move(p), std::move(q)};
}

Series ode1_residual(const Series& g_egf, const PQPack& pack) {
    const int order = std::min(g_egf.order(), pack.p.order());
    const Series g = g_egf.truncated(order);
    const Series pg = compose(pack.p.truncated(order), g);
    const Series qg = compose(pack.q.truncated(order), g);
    return series_sub(pg.t_derivative(), qg);
}

Series ode2_residual(const Series& g_egf, const PQPack& pack) {
    const int order = std::min(g_egf.order(), pack.p.order());
    if (order < 2) throw OrderUnderflow("ode2_residual needs truncation order >= 2");
    const Series g = g_egf.truncated(order);
    const Series pg_second = compose(pack.p.truncated(order), g).derived().derived();
    // (d/dG) P(G) = P' composed with G.
    const Series pprime_g = compose(pack.p.truncated(order).derived(), g.truncated(order - 1));
    const Series g_second = g.derived().derived();
    return series_add(pg_second, series_mul(g_second, pprime_g));
}

namespace {

// Left side of the first split recurrence at index n for an arbitrary
// coefficient sequence b (EGF coefficients, b[0] unused):
//   sum_k B_{n,k}(b) (k-1)!/2 sum_j a_j a_{k-1-j} [2n(j+1)(k-j) - k(k+1)]
Polynomial recurrence2_lhs(const Diffeomorphism& diffeo, const BellTable& b_table, int n) {
    Polynomial total;
    for (int k = 1; k <= n; ++k) {
        const Polynomial& bell = b_table.fast(n, k);
        if (bell.is_zero()) continue;
        Polynomial inner;
        for (int j = 0; j <= k - 1; ++j) {
            const Rational weight = Rational(2 * n * (j + 1) * (k - j) - k * (k + 1));
            if (weight == 0) continue;
            inner += weight * (diffeo.a(j) * diffeo.a(k - 1 - j));
        }
        total += ratio(factorial(static_cast<unsigned>(k - 1)), 2) * (bell * inner);
    }
    return total;
}

// Left side of the second split recurrence at index n (printed bounds, with
// out-of-range Bell terms vanishing):
//   sum_k sum_j a_j a_{k-1-j} (j+1)(k-j) (k-1)!/(2k)
//     sum_{s=1}^{n} b_s/(s!(n-s)!) B_{n-s,k-1}(b) (k s(s-1) + n(n-1))
Polynomial recurrence3_lhs(const Diffeomorphism& diffeo, const std::vector<Polynomial>& b,
                           const BellTable& b_table, int n) {
    Polynomial total;
    for (int k = 1; k <= n; ++k) {
        Polynomial outer;
        for (int s = 1; s <= n; ++s) {
            if (k - 1 > n - s) continue;  // B_{n-s,k-1} = 0
            const Polynomial& bell = b_table.fast(n - s, k - 1);
            if (bell.is_zero()) continue;
            const Rational weight =
                Rational(k * s * (s - 1) + n * (n - 1)) /
                Rational(factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(n - s)));
            outer += weight * (b[static_cast<std::size_t>(s)] * bell);
        }
        if (outer.is_zero()) continue;
        const Polynomial a_part = coeff_convolution(diffeo, k, true);
        total += ratio(factorial(static_cast<unsigned>(k - 1)), 2 * k) * (a_part * outer);
    }
    return total;
}

struct RecurrenceSetup {
    Diffeomorphism diffeo;
    PQPack pack;
    std::vector<Polynomial> b;  // b[n] = b_n
    BellTable b_table;
    Series g;  // EGF of the b sequence
};

RecurrenceSetup make_setup(int n_max, bool closed_form_b) {
    Diffeomorphism diffeo = Diffeomorphism::symbolic(n_max);
    PQPack pack = build_pq(diffeo, n_max);

    std::vector<Polynomial> b(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n)
        b[static_cast<std::size_t>(n)] =
            closed_form_b ? b_closed(n, diffeo) : Polynomial::variable(Indeterminate::x(n));

    BellArgs args;
    for (int n = 1; n <= n_max; ++n) args.x.push_back(b[static_cast<std::size_t>(n)]);

    Series g(SeriesKind::EGF, n_max);
    for (int n = 1; n <= n_max; ++n) g.set_coeff(n, b[static_cast<std::size_t>(n)]);

    return RecurrenceSetup{std::move(diffeo), std::move(pack), std::move(b), BellTable(std::move(args)),
                           std::move(g)};
}

}  // namespace

Report check_recurrence2(int n_max) {
    Report report;
    report.suite = "recurrence-2";

    RecurrenceSetup solution = make_setup(n_max, true);
    for (int n = 1; n <= n_max; ++n) {
        const Polynomial lhs = recurrence2_lhs(solution.diffeo, solution.b_table, n);
        report.record("recurrence-2 n=" + std::to_string(n), lhs.is_zero(), lhs.str(), "0");
    }

    // Coefficient-level equivalence with the first differential equation, on a
    // generic sequence b_n = x_n: the n-th EGF coefficient of the residual must
    // equal the recurrence's left side exactly.
    const int generic_max = std::min(n_max, 8);
    RecurrenceSetup generic = make_setup(generic_max, false);
    const Series residual = ode1_residual(generic.g, generic.pack);
    for (int n = 1; n <= generic_max; ++n) {
        const Polynomial lhs = recurrence2_lhs(generic.diffeo, generic.b_table, n);
        const Polynomial& rhs = residual.coeff(n);
        report.record("recurrence-2-vs-ode1 n=" + std::to_string(n), lhs == rhs, lhs.str(), rhs.str());
    }
    return report;
}

Report check_recurrence3(int n_max) {
    Report report;
    report.suite = "recurrence-3";

    RecurrenceSetup solution = make_setup(n_max, true);
    for (int n = 1; n <= n_max; ++n) {
        const Polynomial lhs = recurrence3_lhs(solution.diffeo, solution.b, solution.b_table, n);
        report.record("recurrence-3 n=" + std::to_string(n), lhs.is_zero(), lhs.str(), "0");
    }

    // Equivalence with the second differential equation on a generic sequence:
    // the recurrence's left side at n equals residual_{n-2} / (2 (n-2)!).
    const int generic_max = std::min(n_max, 8);
    RecurrenceSetup generic = make_setup(generic_max, false);
    const Series residual = ode2_residual(generic.g, generic.pack);
    for (int n = 2; n <= generic_max; ++n) {
        const Polynomial lhs = recurrence3_lhs(generic.diffeo, generic.b, generic.b_table, n);
        const Polynomial rhs =
            ratio(1, 2 * factorial(static_cast<unsigned>(n - 2))) * residual.coeff(n - 2);
        report.record("recurrence-3-vs-ode2 n=" + std::to_string(n), lhs == rhs, lhs.str(), rhs.str());
    }
    return report;
}

InteractingTheory InteractingTheory::symbolic(int s_max, int order) {
    if (s_max < 3) throw std::invalid_argument("interactions start at s = 3");
    InteractingTheory theory{{}, Diffeomorphism::symbolic(order)};
    for (int s = 3; s <= s_max; ++s)
        theory.couplings.emplace(s, Polynomial::variable(Indeterminate::coupling(s)));
    return theory;
}

const Polynomial& InteractingTheory::coupling(int s) const {
    auto it = couplings.find(s);
    if (it == couplings.end())
        throw std::out_of_range("no coupling lambda_" + std::to_string(s) + " in the theory");
    return it->second;
}

namespace {

// x_m = m! a_{m-1}, the EGF coefficients of the diffeomorphism itself.
BellArgs diffeo_egf_args(const Diffeomorphism& diffeo, int count) {
    BellArgs args;
    args.x.reserve(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m)
        args.x.push_back(Rational(factorial(static_cast<unsigned>(m))) * diffeo.a(m - 1));
    return args;
}

}  // namespace

Polynomial w_coeff(const InteractingTheory& theory, int s, int n) {
    if (s < 3) throw std::invalid_argument("w_coeff requires s >= 3");
    if (n < s) return Polynomial{};
    return theory.coupling(s) * bell_fast(n, s, diffeo_egf_args(theory.diffeo, n - s + 1));
}

Polynomial W_coeff(const InteractingTheory& theory, int s, int n) {
    if (s < 3) throw std::invalid_argument("W_coeff requires s >= 3");
    if (n < s) return Polynomial{};

    BellTable f_table(diffeo_egf_args(theory.diffeo, n));
    BellArgs b_args;
    b_args.x.reserve(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) b_args.x.push_back(b_closed(m, theory.diffeo));
    BellTable b_table(std::move(b_args));

    Polynomial sum;
    for (int k = s; k <= n; ++k) {
        const Polynomial& outer = f_table.fast(k, s);
        if (outer.is_zero()) continue;
        const Polynomial& inner = b_table.fast(n, k);
        if (inner.is_zero()) continue;
        sum += outer * inner;
    }
    return theory.coupling(s) * sum;
}

Report check_ode_suite(int order) {
    Report report;
    report.suite = "ode";
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(order);
    const PQPack pack = build_pq(diffeo, order);

    const Series g = invert(series_from_diffeo(diffeo)).to_kind(SeriesKind::EGF);
    const Series r1 = ode1_residual(g, pack);
    for (int n = 0; n <= r1.order(); ++n)
        report.record("ode1 n=" + std::to_string(n), r1.coeff(n).is_zero(), r1.coeff(n).str(), "0");
    const Series r2 = ode2_residual(g, pack);
    for (int n = 0; n <= r2.order(); ++n)
        report.record("ode2 n=" + std::to_string(n), r2.coeff(n).is_zero(), r2.coeff(n).str(), "0");

    // Negative control: the diffeomorphism itself must not solve the equations.
    const Series wrong = series_from_diffeo(diffeo).to_kind(SeriesKind::EGF);
    const auto nonzero = [](const Series& s) {
        for (int n = 0; n <= s.order(); ++n)
            if (!s.coeff(n).is_zero()) return true;
        return false;
    };
    report.record("ode1 negative-control G=F", nonzero(ode1_residual(wrong, pack)), "0",
                  "nonzero residual expected");
    report.record("ode2 negative-control G=F", nonzero(ode2_residual(wrong, pack)), "0",
                  "nonzero residual expected");
    return report;
}

Report check_smatrix(int s_max, int n_max) {
    Report report;
    report.suite = "smatrix";
    InteractingTheory theory = InteractingTheory::symbolic(s_max, n_max + 1);
    for (int s = 3; s <= s_max; ++s) {
        for (int n = s; n <= n_max; ++n) {
            const Polynomial value = W_coeff(theory, s, n);
            const Polynomial expected = n == s ? theory.coupling(s) : Polynomial{};
            report.record("smatrix s=" + std::to_string(s) + " n=" + std::to_string(n),
                          value == expected, value.str(), expected.str());
        }
    }
    return report;
}

}  // namespace diffeo
