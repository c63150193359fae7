#include <doctest.h>

#include "diffeo/amplitudes.hpp"
#include "diffeo/diffeoeq.hpp"
#include "diffeo/errors.hpp"

using namespace diffeo;

namespace {

Diffeomorphism identity_diffeo(int order) {
    std::map<int, Rational> zeros;
    for (int j = 1; j < order; ++j) zeros[j] = Rational(0);
    return Diffeomorphism::with_coeffs(order, zeros);
}

}  // namespace

TEST_CASE("build_pq for the identity diffeomorphism gives P = Q = t") {
    const PQPack pack = build_pq(identity_diffeo(4), 4);
    CHECK(pack.p.coeff(1) == Polynomial{1});
    CHECK(pack.q.coeff(1) == Polynomial{1});
    for (int k = 2; k <= 4; ++k) {
        CHECK(pack.p.coeff(k).is_zero());
        CHECK(pack.q.coeff(k).is_zero());
    }
}

TEST_CASE("build_pq low coefficients") {
    const PQPack pack = build_pq(Diffeomorphism::symbolic(6), 6);
    CHECK(pack.q.coeff(1) == Polynomial{1});
    CHECK(pack.p.coeff(1) == Polynomial{1});
    CHECK(pack.q.coeff(2) == Polynomial::parse("6*a1"));
    CHECK(pack.p.coeff(2) == Polynomial::parse("4*a1"));
    CHECK(pack.q.coeff(3) == Polynomial::parse("12*a1^2 + 24*a2"));
    CHECK(pack.p.coeff(3) == Polynomial::parse("8*a1^2 + 12*a2"));
}

TEST_CASE("build_pq closed form matches the calculus route up to order 15") {
    // build_pq raises on any coefficient mismatch between the two routes.
    CHECK_NOTHROW(build_pq(Diffeomorphism::symbolic(15), 15));
    CHECK_THROWS_AS(build_pq(Diffeomorphism::symbolic(3), 9), std::out_of_range);
}

TEST_CASE("the inverse solves the first differential equation") {
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(8);
    const PQPack pack = build_pq(diffeo, 8);
    const Series g = invert(series_from_diffeo(diffeo)).to_kind(SeriesKind::EGF);
    const Series residual = ode1_residual(g, pack);
    for (int n = 0; n <= residual.order(); ++n) CHECK(residual.coeff(n).is_zero());
}

TEST_CASE("the inverse solves the second differential equation") {
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(8);
    const PQPack pack = build_pq(diffeo, 8);
    const Series g = invert(series_from_diffeo(diffeo)).to_kind(SeriesKind::EGF);
    const Series residual = ode2_residual(g, pack);
    CHECK(residual.order() == 6);
    for (int n = 0; n <= residual.order(); ++n) CHECK(residual.coeff(n).is_zero());
}

TEST_CASE("ode residuals for the trivial solution G = t, F = t") {
    const PQPack pack = build_pq(identity_diffeo(5), 5);
    const Series g = Series::identity(SeriesKind::EGF, 5);
    const Series r1 = ode1_residual(g, pack);
    for (int n = 0; n <= r1.order(); ++n) CHECK(r1.coeff(n).is_zero());
    const Series r2 = ode2_residual(g, pack);
    for (int n = 0; n <= r2.order(); ++n) CHECK(r2.coeff(n).is_zero());
}

TEST_CASE("negative control: G = F does not solve the equations") {
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(6);
    const PQPack pack = build_pq(diffeo, 6);
    const Series wrong = series_from_diffeo(diffeo).to_kind(SeriesKind::EGF);
    bool r1_nonzero = false, r2_nonzero = false;
    const Series r1 = ode1_residual(wrong, pack);
    for (int n = 0; n <= r1.order(); ++n) r1_nonzero = r1_nonzero || !r1.coeff(n).is_zero();
    const Series r2 = ode2_residual(wrong, pack);
    for (int n = 0; n <= r2.order(); ++n) r2_nonzero = r2_nonzero || !r2.coeff(n).is_zero();
    CHECK(r1_nonzero);
    CHECK(r2_nonzero);
}

TEST_CASE("ode suite aggregates the corollary and its negative control") {
    const Report report = check_ode_suite(9);
    CHECK(report.all_ok());
    CHECK(report.suite == "ode");
}

TEST_CASE("split recurrences hold for the closed-form b") {
    CHECK(check_recurrence2(9).all_ok());
    CHECK(check_recurrence3(9).all_ok());
}

TEST_CASE("interaction vertex rule w") {
    const InteractingTheory theory = InteractingTheory::symbolic(5, 8);
    for (int s = 3; s <= 5; ++s)
        CHECK(w_coeff(theory, s, s) == theory.coupling(s));  // B_{s,s}(1!a_0) = 1
    CHECK(w_coeff(theory, 3, 4).str() == "12*a1*l3");
    CHECK(w_coeff(theory, 3, 2).is_zero());
    CHECK_THROWS_AS(w_coeff(theory, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(theory.coupling(7), std::out_of_range);
    CHECK_THROWS_AS(InteractingTheory::symbolic(2, 5), std::invalid_argument);
}

TEST_CASE("single-interaction-vertex amplitudes collapse to the coupling") {
    const InteractingTheory theory = InteractingTheory::symbolic(4, 9);
    CHECK(W_coeff(theory, 3, 3) == theory.coupling(3));
    CHECK(W_coeff(theory, 4, 4) == theory.coupling(4));
    for (int n = 4; n <= 8; ++n) CHECK(W_coeff(theory, 3, n).is_zero());
    CHECK(W_coeff(theory, 4, 6).is_zero());
    CHECK(W_coeff(theory, 4, 2).is_zero());
}

TEST_CASE("smatrix suite") {
    const Report report = check_smatrix(5, 7);
    CHECK(report.all_ok());
}
