#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <qspecial/families.hpp>

using qspecial::BigInt;
using qspecial::BigRat;
using qspecial::CoefficientWindow;
using qspecial::Family;
using qspecial::TruncSeries;

namespace {

// Bernoulli numbers from the recurrence sum_{k=0..n} C(n+1,k) B_k = 0, B_0 = 1
// (independent of the reciprocal-series machinery).
std::vector<BigRat> bernoulli_oracle(int nmax) {
    std::vector<BigRat> b(nmax + 1);
    b[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        BigRat acc = 0;
        for (int k = 0; k < n; ++k) acc += BigRat(BigInt::binomial(n + 1, k)) * b[k];
        b[n] = -acc / BigRat(n + 1);
    }
    return b;
}

// reciprocal of sum_{k} x^{s k}/(s k + off)! read off at the graded indices;
// the classical-limit generating functions are all of this shape
std::vector<BigRat> egf_reciprocal_oracle(int terms, int step, int offset) {
    TruncSeries a(terms);
    for (int k = 0; k <= terms; ++k)
        a.set_coeff(k, BigRat(BigInt(1), BigInt::factorial(step * k + offset)));
    TruncSeries r = reciprocal(a);
    std::vector<BigRat> out(terms + 1);
    for (int k = 0; k <= terms; ++k)
        out[k] = r.coeff(k) * BigRat(BigInt::factorial(step * k));
    return out;
}

// Cauchy numbers c_n = n! [x^n] x/log(1+x)
std::vector<BigRat> cauchy_oracle(int nmax) {
    TruncSeries logx(nmax);  // log(1+x)/x
    for (int k = 0; k <= nmax; ++k) logx.set_coeff(k, BigRat(k % 2 == 0 ? 1 : -1, k + 1));
    TruncSeries r = reciprocal(logx);
    std::vector<BigRat> out(nmax + 1);
    for (int k = 0; k <= nmax; ++k) out[k] = r.coeff(k) * BigRat(BigInt::factorial(k));
    return out;
}

}  // namespace

TEST_CASE("q-Bernoulli numbers") {
    REQUIRE(qspecial::q_bernoulli(3, 0, BigRat(2)) == BigRat(1));
    REQUIRE(qspecial::q_bernoulli(1, 1, BigRat(1)) == BigRat(-1, 2));
    REQUIRE(qspecial::q_bernoulli(1, 2, BigRat(1)) == BigRat(1, 6));

    Family fam = qspecial::make_q_bernoulli(1, BigRat(1));
    REQUIRE(fam.recip.coeff(2) == BigRat(1, 6));  // [1]!/[3]! at q = 1

    const auto b = bernoulli_oracle(20);
    for (int n = 0; n <= 20; ++n) REQUIRE(fam.number(n) == b[n]);

    // a q-point: coefficients follow the defining ratio
    Family fq = qspecial::make_q_bernoulli(2, BigRat(1, 2));
    for (int j = 0; j <= 8; ++j)
        REQUIRE(fq.recip.coeff(j) ==
                qspecial::q_factorial(2, BigRat(1, 2)) / qspecial::q_factorial(2 + j, BigRat(1, 2)));
}

TEST_CASE("q-Cauchy numbers") {
    REQUIRE(qspecial::q_cauchy(2, 0, BigRat(3)) == BigRat(1));
    REQUIRE(qspecial::q_cauchy(1, 1, BigRat(1)) == BigRat(1, 2));
    REQUIRE(qspecial::q_cauchy(1, 2, BigRat(1)) == BigRat(-1, 6));

    const auto c = cauchy_oracle(20);
    Family fam = qspecial::make_q_cauchy(1, BigRat(1));
    for (int n = 0; n <= 20; ++n) REQUIRE(fam.number(n) == c[n]);
}

TEST_CASE("q-Euler numbers, both kinds") {
    REQUIRE(qspecial::q_euler_first(0, 3, BigRat(1)) == BigRat(0));
    REQUIRE(qspecial::q_euler_first(2, 7, BigRat(1, 2)) == BigRat(0));
    REQUIRE(qspecial::q_euler_first(0, 2, BigRat(1)) == BigRat(-1));
    REQUIRE(qspecial::q_euler_first(0, 4, BigRat(1)) == BigRat(5));
    REQUIRE(qspecial::q_euler_second(0, 2, BigRat(1)) == BigRat(-1, 3));

    // reciprocal of cosh: E_{2n}; reciprocal of sinh(x)/x: E^_{2n}
    const auto e1 = egf_reciprocal_oracle(10, 2, 0);
    const auto e2 = egf_reciprocal_oracle(10, 2, 1);
    for (int n = 0; n <= 10; ++n) {
        REQUIRE(qspecial::q_euler_first(0, 2 * n, BigRat(1)) == e1[n]);
        REQUIRE(qspecial::q_euler_second(0, 2 * n, BigRat(1)) == e2[n]);
    }
    REQUIRE(e1[3] == BigRat(-61));  // E_6
}

TEST_CASE("incomplete q-Lehmer-Euler numbers") {
    REQUIRE(qspecial::lehmer_incomplete(1, 2, 4, 0, BigRat(2)) == BigRat(1));
    REQUIRE(qspecial::lehmer_incomplete(1, 2, 4, 1, BigRat(2)) == BigRat(0));  // below window

    // classical limit: W_3 = -1, W_6 = 19 against the series oracle
    const auto w = egf_reciprocal_oracle(6, 3, 0);
    for (int n = 0; n <= 6; ++n)
        REQUIRE(qspecial::lehmer_incomplete(0, 1, std::nullopt, n, BigRat(1)) == w[n]);
    REQUIRE(w[1] == BigRat(-1));
    REQUIRE(w[2] == BigRat(19));

    // N >= 1: coefficient is 1/[3N+3j]_q!, matching the displayed series
    Family fam = qspecial::make_lehmer_incomplete(1, BigRat(2), CoefficientWindow::finite(2, 5));
    for (int j = 2; j <= 5; ++j)
        REQUIRE(fam.recip.coeff(j) == qspecial::q_factorial(3 + 3 * j, BigRat(2)).reciprocal());
    REQUIRE(fam.recip.coeff(1) == BigRat(0));
    // the generator pair reproduces the same coefficients
    for (int j = 2; j <= 5; ++j) REQUIRE(fam.gh->coeff_ratio(j) == fam.recip.coeff(j));
}

TEST_CASE("determinantal hyperharmonic numbers") {
    REQUIRE(qspecial::det_hyperharmonic(2, 0) == BigRat(1));
    REQUIRE(qspecial::det_hyperharmonic(1, 1) == BigRat(1));
    REQUIRE(qspecial::det_hyperharmonic(1, 2) == BigRat(-1, 2));  // 1 - 3/2

    // against the closed generating function, via series reciprocal
    for (int r = 0; r <= 3; ++r) {
        TruncSeries recip_series = reciprocal(qspecial::hh_closed_gf(r, 10));
        Family fam = qspecial::make_det_hyperharmonic(r);
        for (int n = 0; n <= 10; ++n) REQUIRE(fam.number(n) == recip_series.coeff(n));
    }
}

TEST_CASE("restricted equals unrestricted when ell >= n") {
    for (int r = 0; r <= 3; ++r)
        for (int ell = 1; ell <= 6; ++ell)
            for (int n = 0; n <= ell; ++n)
                REQUIRE(qspecial::det_hyperharmonic_restricted(r, ell, n) ==
                        qspecial::det_hyperharmonic(r, n));
}

TEST_CASE("hyperharmonic generating-form consistency") {
    REQUIRE(qspecial::hh_gf_consistency(0, 10));
    REQUIRE(qspecial::hh_gf_consistency(1, 10));
    REQUIRE(qspecial::hh_gf_consistency(3, 8));
}

TEST_CASE("restricted shifted closed generating form") {
    REQUIRE(qspecial::hh_restricted_shifted_gf_consistency(0, 1, 3, 6));
    REQUIRE(qspecial::hh_restricted_shifted_gf_consistency(2, 2, 2, 6));
    for (int r = 0; r <= 3; ++r)
        for (int m = 1; m <= 3; ++m)
            for (int ell = 1; ell <= 4; ++ell)
                REQUIRE(qspecial::hh_restricted_shifted_gf_consistency(r, m, ell, 8));
}

TEST_CASE("large ell reduces to the shifted closed form") {
    const int order = 8;
    for (int r = 0; r <= 3; ++r)
        for (int m = 1; m <= 3; ++m) {
            TruncSeries shifted = qspecial::hh_shifted_closed_gf(r, m, order);
            TruncSeries restricted =
                qspecial::to_series(qspecial::hh_restricted_shifted_closed_gf(r, m, order), order);
            REQUIRE(shifted == restricted);
            // and both match the family coefficients
            Family fam = qspecial::make_det_hyperharmonic_shifted(r, m);
            for (int j = 0; j <= order; ++j) REQUIRE(shifted.coeff(j) == fam.recip.coeff(j));
        }
}

TEST_CASE("hyperharmonic tower node shapes") {
    using qspecial::Poly;
    const Poly x = Poly::monomial(1);
    // depth 3, order 1: 1/(1 - x/((1+x) + x(1+x)/(2-x + 4x/(3-2x))))
    const auto nodes = qspecial::hh_cf_nodes(1, 3);
    REQUIRE(nodes.size() == 4);
    REQUIRE(nodes[0].num == Poly(1));
    REQUIRE(nodes[0].den == Poly(1));
    REQUIRE(nodes[1].num == -x);
    REQUIRE(nodes[1].den == Poly(1) + x);
    REQUIRE(nodes[2].num == x * (Poly(1) + x));
    REQUIRE(nodes[2].den == Poly(2) - x);
    REQUIRE(nodes[3].num == Poly(4) * x);
    REQUIRE(nodes[3].den == Poly(3) - Poly(2) * x);
}

TEST_CASE("indirect continued fraction for h_n^{(r)}") {
    // depth m yields h_0..h_m correctly; beyond that nothing is promised
    for (int r = 0; r <= 3; ++r) {
        TruncSeries recip_series = reciprocal(qspecial::hh_closed_gf(r, 8));
        for (int depth : {1, 2, 5, 8}) {
            TruncSeries cf = qspecial::hh_cf_tower(r, depth, depth);
            for (int n = 0; n <= depth; ++n) REQUIRE(cf.coeff(n) == recip_series.coeff(n));
        }
    }
    // spot value: r = 0 tower is 1/(1 - log(1+x)) -> 1, 1, 1/2, 1/3, 1/6, 7/60
    TruncSeries s = qspecial::hh_cf_tower(0, 5, 5);
    REQUIRE(s.coeff(4) == BigRat(1, 6));
    REQUIRE(s.coeff(5) == BigRat(7, 60));
}

TEST_CASE("construction rejects q that annihilates a required q-integer") {
    REQUIRE_THROWS_WITH(qspecial::make_q_bernoulli(1, BigRat(-1)),
                        Catch::Matchers::ContainsSubstring("[2]_q"));
    REQUIRE_THROWS_WITH(qspecial::make_q_cauchy(2, BigRat(-1), CoefficientWindow::finite(1, 3)),
                        Catch::Matchers::ContainsSubstring("[4]_q"));
    REQUIRE_THROWS_AS(qspecial::make_lehmer_incomplete(0, BigRat(-1),
                                                       CoefficientWindow::finite(1, 2)),
                      std::domain_error);
    REQUIRE_THROWS_AS(qspecial::make_q_bernoulli(0, BigRat(1)), std::domain_error);
    REQUIRE_THROWS_AS(qspecial::make_q_euler_first(-1, BigRat(1)), std::domain_error);

    // q = 0 and negative q that misses the even indices are fine
    Family f0 = qspecial::make_q_bernoulli(1, BigRat(0));
    REQUIRE(f0.number(1) == BigRat(-1));  // a_j = 1 at q = 0, so f = (1, -1, 0, ...)
    REQUIRE(f0.number(2) == BigRat(0));
    Family fneg = qspecial::make_q_cauchy(1, BigRat(-2), CoefficientWindow::finite(1, 3));
    REQUIRE(fneg.recip.coeff(1) == -qspecial::q_integer(1, BigRat(-2)) /
                                       qspecial::q_integer(2, BigRat(-2)));
}

TEST_CASE("normalization pairs raw coefficients with numbers") {
    Family fam = qspecial::make_q_euler_first(0, BigRat(1));
    qspecial::NormalizedValue v = qspecial::evaluate(fam, 2);
    REQUIRE(v.raw_f == BigRat(5, 24));
    REQUIRE(v.number == BigRat(5));  // multiplied by (2*2)!
    Family hh = qspecial::make_det_hyperharmonic(1);
    REQUIRE(qspecial::evaluate(hh, 2).number == qspecial::evaluate(hh, 2).raw_f);
}

TEST_CASE("family specs round-trip through instantiate") {
    qspecial::FamilySpec spec;
    spec.kind = qspecial::FamilyKind::QCauchy;
    spec.N = 2;
    spec.q = BigRat(1, 2);
    spec.r = 2;
    spec.R = 5;
    Family fam = qspecial::instantiate(spec);
    REQUIRE(fam.name == "qcauchy N=2 q=1/2 window=[2,5]");
    Family again = qspecial::instantiate(fam.spec);
    for (int n = 0; n <= 8; ++n) REQUIRE(again.raw_f(n) == fam.raw_f(n));

    qspecial::FamilySpec hh;
    hh.kind = qspecial::FamilyKind::RestrictedShiftedDetHH;
    hh.r_hh = 2;
    hh.m = 3;
    hh.ell = 2;
    REQUIRE(qspecial::instantiate(hh).name == "dethh-restricted-shifted rhh=2 m=3 ell=2");
}

TEST_CASE("corrupted hook perturbs exactly one coefficient") {
    Family fam = qspecial::make_q_bernoulli(1, BigRat(1));
    Family bad = fam.corrupted();
    REQUIRE(bad.recip.coeff(1) == fam.recip.coeff(1) + BigRat(1));
    REQUIRE(bad.recip.coeff(2) == fam.recip.coeff(2));
    REQUIRE(bad.raw_f(1) != fam.raw_f(1));
}
