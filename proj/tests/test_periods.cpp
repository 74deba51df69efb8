#include "doctest.h"

#include "glcurve/periods.hpp"

using namespace glcurve;
using hp::Complex;
using hp::Real;

namespace {
const long P = 50;
const mpfr_prec_t PREC = hp::bits_for_digits(P);

Real tol(long e) { return Real::pow10(-e, PREC); }
Real rl(const char* s) { return Real::of_decimal(s, PREC); }
} // namespace

TEST_CASE("gamma special values and reflection") {
    CHECK((gamma_fn(Rational(1), P) - Real::of_long(1, PREC)).abs() <= tol(P - 4));
    Real sqrt_pi = hp::sqrt(Real::pi(PREC));
    CHECK((gamma_fn(Rational(1, 2), P) - sqrt_pi).abs() <= tol(P - 4));

    // Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3)
    Real lhs = gamma_fn(Rational(1, 3), P) * gamma_fn(Rational(2, 3), P);
    Real rhs = Real::of_long(2, PREC) * Real::pi(PREC) / hp::sqrt(Real::of_long(3, PREC));
    CHECK((lhs - rhs).abs() <= tol(P - 6));

    for (long num = 1; num <= 11; ++num) {
        Rational z(num, 12);
        Real prod = gamma_fn(z, P) * gamma_fn(Rational(1) - z, P);
        Real refl = Real::pi(PREC) / hp::sin(Real::pi(PREC) * Real::of_rational(z, PREC));
        CHECK((prod / refl - Real::of_long(1, PREC)).abs() <= tol(P - 6));
    }
    CHECK_THROWS_AS(gamma_fn(Rational(0), P), error);
    CHECK_THROWS_AS(gamma_fn(Rational(-3), P), error);
}

TEST_CASE("gamma multiplication formula") {
    // Gamma(l z) = l^{lz - 1/2} 2^{(1-l)/2} Gamma(1/2)^{1-l} prod_j Gamma(z + j/l)
    for (long ell : {2L, 3L}) {
        for (long num = 1; num <= 12; ++num) {
            Rational z(num, 12);
            Real lhs = gamma_fn(Rational(ell) * z, P);
            Real lz = Real::of_rational(Rational(ell) * z, PREC);
            Real rhs = hp::pow(Real::of_long(ell, PREC), lz - Real::of_rational(Rational(1, 2), PREC));
            rhs = rhs * hp::pow(Real::of_long(2, PREC), Real::of_rational(Rational(1 - ell, 2), PREC));
            rhs = rhs * hp::pow(hp::sqrt(Real::pi(PREC)), Real::of_long(1 - ell, PREC));
            for (long j = 0; j < ell; ++j) rhs = rhs * gamma_fn(z + Rational(j, ell), P);
            CHECK((lhs / rhs - Real::of_long(1, PREC)).abs() <= tol(P - 8));
        }
    }
}

TEST_CASE("beta values from the worked examples") {
    CHECK((beta_fn(Rational(1), Rational(1), P) - Real::of_long(1, PREC)).abs() <= tol(P - 4));

    // B(1/10, 6/10) / B(2/10, 5/10) = 2^{4/5} within 1e-40
    Real q = beta_fn(Rational(1, 10), Rational(6, 10), P) / beta_fn(Rational(2, 10), Rational(5, 10), P);
    Real target = hp::pow(Real::of_long(2, PREC), Real::of_rational(Rational(4, 5), PREC));
    CHECK((q - target).abs() <= tol(40));

    // B(1/4, 7/12) / B(1/12, 3/4) = sqrt(2 sqrt(3)/3 - 1) within 1e-40
    Real q2 = beta_fn(Rational(1, 4), Rational(7, 12), P) / beta_fn(Rational(1, 12), Rational(3, 4), P);
    Real t2 = hp::sqrt(Real::of_long(2, PREC) * hp::sqrt(Real::of_long(3, PREC)) / Real::of_long(3, PREC) -
                       Real::of_long(1, PREC));
    CHECK((q2 - t2).abs() <= tol(40));
}

TEST_CASE("classical 2f1") {
    Complex zero(PREC);
    Complex one = Complex::of_real(Real::of_long(1, PREC));
    CHECK((hyp2f1(Rational(1, 3), Rational(1, 7), Rational(5, 6), zero, P) - one).abs() <= tol(P - 4));

    // 2F1(1,1;2;x) = -ln(1-x)/x at x = 1/2: equals 2 ln 2
    Real half = Real::of_rational(Rational(1, 2), PREC);
    Complex v = hyp2f1(Rational(1), Rational(1), Rational(2), Complex::of_real(half), P);
    Real expect = Real::of_long(2, PREC) * hp::log(Real::of_long(2, PREC));
    CHECK((v.re - expect).abs() <= tol(P - 6));
    CHECK(v.im.abs() <= tol(P - 6));

    // Euler transform at (1/6, 1/3; 5/6; 0.3)
    Real lam = rl("0.3");
    Complex lhs = hyp2f1(Rational(1, 6), Rational(1, 3), Rational(5, 6), Complex::of_real(lam), P);
    Real pw = hp::pow(Real::of_long(1, PREC) - lam,
                      Real::of_rational(Rational(5, 6) - Rational(1, 6) - Rational(1, 3), PREC));
    Complex rhs = pw * hyp2f1(Rational(5, 6) - Rational(1, 6), Rational(5, 6) - Rational(1, 3),
                              Rational(5, 6), Complex::of_real(lam), P);
    CHECK((lhs - rhs).abs() <= tol(P - 8));

    CHECK_THROWS_AS(hyp2f1(Rational(1), Rational(1), Rational(0), zero, P), error);
    CHECK_THROWS_AS(hyp2f1(Rational(1), Rational(1), Rational(2), Complex::of_real(rl("0.99")), P), error);
}

TEST_CASE("period set for [6;4,3,1] and euler-transformed tau1'") {
    CurveFamily fam(6, 4, 3, 1);
    Real lam = rl("0.3");
    PeriodSet ps = period_tau(fam, lam, P);

    Real t1 = beta_fn(Rational(1, 3), Rational(1, 2), P) *
              hyp2f1(Rational(1, 6), Rational(1, 3), Rational(5, 6), Complex::of_real(lam), P).re;
    CHECK((ps.tau1.re - t1).abs() <= tol(P - 8));
    CHECK(ps.tau1.im.abs() <= tol(P - 8));

    // tau1' via Euler transformation: extra (1-lambda)^{(N-j-k)/N} and the tauNm1 series
    Complex phase = Complex::unit_phase(Rational(-(1 + 3), 6), PREC);
    Real mag = hp::pow(lam, Real::of_rational(Rational(4 + 3 - 6, 6), PREC)) *
               hp::pow(Real::of_long(1, PREC) - lam, Real::of_rational(Rational(6 - 3 - 1, 6), PREC)) *
               beta_fn(Rational(4 + 3 + 1 - 6, 6), Rational(6 - 1, 6), P);
    Complex euler = (mag * phase) * hyp2f1(Rational(5, 6), Rational(4, 6), Rational(7, 6),
                                           Complex::of_real(lam), P);
    CHECK((ps.tau1p - euler).abs() <= tol(P - 8));

    CHECK_THROWS_AS(period_tau(CurveFamily(3, 1, 2, 1), lam, P), error); // N | i+j
    CHECK_THROWS_AS(period_tau(fam, rl("1.5"), P), error);
}

TEST_CASE("gamma ratio identity across N in {3,4,6}") {
    // [6;4,3,1]: the sine quotient equals 2
    CurveFamily f641(6, 4, 3, 1);
    for (const char* l : {"0.1", "0.3", "0.7"}) {
        auto r = gamma_ratio_check(f641, rl(l), P);
        CHECK(r.holds);
        CHECK((r.ratio - Real::of_long(2, PREC)).abs() <= tol(P - 10));
    }
    auto r412 = gamma_ratio_check(CurveFamily(4, 2, 1, 2), rl("0.5"), P);
    CHECK(r412.holds);

    for (long N : {3L, 4L, 6L}) {
        for (long i = 1; i < N; ++i)
            for (long j = 1; j < N; ++j)
                for (long k = 1; k < N; ++k) {
                    if ((i + j) % N == 0 || (i + j + k) % N == 0) continue;
                    if (!(N < i + j + k && i + j + k < 2 * N)) continue;
                    if (std::gcd(std::gcd(i, std::gcd(j, k)), N) != 1) continue;
                    CurveFamily fam(N, i, j, k);
                    for (const char* l : {"0.1", "0.3", "0.7"}) CHECK(gamma_ratio_check(fam, rl(l), P).holds);
                }
    }
}

TEST_CASE("beta quotient") {
    // reciprocal family of the worked order-10 example: 2^{-4/5}
    Real q = beta_quotient(10, 8, 5, 1, P);
    Real target = hp::pow(Real::of_long(2, PREC), Real::of_rational(Rational(-4, 5), PREC));
    CHECK((q - target).abs() <= tol(40));

    // symmetric under i <-> j
    CHECK((beta_quotient(10, 8, 5, 1, P) - beta_quotient(10, 5, 8, 1, P)).abs() <= tol(P - 6));

    // [6;4,3,1]: B(1/3,1/2)/B(1/6,2/3) = 2^{-2/3}
    Real q641 = beta_quotient(6, 4, 3, 1, P);
    Real t641 = hp::pow(Real::of_long(2, PREC), Real::of_rational(Rational(-2, 3), PREC));
    CHECK((q641 - t641).abs() <= tol(40));

    CHECK_THROWS_AS(beta_quotient(6, 1, 1, 1, P), error); // i+j+k < N
}

TEST_CASE("period matrix [6;4,3,1]: beta1 beta2 = 2 and rank") {
    for (const char* l : {"0.1", "0.3", "0.7"}) {
        Real lam = rl(l);
        PeriodMatrix m = period_matrix(CurveFamily(6, 4, 3, 1), lam, P);
        REQUIRE(m.rows == 2);
        REQUIRE(m.cols == 4);
        Complex beta1 = m.at(0, 2) / m.at(1, 0); // beta1 tau3 / tau3
        Complex beta2 = m.at(1, 2) / m.at(0, 0); // beta2 tau1 / tau1
        Complex prod = beta1 * beta2;
        CHECK((prod.re - Real::of_long(2, PREC)).abs() <= tol(40));
        CHECK(prod.im.abs() <= tol(40));
        CHECK(m.full_real_rank(tol(P - 10)));
    }
}

TEST_CASE("period matrices [12;9,5,1] and [10;2,7,7]") {
    Real lam = rl("0.4");
    PeriodMatrix m12 = period_matrix(CurveFamily(12, 9, 5, 1), lam, P);
    REQUIRE(m12.rows == 4);
    REQUIRE(m12.cols == 8);
    CHECK(m12.full_real_rank(tol(P - 10)));

    PeriodMatrix m10 = period_matrix(CurveFamily(10, 2, 7, 7), lam, P);
    REQUIRE(m10.rows == 4);
    REQUIRE(m10.cols == 8);
    CHECK(m10.full_real_rank(tol(P - 10)));

    // tau1' = (sqrt 5 - 1)/2 tau2 / (alpha1 beta1): entry (0,4) against entries (1,0), (1,4)
    // where (1,4) = alpha1 beta1 tau1 and (0,0) = tau1
    Complex tau2 = m10.at(1, 0);
    Complex a1b1 = m10.at(1, 4) / m10.at(0, 0);
    Real s5 = hp::sqrt(Real::of_long(5, PREC));
    Complex expect = Complex::of_real((s5 - Real::of_long(1, PREC)) / Real::of_long(2, PREC)) * tau2 / a1b1;
    CHECK((m10.at(0, 4) - expect).abs() <= tol(P - 10));

    CHECK_THROWS_AS(period_matrix(CurveFamily(5, 1, 4, 1), lam, P), error);
}

TEST_CASE("endomorphism relations") {
    Real lam4 = rl("0.4");
    auto r12 = endomorphism_relations_check(CurveFamily(12, 9, 5, 1), lam4, P);
    REQUIRE(r12.size() == 6);
    for (const auto& r : r12) {
        INFO(r.name);
        CHECK(r.ok);
    }
    auto r10 = endomorphism_relations_check(CurveFamily(10, 2, 7, 7), lam4, P);
    REQUIRE(r10.size() == 3);
    for (const auto& r : r10) {
        INFO(r.name);
        CHECK(r.ok);
    }
    auto r641 = endomorphism_relations_check(CurveFamily(6, 4, 3, 1), rl("0.3"), P);
    for (const auto& r : r641) {
        INFO(r.name);
        CHECK(r.ok);
    }
}

TEST_CASE("algebraic recognition") {
    auto two45 = [](long digits) {
        mpfr_prec_t pr = hp::bits_for_digits(digits);
        return Complex::of_real(hp::pow(Real::of_long(2, pr), Real::of_rational(Rational(4, 5), pr)));
    };
    AlgebraicGuess g = recognize_algebraic(two45, P);
    CHECK(g.form == AlgebraicGuess::Form::power_rational);
    CHECK(g.d == 5);
    CHECK(g.power_value == Rational(16));

    auto sec72 = [](long digits) {
        mpfr_prec_t pr = hp::bits_for_digits(digits);
        return Complex::of_real(hp::sqrt(Real::of_long(2, pr) * hp::sqrt(Real::of_long(3, pr)) /
                                             Real::of_long(3, pr) -
                                         Real::of_long(1, pr)));
    };
    AlgebraicGuess g2 = recognize_algebraic(sec72, P);
    CHECK(g2.form == AlgebraicGuess::Form::quadratic_in_power);
    CHECK(g2.d == 2);
    CHECK(g2.b == Rational(2));
    CHECK(g2.c == Rational(-1, 3));

    auto pi_fn = [](long digits) {
        return Complex::of_real(Real::pi(hp::bits_for_digits(digits)));
    };
    CHECK(!recognize_algebraic(pi_fn, P).recognized());
}

TEST_CASE("qm check") {
    QmResult r = qm_check(6, 4, 3, 1);
    CHECK(r.verdict == QmResult::Verdict::qm);
    CHECK(r.primes.size() == 3);
    CHECK(r.beta_guess.recognized());

    QmResult r2 = qm_check(6, 1, 1, 1, {7, 13});
    CHECK(r2.verdict == QmResult::Verdict::no_qm);

    CHECK_THROWS_AS(qm_check(5, 1, 4, 1), error);
    CHECK_THROWS_AS(qm_check(6, 2, 2, 2), error); // CM case

    // split case: the finite-field channel is inapplicable, verdict stays honest
    QmResult r3 = qm_check(3, 1, 2, 1);
    CHECK(!r3.note.empty());
    CHECK(r3.beta_guess.recognized()); // B(2/3,1/3)/B(1/3,2/3) = 1
}
