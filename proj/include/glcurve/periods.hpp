#pragma once

#include <functional>
#include <vector>

#include "glcurve/curves.hpp"
#include "glcurve/hp.hpp"

namespace glcurve {

// Gamma at a rational argument, digits of working precision
hp::Real gamma_fn(const Rational& x, long digits);
// B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b)
hp::Real beta_fn(const Rational& a, const Rational& b, long digits);

// classical 2F1 series, |lambda| < 1 - margin (default 0.05)
hp::Complex hyp2f1(const Rational& a, const Rational& b, const Rational& c, const hp::Complex& lambda,
                   long digits, double margin = 0.05);
inline hp::Complex hyp2f1(const Rational& a, const Rational& b, const Rational& c, const hp::Real& lambda,
                          long digits, double margin = 0.05) {
    return hyp2f1(a, b, c, hp::Complex::of_real(lambda), digits, margin);
}

// periods tau_1, tau_1', tau_{N-1}, tau_{N-1}' of the new part, N in {3,4,6};
// fractional powers of -1 are principal-branch e^{i pi r}
struct PeriodSet {
    hp::Complex tau1, tau1p, tauNm1, tauNm1p;
    PeriodSet(mpfr_prec_t prec) : tau1(prec), tau1p(prec), tauNm1(prec), tauNm1p(prec) {}
};
PeriodSet period_tau(const CurveFamily& fam, const hp::Real& lambda, long digits);

// gamma = tau1' tauNm1' / (tau1 tauNm1) against the sine-quotient form
struct GammaRatioResult {
    bool holds;
    hp::Real ratio;    // real part of the computed ratio
    hp::Real residual; // |computed - sine formula|
};
GammaRatioResult gamma_ratio_check(const CurveFamily& fam, const hp::Real& lambda, long digits);

// B((N-i)/N, (N-j)/N) / B(k/N, (2N-i-j-k)/N); arguments constrained to (0,1) u (1,2)
hp::Real beta_quotient(long N, long i, long j, long k, long digits);

struct PeriodMatrix {
    long rows = 0, cols = 0;
    std::vector<hp::Complex> entries; // row-major
    const hp::Complex& at(long r, long c) const { return entries[(size_t)(r * cols + c)]; }
    // rank over R of the (2 rows) x cols real matrix, pivot threshold given
    bool full_real_rank(const hp::Real& tol) const;
};
PeriodMatrix period_matrix(const CurveFamily& fam, const hp::Real& lambda, long digits);

struct RelationResidual {
    std::string name;
    hp::Real residual;
    bool ok;
};
std::vector<RelationResidual> endomorphism_relations_check(const CurveFamily& fam, const hp::Real& lambda,
                                                           long digits);

// algebraicity recognition: x^d rational, then x^{2d} + b x^d + c = 0; every guess
// re-verified by re-evaluating the quantity at doubled precision
struct AlgebraicGuess {
    enum class Form { power_rational, quadratic_in_power, unrecognized } form = Form::unrecognized;
    long d = 0;
    Rational power_value; // x^d = power_value
    Rational b, c;        // (x^d)^2 + b x^d + c = 0
    long verified_digits = 0;
    bool recognized() const { return form != Form::unrecognized; }
    std::string str() const;
};
AlgebraicGuess recognize_algebraic(const std::function<hp::Complex(long digits)>& value, long digits,
                                   long maxdeg = 60, const BigInt& maxheight = BigInt(1000000));

// quaternionic-multiplication decision for N in {3,4,6}: exact character-quotient
// test at each prime plus numeric recognition of the Theorem-1 Beta quotient
struct QmResult {
    enum class Verdict { qm, no_qm, inconclusive } verdict;
    struct PrimeEvidence {
        long p = 0;
        bool applicable = false;
        bool character_like = false;
        std::string detail;
    };
    std::vector<PrimeEvidence> primes;
    AlgebraicGuess beta_guess;
    std::string beta_value; // decimal string of the Theorem-1 quotient
    std::string note;
    std::string verdict_str() const {
        return verdict == Verdict::qm ? "QM" : verdict == Verdict::no_qm ? "NoQM" : "Inconclusive";
    }
};
QmResult qm_check(long N, long i, long j, long k, std::vector<long> primes = {}, long digits = 50);

} // namespace glcurve
