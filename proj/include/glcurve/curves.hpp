#pragma once

#include "glcurve/greene.hpp"
#include "glcurve/rational.hpp"

namespace glcurve {

// Parameters [N; i, j, k] of the curve y^N = x^i (1-x)^j (1-lambda x)^k.
struct CurveFamily {
    long N = 2, i = 1, j = 1, k = 1;
    bool divides_ijk = false; // N | i+j+k
    bool divides_ij = false;  // N | i+j

    CurveFamily(long N_, long i_, long j_, long k_);

    long genus() const;
    long dim_Vn(long n) const; // n coprime to N
    std::string str() const;
};

struct CurveInstance {
    CurveFamily family;
    Rational lambda; // in lowest terms, not 0 or 1

    CurveInstance(CurveFamily fam, Rational lam);

    // image of lambda in F_q; bad_reduction when v or u or u-v vanishes mod p
    Elt lambda_in(const FieldSpec& f) const;
};

struct ResolvedCounts {
    long n0 = 0, n1 = 0, n_invlambda = 0, n_inf = 0;
    long sum() const { return n0 + n1 + n_invlambda + n_inf; }
};

struct CountResult {
    std::uint64_t q = 0;
    std::uint64_t affine_sum = 0; // sum_x #{y : y^N = f(x)}
    ResolvedCounts resolved;
    std::uint64_t total = 0; // smooth-model count
};

struct LPolynomial {
    long genus = 0;
    std::vector<BigInt> coeffs; // c_0..c_{2g}, low-to-high

    // c_0 = 1, functional equation, and Weil root moduli within tol
    void validate(long p, double root_tol = 1e-6) const;
    std::string str() const;
};

// Schwarz angle data for the hypergeometric ODE with parameters (a, b, c)
struct SchwarzAngles {
    Rational p, q, r;     // angles/pi
    long e1 = 0, e2 = 0, e3 = 0; // denominators in lowest terms (0 marks an angle equal to 0)
};
SchwarzAngles schwarz_angles(const Rational& a, const Rational& b, const Rational& c);
// conversion i = N(1-b), j = N(1+b-c), k = Na with N the least common denominator
CurveFamily family_from_abc(const Rational& a, const Rational& b, const Rational& c);

ResolvedCounts resolved_counts(const CurveInstance& inst, const Field& fld);

// oracle: direct sweep over x using nth-power counts
CountResult count_points_brute(const CurveInstance& inst, const Field& fld);

// hypergeometric route: 1 + q + q sum_m xi^{mj}(-1) 2F1(...) + resolved - 4, exact
CountResult count_points_hgf(const CurveInstance& inst, const Field& fld);

// sum_x xi^m(x^i (1-x)^j (1-lambda x)^k) in Z[zeta_N], gcd(m, N) = 1
CycNumber charsum_new(const CurveInstance& inst, const Field& fld, long m);

// -sum_{gcd(m,N)=1} charsum_new(m), a rational integer within the Weil bound
long long frobenius_trace_new(const CurveInstance& inst, const Field& fld);

LPolynomial l_polynomial(const CurveInstance& inst, long p,
                         std::uint64_t size_bound = FieldSpec::default_size_bound);

// Frobenius trace of the genus-phi(N) curve from a full point count (N = 3 family:
// the new part is everything, so p + 1 - total is the new trace for any good p)
long long frobenius_trace_from_counts(const CurveInstance& inst, const Field& fld);

// trace identity of the genus-3 Picard-curve comparison, exact over Z[zeta_6]:
// sum_x [eta^2(f(x^2)) + eta^4(f(x^2)) - eta^2(f(x)) - eta^4(f(x))] = sum_x [eta(g(x)) + eta^5(g(x))]
// with f(x) = (x-1/4)(x-s/4), g(x) = x^4 (1-x)^3 (1-sx)
IdentityCheck check_366_trace_identity(const Rational& s, long p);

// (p-1)st coefficients of ((x^2-1/4)(x^2-s/4))^{(p-1)/3} and (x^4(1-x)^3(1-sx))^{(p-1)/6} mod p
bool check_p1_coefficients(long p, const Rational& s);
// same with s left symbolic: compares the coefficient as a polynomial in s
bool check_p1_coefficients_symbolic(long p);

// a_p of E: y^2 + xy + c = x^3 with c = lambda/27, by direct count
long long elliptic_ap(long p, const Rational& lambda);
bool elliptic_good_reduction(long p, const Rational& lambda);

} // namespace glcurve
