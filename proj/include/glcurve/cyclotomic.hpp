#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "glcurve/rational.hpp"

namespace glcurve {

// Exact element of Z[zeta_M] or Z[zeta_M, zeta_p] in canonical form.
//
// The zeta_M part is reduced modulo the M-th cyclotomic polynomial onto the basis
// {zeta_M^a : 0 <= a < phi(M)}; the zeta_p part (p prime, present when p != 0) uses
// the basis {zeta_p^b : 0 <= b < p-1} with zeta_p^{p-1} = -(1 + zeta_p + ...).
// Equality of values is equality of coefficient grids.
class CycNumber {
public:
    static constexpr long max_order = 4096;

    CycNumber() : M_(1), p_(0), c_(1, BigInt(0)) {}

    static CycNumber zero(long M = 1, long p = 0);
    static CycNumber integer(const BigInt& n);
    // zeta_M^a (a arbitrary, reduced), optionally inside Z[zeta_M, zeta_p]
    static CycNumber root_of_unity(long M, long long a, long p = 0);
    // sum of counts[a] * zeta_M^a
    static CycNumber from_exponent_counts(long M, const std::vector<long long>& counts, long p = 0);
    // sum of grid[a][b] * zeta_M^a * zeta_p^b, exponents unreduced (a < M, b < p)
    static CycNumber from_grid_counts(long M, long p, const std::vector<std::vector<long long>>& grid);

    long M() const { return M_; }
    long p() const { return p_; }
    long phi() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const;
    // value as a rational integer, if it is one
    std::optional<BigInt> as_integer() const;

    CycNumber conj() const;
    CycNumber lifted_to(long M2, long p2 = -1) const; // M | M2; p2 = -1 keeps p
    std::complex<double> embed() const;               // zeta_M -> e^{2 pi i/M}, zeta_p -> e^{2 pi i/p}

    friend CycNumber operator+(const CycNumber& x, const CycNumber& y);
    friend CycNumber operator-(const CycNumber& x, const CycNumber& y);
    friend CycNumber operator*(const CycNumber& x, const CycNumber& y);
    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& y) { *this = *this + y; return *this; }
    CycNumber& operator-=(const CycNumber& y) { *this = *this - y; return *this; }
    CycNumber& operator*=(const CycNumber& y) { *this = *this * y; return *this; }
    friend CycNumber operator*(const BigInt& n, const CycNumber& x);
    friend bool operator==(const CycNumber& x, const CycNumber& y);
    friend bool operator!=(const CycNumber& x, const CycNumber& y) { return !(x == y); }

    CycNumber pow(long long e) const; // e >= 0

    // gcd of all coefficients and n, for content reduction
    BigInt content_gcd(const BigInt& n) const;
    // divide every coefficient by g (must be exact)
    void scale_divide(const BigInt& g);

    // exact division in Z[zeta_M] (no zeta_p part): returns f with f*den == num
    static std::optional<CycNumber> try_divide_exact(const CycNumber& num, const CycNumber& den);

    std::string str() const;

private:
    long M_;
    long p_;
    std::vector<BigInt> c_; // phi(M) * pdim, index a*pdim + b
    long pdim() const { return p_ ? p_ - 1 : 1; }

    // reduce a raw exponent grid (M x (p or 1)) onto the canonical basis
    static CycNumber reduce_raw(long M, long p, std::vector<BigInt>& raw);
    static void unify(CycNumber& x, CycNumber& y);
};

// reduced value num/den with den > 0; equality via cross-multiplication
struct CycRational {
    CycNumber num;
    BigInt den = 1;

    CycRational() = default;
    CycRational(CycNumber n, BigInt d);

    void reduce();
    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const CycRational& a, const CycRational& b);
    friend bool operator!=(const CycRational& a, const CycRational& b) { return !(a == b); }
    friend CycRational operator+(const CycRational& a, const CycRational& b);
    friend CycRational operator*(const CycRational& a, const CycRational& b);
    friend CycRational operator*(const BigInt& n, const CycRational& a);

    std::complex<double> embed() const;
    std::string str() const;
};

// coefficients of the M-th cyclotomic polynomial, low-to-high (degree phi(M))
const std::vector<long long>& cyclotomic_polynomial(long M);
long euler_phi(long M);

} // namespace glcurve
