#include "glcurve/periods.hpp"

namespace glcurve {

using hp::Complex;
using hp::Real;

namespace {

// scaled integer image of a Real: round(x * 10^digits)
BigInt scaled_integer(const Real& x, long digits) {
    mpfr_prec_t prec = std::max<mpfr_prec_t>(x.prec(), hp::bits_for_digits(digits + 8));
    Real s = x * Real::pow10(digits, prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_round(t, s.raw());
    mpfr_exp_t e;
    char* cs = mpfr_get_str(nullptr, &e, 10, 0, t, MPFR_RNDN);
    std::string str(cs);
    mpfr_free_str(cs);
    mpfr_clear(t);
    bool neg = !str.empty() && str[0] == '-';
    if (neg) str = str.substr(1);
    // mpfr_get_str returns mantissa digits with implied exponent e
    BigInt mant = str.empty() ? BigInt(0) : BigInt(str);
    long shift = (long)e - (long)str.size();
    BigInt r = mant;
    for (long i = 0; i < shift; ++i) r *= 10;
    for (long i = 0; i < -shift; ++i) r /= 10;
    return neg ? -r : r;
}

// best rational approximation with denominator <= H via continued fractions
std::optional<Rational> rational_fit(const Real& y, long digits, const BigInt& H) {
    BigInt A = scaled_integer(y, digits - 2);
    BigInt D = 1;
    for (long i = 0; i < digits - 2; ++i) D *= 10;
    BigInt a = A, b = D;
    BigInt p0 = 1, q0 = 0, p1 = a / b, q1 = 1;
    if (b == 0) return std::nullopt;
    BigInt r = a - p1 * b;
    a = b;
    b = r;
    while (b != 0 && q1 <= H) {
        BigInt q = a / b;
        BigInt p2 = q * p1 + p0, q2 = q * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        r = a - q * b;
        a = b;
        b = r;
        if (q1 > H) { p1 = p0; q1 = q0; break; }
    }
    if (q1 == 0 || q1 > H) return std::nullopt;
    return Rational(p1, q1);
}

// LLL (delta = 3/4) on integer row vectors, exact rational Gram-Schmidt
void lll_reduce(std::vector<std::vector<BigInt>>& basis) {
    long n = (long)basis.size();
    auto dot = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        BigInt s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    auto recompute = [&](std::vector<std::vector<Rational>>& mu, std::vector<Rational>& Bstar) {
        // Gram-Schmidt over Q via the Gram matrix
        long m = (long)basis.size();
        std::vector<std::vector<Rational>> gs(m, std::vector<Rational>(m));
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) gs[i][j] = Rational(dot(basis[i], basis[j]));
        mu.assign(m, std::vector<Rational>(m, Rational(0)));
        Bstar.assign(m, Rational(0));
        // b*_i . b*_i and mu_{ij} from the recurrence on inner products
        std::vector<std::vector<Rational>> ip(m, std::vector<Rational>(m)); // <b_i, b*_j>
        for (long i = 0; i < m; ++i) {
            for (long j = 0; j <= i; ++j) {
                Rational v = gs[i][j];
                for (long k = 0; k < j; ++k) v = v - mu[j][k] * ip[i][k];
                ip[i][j] = v;
                if (j < i) mu[i][j] = Bstar[j].is_zero() ? Rational(0) : v / Bstar[j];
            }
            Bstar[i] = ip[i][i];
        }
    };
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> Bstar;
    recompute(mu, Bstar);
    long kk = 1;
    long guard = 0;
    while (kk < n && guard++ < 10000) {
        // size reduction
        for (long j = kk - 1; j >= 0; --j) {
            Rational m2 = mu[kk][j] + mu[kk][j]; // compare |mu| > 1/2 via 2 mu
            if (m2.num * 2 > m2.den || m2.num * 2 < -m2.den) {
                // r = round(mu)
                BigInt r = (mu[kk][j].num * 2 + mu[kk][j].den) / (mu[kk][j].den * 2);
                if (mu[kk][j].num < 0) r = -((-mu[kk][j].num * 2 + mu[kk][j].den) / (mu[kk][j].den * 2));
                for (size_t t = 0; t < basis[kk].size(); ++t) basis[kk][t] -= r * basis[j][t];
                recompute(mu, Bstar);
            }
        }
        // Lovasz condition with delta = 3/4
        Rational lhs = Bstar[kk];
        Rational rhs = (Rational(3, 4) - mu[kk][kk - 1] * mu[kk][kk - 1]) * Bstar[kk - 1];
        if (lhs < rhs) {
            std::swap(basis[kk], basis[kk - 1]);
            recompute(mu, Bstar);
            kk = std::max(1L, kk - 1);
        } else {
            ++kk;
        }
    }
}

} // namespace

std::string AlgebraicGuess::str() const {
    switch (form) {
    case Form::power_rational:
        return "x^" + std::to_string(d) + " = " + power_value.str();
    case Form::quadratic_in_power:
        return "(x^" + std::to_string(d) + ")^2 + (" + b.str() + ") x^" + std::to_string(d) + " + (" +
               c.str() + ") = 0";
    default:
        return "unrecognized";
    }
}

AlgebraicGuess recognize_algebraic(const std::function<Complex(long)>& value, long digits, long maxdeg,
                                   const BigInt& maxheight) {
    mpfr_prec_t prec = hp::bits_for_digits(digits);
    Complex x = value(digits);
    AlgebraicGuess out;

    // the recognizer targets real quantities; a visibly complex value stays unrecognized
    if (!(x.im.abs() <= Real::pow10(-(digits - 6), prec) * (x.abs() + Real::of_long(1, prec))))
        return out;
    Real xr = x.re;

    Real fit_tol = Real::pow10(-(digits - 8), prec);
    // re-verification threshold at doubled precision: 1.5x the base digits, so a
    // relation fitted to ~digits by construction must sharpen to pass
    auto passes_at = [&](const Real& v, const Rational& target, long dig) {
        mpfr_prec_t p2 = hp::bits_for_digits(dig);
        return (v - Real::of_rational(target, p2)).abs() <=
               Real::pow10(-(3 * dig / 4), p2) * (v.abs() + Real::of_long(1, p2));
    };

    // pass 1: x^d rational
    {
        Real y = Real::of_long(1, prec);
        for (long d = 1; d <= maxdeg; ++d) {
            y = y * xr;
            auto cand = rational_fit(y, digits, maxheight);
            if (!cand) continue;
            if (!((y - Real::of_rational(*cand, prec)).abs() <= fit_tol * (y.abs() + Real::of_long(1, prec))))
                continue;
            // re-verify at doubled precision
            long dig2 = 2 * digits;
            Complex x2 = value(dig2);
            Real y2 = Real::of_long(1, hp::bits_for_digits(dig2));
            for (long t = 0; t < d; ++t) y2 = y2 * x2.re;
            if (passes_at(y2, *cand, dig2)) {
                out.form = AlgebraicGuess::Form::power_rational;
                out.d = d;
                out.power_value = *cand;
                out.verified_digits = dig2;
                return out;
            }
        }
    }

    // pass 2: quadratic relation in y = x^d via a 3-row lattice
    {
        Real y = Real::of_long(1, prec);
        for (long d = 1; d <= maxdeg; ++d) {
            y = y * xr;
            Real y2 = y * y;
            long sd = digits - 10;
            std::vector<std::vector<BigInt>> basis = {
                {1, 0, 0, scaled_integer(Real::of_long(1, prec), sd)},
                {0, 1, 0, scaled_integer(y, sd)},
                {0, 0, 1, scaled_integer(y2, sd)},
            };
            lll_reduce(basis);
            for (const auto& v : basis) {
                BigInt n0 = v[0], n1 = v[1], n2 = v[2];
                if (n2 == 0 || n0 == 0) continue; // c = 0 degenerates to a rational power
                auto absv = [](const BigInt& t) { return t < 0 ? BigInt(-t) : t; };
                if (absv(n0) > maxheight || absv(n1) > maxheight || absv(n2) > maxheight) continue;
                Real resid = (Real::of_rational(Rational(n2), prec) * y2 +
                              Real::of_rational(Rational(n1), prec) * y +
                              Real::of_rational(Rational(n0), prec))
                                 .abs();
                if (!(resid <= fit_tol)) continue;
                Rational b(n1, n2), c(n0, n2);
                long dig2 = 2 * digits;
                mpfr_prec_t p2 = hp::bits_for_digits(dig2);
                Complex xx = value(dig2);
                Real yy = Real::of_long(1, p2);
                for (long t = 0; t < d; ++t) yy = yy * xx.re;
                Real r2 = (yy * yy + Real::of_rational(b, p2) * yy + Real::of_rational(c, p2)).abs();
                if (r2 <= Real::pow10(-(3 * dig2 / 4), p2)) {
                    out.form = AlgebraicGuess::Form::quadratic_in_power;
                    out.d = d;
                    out.b = b;
                    out.c = c;
                    out.verified_digits = dig2;
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace glcurve
