#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "glcurve/rational.hpp"

namespace glcurve::hp {

inline mpfr_prec_t bits_for_digits(long digits) {
    return (mpfr_prec_t)(digits * 3.3219280948873626 + 64);
}

// RAII wrapper around mpfr_t. Every value carries its own precision; binary
// operations compute at the larger operand precision. No global rounding state.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    static Real of_long(long x, mpfr_prec_t prec) { Real r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
    static Real of_rational(const Rational& x, mpfr_prec_t prec);
    static Real of_decimal(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        require(mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) == 0, errc::usage, "bad decimal literal: " + s);
        return r;
    }
    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    // 10^e, e possibly negative (tolerances)
    static Real pow10(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_ui_pow_ui(r.v_, 10, (unsigned long)(e < 0 ? -e : e), MPFR_RNDN);
        if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // same value carried at a different working precision (zero-padded or rounded)
    Real at_precision(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.raw(), v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string str(long digits) const;

    friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }

    Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }

private:
    template <typename F>
    static Real bin(const Real& a, const Real& b, F f) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x); // x > 0
Real sin(const Real& x);
Real cos(const Real& x);
Real gamma(const Real& x);
Real pow(const Real& base, const Real& e); // base > 0
Real floor(const Real& x);

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex of_real(Real r) { Complex c(r.prec()); c.re = std::move(r); return c; }
    // e^{i pi t}, the principal value used for every (-1)^t in period formulas
    static Complex unit_phase(const Rational& t, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex operator-() const { return {-re, -im}; }

    Real abs() const { return hp::sqrt(re * re + im * im); }
    Complex conj() const { return {re, -im}; }
    std::string str(long digits) const { return re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i"; }
};

inline Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }

} // namespace glcurve::hp
