#include "glcurve/hp.hpp"

namespace glcurve::hp {

Real Real::of_rational(const Rational& x, mpfr_prec_t prec) {
    Real n(prec), d(prec);
    mpfr_set_str(n.v_, x.num.str().c_str(), 10, MPFR_RNDN);
    mpfr_set_str(d.v_, x.den.str().c_str(), 10, MPFR_RNDN);
    return n / d;
}

std::string Real::str(long digits) const {
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, (size_t)digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') { sign = "-"; mant = mant.substr(1); }
    return sign + "0." + mant + "e" + std::to_string((long)e);
}

#define GLC_UN(fnname, mpfrname)                       \
    Real fnname(const Real& x) {                       \
        Real r(x.prec());                              \
        mpfrname(r.raw(), x.raw(), MPFR_RNDN);         \
        return r;                                      \
    }

GLC_UN(sqrt, mpfr_sqrt)
GLC_UN(exp, mpfr_exp)
GLC_UN(log, mpfr_log)
GLC_UN(sin, mpfr_sin)
GLC_UN(cos, mpfr_cos)
GLC_UN(gamma, mpfr_gamma)
#undef GLC_UN

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real pow(const Real& base, const Real& e) {
    Real r(std::max(base.prec(), e.prec()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

Complex Complex::unit_phase(const Rational& t, mpfr_prec_t prec) {
    Real ang = Real::pi(prec) * Real::of_rational(t, prec);
    return {cos(ang), sin(ang)};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    require(!n.is_zero(), errc::precondition, "complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

} // namespace glcurve::hp
