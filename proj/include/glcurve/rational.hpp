#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <ostream>
#include <string>

#include "glcurve/errors.hpp"

namespace glcurve {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always normalized: den > 0, gcd(num, den) = 1.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(BigInt n) : num(std::move(n)), den(1) {}
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        require(den != 0, errc::precondition, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(b.num != 0, errc::precondition, "rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    // fractional part {x} = x - floor(x), in [0,1)
    Rational frac() const {
        BigInt q = num / den;
        BigInt r = num - q * den;
        if (r < 0) r += den;
        return Rational(r, den);
    }

    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }

    // parses "u", "u/v", or "-u/v"
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            fail(errc::usage, "cannot parse rational: " + s);
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

} // namespace glcurve
