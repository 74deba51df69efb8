#include "glcurve/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace glcurve {

long euler_phi(long M) {
    long r = M;
    for (long d = 2; d * d <= M; ++d) {
        if (M % d == 0) {
            r -= r / d;
            while (M % d == 0) M /= d;
        }
    }
    if (M > 1) r -= r / M;
    return r;
}

namespace {

// reduction rows for one M: row[a] = coefficients of zeta_M^a on the canonical basis
struct ReductionTable {
    long M = 1;
    long phi = 1;
    std::vector<long long> cyclo;             // Phi_M, low-to-high
    std::vector<std::vector<long long>> rows; // M rows x phi cols
};

std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (long d = (long)num.size() - 1; d >= (long)den.size() - 1; --d) {
        long long c = num[d] / den.back();
        q[d - (den.size() - 1)] = c;
        if (!c) continue;
        for (size_t k = 0; k < den.size(); ++k) num[d - (den.size() - 1) + k] -= c * den[k];
    }
    return q;
}

ReductionTable build_table(long M) {
    require(M >= 1 && M <= CycNumber::max_order, errc::precondition,
            "cyclotomic order out of range: " + std::to_string(M));
    ReductionTable t;
    t.M = M;
    t.phi = euler_phi(M);

    // Phi_d for all d | M in ascending order, then Phi_M = (x^M - 1) / prod_{d < M}
    std::map<long, std::vector<long long>> phis;
    for (long d = 1; d <= M; ++d) {
        if (M % d != 0) continue;
        std::vector<long long> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (auto& [e, phi_e] : phis)
            if (d % e == 0) num = poly_divide_exact(num, phi_e);
        phis[d] = num;
    }
    t.cyclo = phis[M];

    t.rows.assign(M, std::vector<long long>(t.phi, 0));
    for (long a = 0; a < t.phi; ++a) t.rows[a][a] = 1;
    for (long a = t.phi; a < M; ++a) {
        // x^a = x * x^{a-1} mod Phi_M
        std::vector<long long> shifted(t.phi + 1, 0);
        for (long k = 0; k < t.phi; ++k) shifted[k + 1] = t.rows[a - 1][k];
        long long lead = shifted[t.phi];
        for (long k = 0; k < t.phi; ++k) t.rows[a][k] = shifted[k] - lead * t.cyclo[k];
    }
    return t;
}

const ReductionTable& table_for(long M) {
    static std::map<long, ReductionTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it == cache.end()) it = cache.emplace(M, build_table(M)).first;
    return it->second;
}

} // namespace

const std::vector<long long>& cyclotomic_polynomial(long M) { return table_for(M).cyclo; }

long CycNumber::phi() const { return (long)c_.size() / pdim(); }

CycNumber CycNumber::zero(long M, long p) {
    CycNumber x;
    x.M_ = M;
    x.p_ = p;
    x.c_.assign((size_t)table_for(M).phi * x.pdim(), BigInt(0));
    return x;
}

CycNumber CycNumber::integer(const BigInt& n) {
    CycNumber x = zero(1, 0);
    x.c_[0] = n;
    return x;
}

CycNumber CycNumber::reduce_raw(long M, long p, std::vector<BigInt>& raw) {
    const auto& tab = table_for(M);
    long phi = tab.phi;
    long rawp = p ? p : 1;

    if (p) {
        // zeta_p^{p-1} = -(zeta_p^0 + ... + zeta_p^{p-2})
        for (long a = 0; a < M; ++a) {
            BigInt& top = raw[(size_t)a * rawp + (p - 1)];
            if (top == 0) continue;
            for (long b = 0; b < p - 1; ++b) raw[(size_t)a * rawp + b] -= top;
            top = 0;
        }
    }
    CycNumber x = zero(M, p);
    long pdim = x.pdim();
    for (long a = 0; a < M; ++a) {
        if (a < phi) {
            for (long b = 0; b < pdim; ++b) x.c_[(size_t)a * pdim + b] += raw[(size_t)a * rawp + b];
        } else {
            const auto& row = tab.rows[a];
            for (long k = 0; k < phi; ++k) {
                if (!row[k]) continue;
                for (long b = 0; b < pdim; ++b) {
                    const BigInt& v = raw[(size_t)a * rawp + b];
                    if (v != 0) x.c_[(size_t)k * pdim + b] += row[k] * v;
                }
            }
        }
    }
    return x;
}

CycNumber CycNumber::root_of_unity(long M, long long a, long p) {
    long long r = a % M;
    if (r < 0) r += M;
    std::vector<BigInt> raw((size_t)M * (p ? p : 1), BigInt(0));
    raw[(size_t)r * (p ? p : 1)] = 1;
    return reduce_raw(M, p, raw);
}

CycNumber CycNumber::from_exponent_counts(long M, const std::vector<long long>& counts, long p) {
    require((long)counts.size() <= M, errc::internal, "exponent counts exceed M");
    std::vector<BigInt> raw((size_t)M * (p ? p : 1), BigInt(0));
    long rawp = p ? p : 1;
    for (size_t a = 0; a < counts.size(); ++a) raw[a * rawp] = counts[a];
    return reduce_raw(M, p, raw);
}

CycNumber CycNumber::from_grid_counts(long M, long p, const std::vector<std::vector<long long>>& grid) {
    std::vector<BigInt> raw((size_t)M * p, BigInt(0));
    for (size_t a = 0; a < grid.size(); ++a)
        for (size_t b = 0; b < grid[a].size(); ++b) raw[a * p + b] = grid[a][b];
    return reduce_raw(M, p, raw);
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
}

std::optional<BigInt> CycNumber::as_integer() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return std::nullopt;
    return c_[0];
}

CycNumber CycNumber::lifted_to(long M2, long p2) const {
    if (p2 < 0) p2 = p_;
    require(M2 % M_ == 0, errc::internal, "cyclotomic lift requires M | M2");
    require(p_ == 0 || p2 == p_, errc::internal, "cannot change zeta_p order");
    if (M2 == M_ && p2 == p_) return *this;
    long stride = M2 / M_;
    long phi1 = phi();
    long rawp = p2 ? p2 : 1;
    std::vector<BigInt> raw((size_t)M2 * rawp, BigInt(0));
    for (long a = 0; a < phi1; ++a)
        for (long b = 0; b < pdim(); ++b) {
            const BigInt& v = c_[(size_t)a * pdim() + b];
            if (v != 0) raw[(size_t)(a * stride) * rawp + b] += v;
        }
    return reduce_raw(M2, p2, raw);
}

CycNumber CycNumber::conj() const {
    long rawp = p_ ? p_ : 1;
    std::vector<BigInt> raw((size_t)M_ * rawp, BigInt(0));
    long phi1 = phi();
    for (long a = 0; a < phi1; ++a)
        for (long b = 0; b < pdim(); ++b) {
            const BigInt& v = c_[(size_t)a * pdim() + b];
            if (v == 0) continue;
            long a2 = a == 0 ? 0 : M_ - a;
            long b2 = (p_ && b != 0) ? p_ - b : 0;
            raw[(size_t)a2 * rawp + b2] += v;
        }
    return reduce_raw(M_, p_, raw);
}

std::complex<double> CycNumber::embed() const {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    long phi1 = phi();
    for (long a = 0; a < phi1; ++a)
        for (long b = 0; b < pdim(); ++b) {
            const BigInt& v = c_[(size_t)a * pdim() + b];
            if (v == 0) continue;
            double ang = two_pi * a / (double)M_ + (p_ ? two_pi * b / (double)p_ : 0.0);
            acc += v.convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
    return acc;
}

void CycNumber::unify(CycNumber& x, CycNumber& y) {
    require(x.p_ == 0 || y.p_ == 0 || x.p_ == y.p_, errc::internal, "zeta_p order mismatch");
    long M = std::lcm(x.M_, y.M_);
    long p = std::max(x.p_, y.p_);
    if (x.M_ != M || x.p_ != p) x = x.lifted_to(M, p);
    if (y.M_ != M || y.p_ != p) y = y.lifted_to(M, p);
}

CycNumber operator+(const CycNumber& xin, const CycNumber& yin) {
    CycNumber x = xin, y = yin;
    CycNumber::unify(x, y);
    for (size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
    return x;
}

CycNumber operator-(const CycNumber& xin, const CycNumber& yin) {
    CycNumber x = xin, y = yin;
    CycNumber::unify(x, y);
    for (size_t k = 0; k < x.c_.size(); ++k) x.c_[k] -= y.c_[k];
    return x;
}

CycNumber CycNumber::operator-() const {
    CycNumber x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
}

CycNumber operator*(const BigInt& n, const CycNumber& xin) {
    CycNumber x = xin;
    for (auto& v : x.c_) v *= n;
    return x;
}

CycNumber operator*(const CycNumber& xin, const CycNumber& yin) {
    CycNumber x = xin, y = yin;
    CycNumber::unify(x, y);
    long M = x.M_, p = x.p_;
    long phi = x.phi(), pdim = x.pdim();
    long rawp = p ? p : 1;
    std::vector<BigInt> raw((size_t)M * rawp, BigInt(0));
    for (long a1 = 0; a1 < phi; ++a1)
        for (long b1 = 0; b1 < pdim; ++b1) {
            const BigInt& v1 = x.c_[(size_t)a1 * pdim + b1];
            if (v1 == 0) continue;
            for (long a2 = 0; a2 < phi; ++a2)
                for (long b2 = 0; b2 < pdim; ++b2) {
                    const BigInt& v2 = y.c_[(size_t)a2 * pdim + b2];
                    if (v2 == 0) continue;
                    long a = a1 + a2;
                    if (a >= M) a -= M;
                    long b = p ? (b1 + b2) % p : 0;
                    raw[(size_t)a * rawp + b] += v1 * v2;
                }
        }
    return CycNumber::reduce_raw(M, p, raw);
}

bool operator==(const CycNumber& xin, const CycNumber& yin) {
    CycNumber x = xin, y = yin;
    CycNumber::unify(x, y);
    return x.c_ == y.c_;
}

CycNumber CycNumber::pow(long long e) const {
    require(e >= 0, errc::precondition, "negative cyclotomic power");
    CycNumber r = CycNumber::integer(1);
    CycNumber b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

BigInt CycNumber::content_gcd(const BigInt& n) const {
    BigInt g = n < 0 ? BigInt(-n) : n;
    for (const auto& v : c_) {
        g = boost::multiprecision::gcd(g, v < 0 ? BigInt(-v) : v);
        if (g == 1) break;
    }
    return g;
}

void CycNumber::scale_divide(const BigInt& g) {
    for (auto& v : c_) {
        require(v % g == 0, errc::internal, "inexact coefficient division");
        v /= g;
    }
}

std::optional<CycNumber> CycNumber::try_divide_exact(const CycNumber& num, const CycNumber& den) {
    require(den.p_ == 0 && num.p_ == 0, errc::internal, "exact division only in Z[zeta_M]");
    CycNumber n = num, d = den;
    unify(n, d);
    require(!d.is_zero(), errc::precondition, "division by zero");
    long phi = n.phi();
    long M = n.M_;

    // multiplication-by-d matrix: column j = d * zeta^j on the basis
    std::vector<std::vector<Rational>> A(phi, std::vector<Rational>(phi + 1));
    for (long j = 0; j < phi; ++j) {
        CycNumber col = d * CycNumber::root_of_unity(M, j);
        for (long i = 0; i < phi; ++i) A[i][j] = Rational(col.c_[i]);
    }
    for (long i = 0; i < phi; ++i) A[i][phi] = Rational(n.c_[i]);

    // exact Gaussian elimination over Q (the matrix is invertible: d != 0 in a field)
    for (long col = 0; col < phi; ++col) {
        long sel = -1;
        for (long r = col; r < phi; ++r)
            if (!A[r][col].is_zero()) { sel = r; break; }
        if (sel < 0) return std::nullopt;
        std::swap(A[sel], A[col]);
        for (long r = col + 1; r < phi; ++r) {
            if (A[r][col].is_zero()) continue;
            Rational factor = A[r][col] / A[col][col];
            for (long cc = col; cc <= phi; ++cc) A[r][cc] = A[r][cc] - factor * A[col][cc];
        }
    }
    std::vector<Rational> sol(phi);
    for (long r = phi - 1; r >= 0; --r) {
        Rational acc = A[r][phi];
        for (long cc = r + 1; cc < phi; ++cc) acc = acc - A[r][cc] * sol[cc];
        sol[r] = acc / A[r][r];
    }
    CycNumber f = CycNumber::zero(M, 0);
    for (long col = 0; col < phi; ++col) {
        if (!sol[col].is_integer()) return std::nullopt; // quotient not in Z[zeta_M]
        f.c_[col] = sol[col].num;
    }
    if (f * d != n) return std::nullopt;
    return f;
}

std::string CycNumber::str() const {
    std::string out;
    long phi1 = phi();
    bool first = true;
    for (long a = 0; a < phi1; ++a)
        for (long b = 0; b < pdim(); ++b) {
            const BigInt& v = c_[(size_t)a * pdim() + b];
            if (v == 0) continue;
            std::string term;
            bool has_root = a != 0 || (p_ && b != 0);
            if (v == 1 && has_root) term = "";
            else if (v == -1 && has_root) term = "-";
            else term = v.str();
            if (a != 0) {
                if (!term.empty() && term != "-") term += "*";
                term += "z" + std::to_string(M_);
                if (a > 1) term += "^" + std::to_string(a);
            }
            if (p_ && b != 0) {
                if (!term.empty() && term != "-" && term.back() != '*' && a == 0 && term != "") term += "*";
                term += "w" + std::to_string(p_);
                if (b > 1) term += "^" + std::to_string(b);
            }
            if (!first && !term.empty() && term[0] != '-') out += "+";
            out += term;
            first = false;
        }
    if (first) out = "0";
    return out;
}

CycRational::CycRational(CycNumber n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    require(den != 0, errc::precondition, "zero denominator");
    reduce();
}

void CycRational::reduce() {
    if (den < 0) {
        den = -den;
        num = -num;
    }
    BigInt g = num.content_gcd(den);
    if (g > 1) {
        den /= g;
        num.scale_divide(g);
    }
}

bool operator==(const CycRational& a, const CycRational& b) {
    return b.den * a.num == a.den * b.num;
}

CycRational operator+(const CycRational& a, const CycRational& b) {
    return CycRational(b.den * a.num + a.den * b.num, a.den * b.den);
}

CycRational operator*(const CycRational& a, const CycRational& b) {
    return CycRational(a.num * b.num, a.den * b.den);
}

CycRational operator*(const BigInt& n, const CycRational& a) {
    return CycRational(n * a.num, a.den);
}

std::complex<double> CycRational::embed() const {
    return num.embed() / den.convert_to<double>();
}

std::string CycRational::str() const {
    std::string s = "(" + num.str() + ")";
    if (den != 1) s += "/" + den.str();
    return s;
}

} // namespace glcurve
