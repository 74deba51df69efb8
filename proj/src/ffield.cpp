#include "glcurve/ffield.hpp"

#include <algorithm>
#include <numeric>

namespace glcurve {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// polynomial helpers over F_p used only during construction (coeff vectors low-to-high)
using Poly = std::vector<long>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, long p) {
    std::vector<long long> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + (long long)a[i] * b[j]) % p;
    }
    // reduce by monic mod of degree s
    long s = (long)mod.size() - 1;
    for (long d = (long)acc.size() - 1; d >= s; --d) {
        long long c = acc[d] % p;
        if (!c) continue;
        for (long k = 0; k <= s; ++k)
            acc[d - s + k] = ((acc[d - s + k] - c * mod[k]) % p + (long long)p * p) % p;
    }
    Poly r(s);
    for (long k = 0; k < s; ++k) r[k] = (long)(acc[k] % p);
    return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, long p) {
    Poly r = {1};
    r.resize(mod.size() - 1, 0);
    base.resize(mod.size() - 1, 0);
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    auto deg = [](const Poly& f) {
        long d = (long)f.size() - 1;
        while (d >= 0 && f[d] == 0) --d;
        return d;
    };
    while (deg(b) >= 0) {
        long db = deg(b);
        long da = deg(a);
        if (da < db) { std::swap(a, b); continue; }
        // a -= lead(a)/lead(b) * x^(da-db) * b
        long inv = (long)powmod_u64(b[db], p - 2, p);
        long c = (long)(((long long)a[da] * inv) % p);
        for (long k = 0; k <= db; ++k)
            a[da - db + k] = (long)(((long long)a[da - db + k] - (long long)c * b[k] % p + p) % p);
        while ((long)a.size() - 1 > deg(a)) a.pop_back();
        if (deg(a) < deg(b)) std::swap(a, b);
    }
    return a;
}

// irreducibility of a monic degree-s polynomial over F_p via distinct-degree conditions:
// x^{p^s} = x (mod f) and gcd(x^{p^{s/r}} - x, f) = 1 for each prime r | s
bool is_irreducible(const Poly& f, long p) {
    long s = (long)f.size() - 1;
    Poly x = {0, 1};
    std::uint64_t ps = 1;
    for (long k = 0; k < s; ++k) ps *= (std::uint64_t)p;
    Poly xq = poly_powmod(x, ps, f, p);
    Poly xr = xq;
    if ((long)xr.size() < 2) xr.resize(2, 0);
    xr[1] = (xr[1] - 1 + p) % p;
    if (std::any_of(xr.begin(), xr.end(), [](long c) { return c != 0; })) return false;
    for (std::uint64_t r : prime_factors((std::uint64_t)s)) {
        std::uint64_t pd = 1;
        for (long k = 0; k < s / (long)r; ++k) pd *= (std::uint64_t)p;
        Poly g = poly_powmod(x, pd, f, p);
        if ((long)g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] - 1 + p) % p;
        Poly h = poly_gcd(f, g, p);
        long dh = (long)h.size() - 1;
        while (dh >= 0 && h[dh] == 0) --dh;
        if (dh != 0) return false;
    }
    return true;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % w == 0) return n == w;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // this witness set is deterministic for n < 3.3e24
    for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Elt FieldSpec::from_int(long long a) const {
    long long r = a % p_;
    if (r < 0) r += p_;
    return (Elt)r;
}

Elt FieldSpec::add(Elt a, Elt b) const {
    if (s_ == 1) {
        std::uint32_t r = a + b;
        if (r >= (std::uint32_t)p_) r -= (std::uint32_t)p_;
        return r;
    }
    Elt r = 0;
    for (long k = 0; k < s_; ++k) {
        std::uint32_t da = (a / pow_p_[k]) % (std::uint32_t)p_;
        std::uint32_t db = (b / pow_p_[k]) % (std::uint32_t)p_;
        std::uint32_t d = da + db;
        if (d >= (std::uint32_t)p_) d -= (std::uint32_t)p_;
        r += d * pow_p_[k];
    }
    return r;
}

Elt FieldSpec::neg(Elt a) const {
    if (s_ == 1) return a ? (Elt)(p_ - a) : 0;
    Elt r = 0;
    for (long k = 0; k < s_; ++k) {
        std::uint32_t d = (a / pow_p_[k]) % (std::uint32_t)p_;
        if (d) d = (std::uint32_t)p_ - d;
        r += d * pow_p_[k];
    }
    return r;
}

Elt FieldSpec::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt FieldSpec::mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t t = dlog_table_[a] + (std::uint64_t)dlog_table_[b];
    if (t >= q_ - 1) t -= q_ - 1;
    return exp_table_[t];
}

Elt FieldSpec::inv(Elt a) const {
    require(a != 0, errc::zero_element, "inverse of zero");
    std::uint64_t t = dlog_table_[a];
    return exp_table_[t == 0 ? 0 : q_ - 1 - t];
}

Elt FieldSpec::pow(Elt a, long long e) const {
    if (a == 0) {
        require(e > 0 || e == 0, errc::zero_element, "0^negative");
        return e == 0 ? one() : 0;
    }
    long long m = (long long)(q_ - 1);
    long long t = ((long long)dlog_table_[a] * (e % m)) % m;
    if (t < 0) t += m;
    return exp_table_[t];
}

std::uint64_t FieldSpec::dlog(Elt v) const {
    require(v != 0, errc::zero_element, "dlog of zero");
    return dlog_table_[v];
}

long FieldSpec::nth_power_count(Elt v, std::uint64_t n) const {
    if (v == 0) return 1;
    std::uint64_t g = std::gcd(n, q_ - 1);
    return dlog_table_[v] % g == 0 ? (long)g : 0;
}

long FieldSpec::abs_trace(Elt a) const {
    Elt t = a;
    Elt x = a;
    for (long k = 1; k < s_; ++k) {
        x = frobenius(x);
        t = add(t, x);
    }
    return (long)(t % (std::uint32_t)p_); // trace lies in the prime subfield (digit 0)
}

FieldElement FieldSpec::unpack(Elt a) const {
    FieldElement v;
    v.coeffs.resize(s_);
    for (long k = 0; k < s_; ++k) v.coeffs[k] = (long)((a / pow_p_[k]) % (std::uint32_t)p_);
    return v;
}

Elt FieldSpec::pack(const FieldElement& v) const {
    require((long)v.coeffs.size() == s_, errc::precondition, "element coefficient count != s");
    Elt a = 0;
    for (long k = 0; k < s_; ++k) {
        require(v.coeffs[k] >= 0 && v.coeffs[k] < p_, errc::precondition, "coefficient out of range");
        a += (Elt)v.coeffs[k] * pow_p_[k];
    }
    return a;
}

std::string FieldSpec::to_string(Elt a) const {
    if (s_ == 1) return std::to_string(a);
    std::string out = "[";
    for (long k = 0; k < s_; ++k) {
        if (k) out += ",";
        out += std::to_string((a / pow_p_[k]) % (std::uint32_t)p_);
    }
    return out + "]";
}

Elt FieldSpec::poly_mul(Elt a, Elt b) const {
    std::vector<long long> acc(2 * s_ - 1, 0);
    for (long i = 0; i < s_; ++i) {
        long long da = (a / pow_p_[i]) % (std::uint32_t)p_;
        if (!da) continue;
        for (long j = 0; j < s_; ++j) {
            long long db = (b / pow_p_[j]) % (std::uint32_t)p_;
            acc[i + j] = (acc[i + j] + da * db) % p_;
        }
    }
    for (long d = 2 * s_ - 2; d >= s_; --d) {
        long long c = acc[d];
        if (!c) continue;
        for (long k = 0; k < s_; ++k)
            acc[d - s_ + k] = ((acc[d - s_ + k] - c * modulus_[k]) % p_ + (long long)p_ * p_) % p_;
        acc[d] = 0;
    }
    Elt r = 0;
    for (long k = 0; k < s_; ++k) r += (Elt)acc[k] * pow_p_[k];
    return r;
}

Field build_field(long p, long s, std::uint64_t size_bound) {
    require(p > 3, errc::not_prime, "p must be a prime > 3");
    require(is_prime_u64((std::uint64_t)p), errc::not_prime, std::to_string(p) + " is not prime");
    require(s >= 1, errc::precondition, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (long k = 0; k < s; ++k) {
        q *= (std::uint64_t)p;
        require(q <= size_bound, errc::field_too_large,
                "p^s exceeds the configured size bound " + std::to_string(size_bound));
    }

    auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
    f->p_ = p;
    f->s_ = s;
    f->q_ = q;
    f->pow_p_.resize(s + 1);
    f->pow_p_[0] = 1;
    for (long k = 1; k <= s; ++k) f->pow_p_[k] = f->pow_p_[k - 1] * (std::uint32_t)p;
    f->q1_factors_ = prime_factors(q - 1);

    if (s > 1) {
        // smallest irreducible monic modulus in packed (lexicographic) order
        bool found = false;
        for (std::uint64_t m = 0; m < q && !found; ++m) {
            Poly cand(s + 1);
            std::uint64_t t = m;
            for (long k = 0; k < s; ++k) { cand[k] = (long)(t % (std::uint64_t)p); t /= (std::uint64_t)p; }
            cand[s] = 1;
            if (is_irreducible(cand, p)) {
                f->modulus_ = cand;
                found = true;
            }
        }
        require(found, errc::internal, "no irreducible modulus found");
    }

    // generator: smallest nonzero element (packed order) of multiplicative order q-1,
    // located with polynomial powering since tables do not exist yet
    auto order_ok = [&](Elt g) {
        if (g == 0) return false;
        for (std::uint64_t r : f->q1_factors_) {
            std::uint64_t e = (q - 1) / r;
            if (s == 1) {
                if (powmod_u64(g, e, (std::uint64_t)p) == 1) return false;
            } else {
                Poly base(s, 0);
                std::uint64_t t = g;
                for (long k = 0; k < s; ++k) { base[k] = (long)(t % (std::uint64_t)p); t /= (std::uint64_t)p; }
                Poly r2 = poly_powmod(base, e, f->modulus_, p);
                bool is_one = r2[0] == 1 && std::all_of(r2.begin() + 1, r2.end(), [](long c) { return c == 0; });
                if (is_one) return false;
            }
        }
        return true;
    };
    Elt gen = 0;
    for (std::uint64_t g = 2; g < q; ++g) {
        if (order_ok((Elt)g)) { gen = (Elt)g; break; }
    }
    require(gen != 0, errc::internal, "no generator found");
    f->generator_ = gen;

    f->exp_table_.assign(q - 1, 0);
    f->dlog_table_.assign(q, 0);
    Elt cur = 1;
    for (std::uint64_t t = 0; t < q - 1; ++t) {
        f->exp_table_[t] = cur;
        f->dlog_table_[cur] = (std::uint32_t)t;
        cur = s == 1 ? (Elt)(((std::uint64_t)cur * gen) % (std::uint64_t)p) : f->poly_mul(cur, gen);
    }
    require(cur == 1, errc::internal, "generator order check failed");
    // dlog is a bijection onto [0, q-1): every nonzero element must have been visited
    require(f->dlog_table_[f->generator_] == 1 || q == 2, errc::internal, "dlog(generator) != 1");

    return f;
}

} // namespace glcurve
