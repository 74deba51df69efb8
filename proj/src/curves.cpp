#include "glcurve/curves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace glcurve {

CurveFamily::CurveFamily(long N_, long i_, long j_, long k_) : N(N_), i(i_), j(j_), k(k_) {
    require(N >= 2, errc::precondition, "N must be >= 2");
    require(1 <= i && i < N && 1 <= j && j < N && 1 <= k && k < N, errc::precondition,
            "require 1 <= i, j, k < N");
    long g = std::gcd(std::gcd(i, j), k);
    require(std::gcd(g, N) == 1, errc::precondition, "gcd(i,j,k) must be coprime to N");
    divides_ijk = (i + j + k) % N == 0;
    divides_ij = (i + j) % N == 0;
}

long CurveFamily::genus() const {
    long s = std::gcd(N, i + j + k) + std::gcd(N, i) + std::gcd(N, j) + std::gcd(N, k);
    return 1 + N - s / 2;
}

long CurveFamily::dim_Vn(long n) const {
    require(std::gcd(((n % N) + N) % N, N) == 1, errc::not_coprime, "n must be coprime to N");
    long nn = ((n % N) + N) % N;
    long r = nn * i % N + nn * j % N + nn * k % N - nn * (i + j + k) % N;
    require(r % N == 0, errc::internal, "dim V_n not an integer");
    return r / N;
}

std::string CurveFamily::str() const {
    return "[" + std::to_string(N) + ";" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + "]";
}

CurveInstance::CurveInstance(CurveFamily fam, Rational lam) : family(fam), lambda(std::move(lam)) {
    require(!lambda.is_zero() && lambda != Rational(1), errc::precondition, "lambda must avoid 0 and 1");
}

Elt CurveInstance::lambda_in(const FieldSpec& f) const {
    long p = f.p();
    BigInt u = lambda.num % p, v = lambda.den % p;
    require(v != 0, errc::bad_reduction, "lambda denominator vanishes mod p");
    Elt uf = f.from_int(u.convert_to<long long>());
    Elt vf = f.from_int(v.convert_to<long long>());
    require(uf != 0, errc::bad_reduction, "lambda = 0 mod p");
    Elt lf = f.mul(uf, f.inv(vf));
    require(lf != f.one(), errc::bad_reduction, "lambda = 1 mod p");
    return lf;
}

SchwarzAngles schwarz_angles(const Rational& a, const Rational& b, const Rational& c) {
    auto absr = [](Rational x) { return x.num < 0 ? -x : x; };
    SchwarzAngles out;
    out.p = absr(Rational(1) - c);
    out.q = absr(c - a - b);
    out.r = absr(a - b);
    out.e1 = out.p.is_zero() ? 0 : out.p.den.convert_to<long>();
    out.e2 = out.q.is_zero() ? 0 : out.q.den.convert_to<long>();
    out.e3 = out.r.is_zero() ? 0 : out.r.den.convert_to<long>();
    return out;
}

CurveFamily family_from_abc(const Rational& a, const Rational& b, const Rational& c) {
    BigInt N = boost::multiprecision::lcm(boost::multiprecision::lcm(a.den, b.den), c.den);
    Rational Nr(N);
    Rational ir = Nr * (Rational(1) - b);
    Rational jr = Nr * (Rational(1) + b - c);
    Rational kr = Nr * a;
    require(ir.is_integer() && jr.is_integer() && kr.is_integer(), errc::internal, "abc conversion not integral");
    return CurveFamily(N.convert_to<long>(), ir.num.convert_to<long>(), jr.num.convert_to<long>(),
                       kr.num.convert_to<long>());
}

ResolvedCounts resolved_counts(const CurveInstance& inst, const Field& fld) {
    const auto& f = *fld;
    const auto& fam = inst.family;
    Elt lam = inst.lambda_in(f);
    ResolvedCounts rc;

    rc.n0 = f.nth_power_count(f.one(), (std::uint64_t)std::gcd(fam.N, fam.i));

    // unit parts from the documented change of variables at each singularity
    Elt one_minus_lam = f.sub(f.one(), lam);
    Elt c1 = f.pow(one_minus_lam, fam.k);
    rc.n1 = f.nth_power_count(c1, (std::uint64_t)std::gcd(fam.N, fam.j));

    Elt lam_inv = f.inv(lam);
    Elt cinv = f.mul(f.pow(lam_inv, fam.i), f.pow(f.sub(f.one(), lam_inv), fam.j));
    rc.n_invlambda = f.nth_power_count(cinv, (std::uint64_t)std::gcd(fam.N, fam.k));

    long e = (fam.i + fam.j + fam.k) / fam.N + 1;
    long n_exp = fam.N * e - (fam.i + fam.j + fam.k);
    Elt cinf = f.mul(f.pow(f.neg(f.one()), fam.j), f.pow(f.neg(lam), fam.k));
    rc.n_inf = f.nth_power_count(cinf, (std::uint64_t)std::gcd(fam.N, n_exp));
    return rc;
}

CountResult count_points_brute(const CurveInstance& inst, const Field& fld) {
    const auto& f = *fld;
    const auto& fam = inst.family;
    Elt lam = inst.lambda_in(f);
    std::uint64_t q = f.q();
    std::uint64_t q1 = q - 1;
    std::uint64_t g = std::gcd((std::uint64_t)fam.N, q1);
    std::uint64_t dlam = f.dlog(lam);

    std::uint64_t affine = 0;
    for (std::uint64_t u = 0; u < q; ++u) {
        Elt x = (Elt)u;
        if (x == 0) { affine += 1; continue; }
        Elt omx = f.sub(f.one(), x);
        if (omx == 0) { affine += 1; continue; }
        std::uint64_t t = dlam + f.dlog(x);
        if (t >= q1) t -= q1;
        Elt omlx = f.sub(f.one(), f.exp(t));
        if (omlx == 0) { affine += 1; continue; }
        std::uint64_t r = ((std::uint64_t)fam.i * f.dlog(x) + (std::uint64_t)fam.j * f.dlog(omx) +
                           (std::uint64_t)fam.k * f.dlog(omlx)) % q1;
        if (r % g == 0) affine += g;
    }

    CountResult out;
    out.q = q;
    out.affine_sum = affine;
    out.resolved = resolved_counts(inst, fld);
    // three singular affine points are replaced by their resolved fibers
    out.total = affine + (std::uint64_t)out.resolved.sum() - 3;
    return out;
}

CountResult count_points_hgf(const CurveInstance& inst, const Field& fld) {
    const auto& f = *fld;
    const auto& fam = inst.family;
    require(f.q() % (std::uint64_t)fam.N == 1, errc::wrong_congruence, "q must be 1 mod N");
    Elt lam = inst.lambda_in(f);

    MultCharacter xi = MultCharacter::canonical(fld, fam.N);
    CycRational acc(CycNumber::zero(fam.N), BigInt(1));
    for (long m = 1; m < fam.N; ++m) {
        MultCharacter A = xi.pow(-(long long)fam.k * m);
        MultCharacter B = xi.pow((long long)fam.i * m);
        MultCharacter C = xi.pow((long long)m * (fam.i + fam.j));
        CycRational term = greene_2f1_def(A, B, C, lam);
        if (xi.pow((long long)m * fam.j).sign_at_minus_one() < 0) term = BigInt(-1) * term;
        acc = acc + term;
    }
    acc = BigInt(f.q()) * acc;
    require(acc.den == 1, errc::non_integer_total, "character-sum total has nontrivial denominator");
    auto n = acc.num.as_integer();
    require(n.has_value(), errc::non_integer_total, "character-sum total not a rational integer");

    CountResult out;
    out.q = f.q();
    out.resolved = resolved_counts(inst, fld);
    BigInt total = BigInt(1) + BigInt(f.q()) + *n + out.resolved.sum() - 4;
    require(total >= 0, errc::non_integer_total, "negative total");
    out.total = total.convert_to<std::uint64_t>();
    out.affine_sum = (out.total + 3) - (std::uint64_t)out.resolved.sum();
    return out;
}

CycNumber charsum_new(const CurveInstance& inst, const Field& fld, long m) {
    const auto& f = *fld;
    const auto& fam = inst.family;
    require(std::gcd(((m % fam.N) + fam.N) % fam.N, fam.N) == 1, errc::not_coprime, "m must be coprime to N");
    require(f.q() % (std::uint64_t)fam.N == 1, errc::wrong_congruence, "q must be 1 mod N");
    Elt lam = inst.lambda_in(f);
    std::uint64_t q = f.q(), q1 = q - 1;
    std::uint64_t dlam = f.dlog(lam);
    long N = fam.N;
    long mm = (long)(((m % N) + N) % N);

    std::vector<long long> counts(N, 0);
    for (std::uint64_t u = 1; u < q; ++u) {
        Elt x = (Elt)u;
        Elt omx = f.sub(f.one(), x);
        if (omx == 0) continue;
        std::uint64_t t = dlam + f.dlog(x);
        if (t >= q1) t -= q1;
        Elt omlx = f.sub(f.one(), f.exp(t));
        if (omlx == 0) continue;
        std::uint64_t r = ((std::uint64_t)fam.i * f.dlog(x) + (std::uint64_t)fam.j * f.dlog(omx) +
                           (std::uint64_t)fam.k * f.dlog(omlx)) % q1;
        counts[(size_t)((r % (std::uint64_t)N) * mm % (std::uint64_t)N)] += 1;
    }
    return CycNumber::from_exponent_counts(N, counts);
}

long long frobenius_trace_new(const CurveInstance& inst, const Field& fld) {
    const auto& fam = inst.family;
    CycNumber acc = CycNumber::zero(fam.N);
    for (long m = 1; m < fam.N; ++m)
        if (std::gcd(m, fam.N) == 1) acc += charsum_new(inst, fld, m);
    acc = -acc;
    auto n = acc.as_integer();
    require(n.has_value(), errc::non_integer_total, "new-part trace not a rational integer");
    long long tr = n->convert_to<long long>();
    // |tr| <= 2 phi(N) sqrt(q), compared as tr^2 <= 4 phi(N)^2 q to stay integral
    long long phi = euler_phi(fam.N);
    require((__int128)tr * tr <= (__int128)4 * phi * phi * (__int128)fld->q(), errc::weil_bound_violation,
            "trace exceeds the Weil bound");
    return tr;
}

long long frobenius_trace_from_counts(const CurveInstance& inst, const Field& fld) {
    require(inst.family.genus() == euler_phi(inst.family.N), errc::precondition,
            "full count gives the new trace only when genus = phi(N)");
    CountResult c = count_points_brute(inst, fld);
    return (long long)(fld->q() + 1) - (long long)c.total;
}

void LPolynomial::validate(long p, double root_tol) const {
    require((long)coeffs.size() == 2 * genus + 1, errc::internal, "L-polynomial degree mismatch");
    require(coeffs[0] == 1, errc::internal, "c_0 != 1");
    for (long i = 0; i <= genus; ++i) {
        // c_{2g-i} = p^{g-i} c_i
        BigInt pow = 1;
        for (long t = 0; t < genus - i; ++t) pow *= p;
        require(coeffs[2 * genus - i] == pow * coeffs[i], errc::internal, "functional equation fails");
    }

    // Weil check on the square-free part (Durand-Kerner stalls at multiple roots)
    std::vector<Rational> f(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) f[i] = Rational(coeffs[i]);
    auto deg_of = [](const std::vector<Rational>& v) {
        long d = (long)v.size() - 1;
        while (d >= 0 && v[d].is_zero()) --d;
        return d;
    };
    std::vector<Rational> df(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) df[i - 1] = Rational(BigInt(i)) * f[i];
    // gcd(f, f') by the Euclidean algorithm over Q
    std::vector<Rational> A = f, B = df;
    while (deg_of(B) >= 0) {
        long da = deg_of(A), db = deg_of(B);
        if (da < db) { std::swap(A, B); continue; }
        Rational c = A[da] / B[db];
        for (long k = 0; k <= db; ++k) A[da - db + k] = A[da - db + k] - c * B[k];
        if (deg_of(A) < deg_of(B)) std::swap(A, B);
    }
    long dg = deg_of(A);
    std::vector<Rational> sf = f;
    if (dg > 0) {
        // exact division f / gcd
        std::vector<Rational> q(f.size() - dg, Rational(0)), r = f;
        for (long d = deg_of(r); d >= dg; d = deg_of(r)) {
            Rational c = r[d] / A[dg];
            q[d - dg] = c;
            for (long k = 0; k <= dg; ++k) r[d - dg + k] = r[d - dg + k] - c * A[k];
        }
        sf = q;
    }
    long deg = deg_of(sf);
    std::vector<std::complex<double>> a(deg + 1);
    for (long i = 0; i <= deg; ++i)
        a[i] = sf[i].num.convert_to<double>() / sf[i].den.convert_to<double>();
    for (long i = 0; i <= deg; ++i) a[i] /= std::abs(a[deg]);
    double rad = 1.0 / std::sqrt((double)p);
    std::vector<std::complex<double>> roots(deg);
    for (long i = 0; i < deg; ++i)
        roots[i] = rad * std::polar(1.0, 6.283185307179586 * i / deg + 0.4);
    for (int it = 0; it < 2000; ++it) {
        double moved = 0;
        for (long i = 0; i < deg; ++i) {
            std::complex<double> num = 0;
            std::complex<double> pw = 1;
            for (long t = 0; t <= deg; ++t) { num += a[t] * pw; pw *= roots[i]; }
            std::complex<double> den = a[deg];
            for (long j2 = 0; j2 < deg; ++j2)
                if (j2 != i) den *= roots[i] - roots[j2];
            std::complex<double> delta = num / den;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    for (long i = 0; i < deg; ++i)
        require(std::abs(std::abs(roots[i]) - rad) <= root_tol, errc::weil_bound_violation,
                "L-polynomial root off the Weil circle");
}

std::string LPolynomial::str() const {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += " ";
        out += coeffs[i].str();
    }
    return out;
}

LPolynomial l_polynomial(const CurveInstance& inst, long p, std::uint64_t size_bound) {
    long g = inst.family.genus();
    require(g >= 1, errc::precondition, "genus 0 curve has trivial L-polynomial");
    std::uint64_t q = 1;
    for (long s = 0; s < g; ++s) {
        q *= (std::uint64_t)p;
        require(q <= size_bound, errc::field_too_large, "p^genus exceeds the field size bound");
    }

    std::vector<BigInt> power_sums(g + 1, BigInt(0)); // a_s = p^s + 1 - N_s
    for (long s = 1; s <= g; ++s) {
        Field f = build_field(p, s, size_bound);
        CountResult c = count_points_brute(inst, f);
        BigInt ps = 1;
        for (long t = 0; t < s; ++t) ps *= p;
        power_sums[s] = ps + 1 - BigInt(c.total);
    }

    // Newton's identities: s e_s = sum_{i=1..s} (-1)^{i-1} e_{s-i} a_i
    std::vector<BigInt> e(g + 1, BigInt(0));
    e[0] = 1;
    for (long s = 1; s <= g; ++s) {
        BigInt acc = 0;
        for (long i = 1; i <= s; ++i) {
            BigInt term = e[s - i] * power_sums[i];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        require(acc % s == 0, errc::internal, "Newton identity division not exact");
        e[s] = acc / s;
    }

    LPolynomial L;
    L.genus = g;
    L.coeffs.assign(2 * g + 1, BigInt(0));
    for (long i = 0; i <= g; ++i) L.coeffs[i] = (i % 2 == 0) ? e[i] : -e[i];
    for (long i = 0; i < g; ++i) {
        BigInt pw = 1;
        for (long t = 0; t < g - i; ++t) pw *= p;
        L.coeffs[2 * g - i] = pw * L.coeffs[i];
    }
    L.validate(p);
    return L;
}

IdentityCheck check_366_trace_identity(const Rational& s, long p) {
    require(p > 3 && p % 3 == 1, errc::precondition, "p must be 1 mod 3");
    Field fld = build_field(p, 1);
    const auto& f = *fld;
    BigInt vden = s.den % p;
    require(vden != 0, errc::precondition, "s denominator vanishes mod p");
    Elt sf = f.mul(f.from_int((s.num % p).convert_to<long long>()),
                   f.inv(f.from_int(vden.convert_to<long long>())));
    require(sf != 0 && sf != f.one(), errc::precondition, "s must avoid 0 and 1 mod p");

    MultCharacter eta = MultCharacter::canonical(fld, 6);
    Elt inv4 = f.inv(f.from_int(4));
    Elt s4 = f.mul(sf, inv4);
    auto fpoly = [&](Elt x) { return f.mul(f.sub(x, inv4), f.sub(x, s4)); };
    auto gpoly = [&](Elt x) {
        Elt omx = f.sub(f.one(), x);
        Elt v = f.mul(f.pow(x, 4), f.mul(omx, f.mul(omx, omx)));
        return f.mul(v, f.sub(f.one(), f.mul(sf, x)));
    };

    std::vector<long long> lhs_counts(6, 0), rhs_counts(6, 0);
    auto add_exp = [](std::vector<long long>& cnt, std::optional<long> e, long mult, long long w) {
        if (e) cnt[(size_t)((long long)*e * mult % 6)] += w;
    };
    for (long x = 0; x < p; ++x) {
        Elt xf = (Elt)x;
        Elt fx2 = fpoly(f.mul(xf, xf));
        Elt fx = fpoly(xf);
        add_exp(lhs_counts, eta.exp_at(fx2), 2, +1);
        add_exp(lhs_counts, eta.exp_at(fx2), 4, +1);
        add_exp(lhs_counts, eta.exp_at(fx), 2, -1);
        add_exp(lhs_counts, eta.exp_at(fx), 4, -1);
        Elt gx = gpoly(xf);
        add_exp(rhs_counts, eta.exp_at(gx), 1, +1);
        add_exp(rhs_counts, eta.exp_at(gx), 5, +1);
    }
    CycNumber lhs = CycNumber::from_exponent_counts(6, lhs_counts);
    CycNumber rhs = CycNumber::from_exponent_counts(6, rhs_counts);
    IdentityCheck out;
    out.holds = lhs == rhs;
    if (!out.holds) out.witness = lhs.str() + " != " + rhs.str();
    return out;
}

namespace {

// dense polynomial arithmetic over F_p, coefficients low-to-high
std::vector<long> pmul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    std::vector<long long> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + (long long)a[i] * b[j]) % p;
    }
    std::vector<long> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = (long)acc[i];
    return r;
}

std::vector<long> ppow(std::vector<long> base, long e, long p) {
    std::vector<long> r = {1};
    while (e) {
        if (e & 1) r = pmul(r, base, p);
        if (e >>= 1) base = pmul(base, base, p);
    }
    return r;
}

long inv_mod(long a, long p) {
    long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = (long)((long long)r * b % p);
        b = (long)((long long)b * b % p);
        e >>= 1;
    }
    return r;
}

// bivariate: coefficient of x^d is a polynomial in s (low-to-high), all mod p
using BiPoly = std::vector<std::vector<long>>;

BiPoly bmul(const BiPoly& a, const BiPoly& b, long p) {
    BiPoly acc(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].empty()) continue;
            auto prod = pmul(a[i], b[j], p);
            auto& dst = acc[i + j];
            if (dst.size() < prod.size()) dst.resize(prod.size(), 0);
            for (size_t t = 0; t < prod.size(); ++t) dst[t] = (long)((dst[t] + prod[t]) % p);
        }
    }
    return acc;
}

BiPoly bpow(BiPoly base, long e, long p) {
    BiPoly r = {{1}};
    while (e) {
        if (e & 1) r = bmul(r, base, p);
        if (e >>= 1) base = bmul(base, base, p);
    }
    return r;
}

std::vector<long> trimmed(std::vector<long> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

} // namespace

bool check_p1_coefficients(long p, const Rational& s) {
    require(p > 3 && p % 3 == 1, errc::precondition, "p must be 1 mod 3");
    BigInt vden = s.den % p;
    require(vden != 0, errc::precondition, "s denominator vanishes mod p");
    long sf = (long)((((s.num % p) * inv_mod((long)(vden.convert_to<long long>()), p)) % p + p).convert_to<long long>() % p);
    long m = (p - 1) / 6;
    long i4 = inv_mod(4, p);
    long mi4 = (p - i4) % p;
    long msi4 = (long)(p - (long long)sf * i4 % p) % p;

    // (x^2 - 1/4)(x^2 - s/4): degree 4 in x
    std::vector<long> f1 = pmul({mi4, 0, 1}, {msi4, 0, 1}, p);
    std::vector<long> lhs = ppow(f1, 2 * m, p);

    // x^4 (1-x)^3 (1-sx)
    std::vector<long> g1 = pmul({1, p - 1}, {1, p - 1}, p);
    g1 = pmul(g1, {1, p - 1}, p);
    g1 = pmul(g1, {1, (p - sf) % p}, p);
    std::vector<long> g2(4, 0);
    g2.insert(g2.end(), g1.begin(), g1.end());
    std::vector<long> rhs = ppow(g2, m, p);

    long cl = (size_t)(p - 1) < lhs.size() ? lhs[p - 1] : 0;
    long cr = (size_t)(p - 1) < rhs.size() ? rhs[p - 1] : 0;
    return cl == cr;
}

bool check_p1_coefficients_symbolic(long p) {
    require(p > 3 && p % 3 == 1, errc::precondition, "p must be 1 mod 3");
    long m = (p - 1) / 6;
    long i4 = inv_mod(4, p);
    long mi4 = (p - i4) % p;

    // (x^2 - 1/4): constant and x^2 rows; (x^2 - s/4) has an s-linear constant row
    BiPoly a = {{mi4}, {}, {1}};
    BiPoly b = {{0, mi4}, {}, {1}};
    BiPoly lhs = bpow(bmul(a, b, p), 2 * m, p);

    // x^4 (1-x)^3 (1-sx): (1-x)^3 in x only; (1-sx) couples x and s
    BiPoly omx = {{1}, {p - 1}};
    BiPoly g = bmul(bmul(omx, omx, p), omx, p);
    g = bmul(g, BiPoly{{1}, {0, p - 1}}, p);
    BiPoly shifted(4);
    shifted.insert(shifted.end(), g.begin(), g.end());
    BiPoly rhs = bpow(shifted, m, p);

    std::vector<long> cl = (size_t)(p - 1) < lhs.size() ? trimmed(lhs[p - 1]) : std::vector<long>{};
    std::vector<long> cr = (size_t)(p - 1) < rhs.size() ? trimmed(rhs[p - 1]) : std::vector<long>{};
    return cl == cr;
}

long long elliptic_ap(long p, const Rational& lambda) {
    require(p > 3, errc::precondition, "p must exceed 3");
    require(elliptic_good_reduction(p, lambda), errc::bad_reduction, "E has bad reduction at p");
    long i27 = inv_mod(27 % p, p);
    long c = (long)((((lambda.num % p) * i27 % p) * inv_mod((long)((lambda.den % p).convert_to<long long>()), p) % p + p).convert_to<long long>() % p);

    // E: y^2 + xy + c y = x^3 with c = lambda/27; counting via the completed square
    // (2y + x + c)^2 = 4x^3 + (x + c)^2
    auto legendre = [&](long a) -> long {
        a %= p;
        if (a < 0) a += p;
        if (a == 0) return 0;
        long r = 1, b = a, e = (p - 1) / 2;
        while (e) {
            if (e & 1) r = (long)((long long)r * b % p);
            b = (long)((long long)b * b % p);
            e >>= 1;
        }
        return r == 1 ? 1 : -1;
    };
    long long count = 1; // point at infinity
    for (long x = 0; x < p; ++x) {
        long long xc = ((long long)x + c) % p;
        long long disc = (4 * (((long long)x * x % p) * x % p) + xc * xc) % p;
        count += 1 + legendre((long)disc);
    }
    return (long long)p + 1 - count;
}

bool elliptic_good_reduction(long p, const Rational& lambda) {
    if (p <= 3) return false;
    // disc = (lambda/27)^3 (1 - lambda): the same bad primes as the Legendre curve
    BigInt u = lambda.num, v = lambda.den;
    if (u % p == 0 || v % p == 0) return false;
    if ((v - u) % p == 0) return false;
    return true;
}

} // namespace glcurve
