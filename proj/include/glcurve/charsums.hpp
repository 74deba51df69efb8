#pragma once

#include <complex>
#include <optional>

#include "glcurve/cyclotomic.hpp"
#include "glcurve/ffield.hpp"

namespace glcurve {

// Multiplicative character of F_q^x with chi(x) = zeta_M^{t*dlog(x)} and chi(0) = 0.
// M must divide q-1 so that the definition is independent of the dlog representative.
struct MultCharacter {
    Field field;
    long M = 1;
    long t = 0;

    MultCharacter() = default;
    MultCharacter(Field f, long M_, long long t_);

    // canonical character of exact order M (t = 1)
    static MultCharacter canonical(Field f, long M_) { return MultCharacter(std::move(f), M_, 1); }
    static MultCharacter trivial(Field f) { return MultCharacter(std::move(f), 1, 0); }

    long order() const;
    bool is_trivial() const { return order() == 1; }

    // exponent e with chi(x) = zeta_M^e, or nullopt when x = 0
    std::optional<long> exp_at(Elt x) const;
    CycNumber value_at(Elt x, long ring_M = 0, long ring_p = 0) const;
    long sign_at_minus_one() const; // chi(-1) = +-1

    MultCharacter pow(long long e) const { return MultCharacter(field, M, (long long)t * e % M); }
    MultCharacter conj() const { return pow(-1); }
    friend MultCharacter operator*(const MultCharacter& a, const MultCharacter& b);

    bool same_field(const MultCharacter& o) const { return field.get() == o.field.get(); }
};

// g(chi) = sum_x chi(x) zeta_p^x, exact in Z[zeta_M, zeta_p]; prime fields only
CycNumber gauss_sum(const MultCharacter& chi);
// extension-field Gauss sum via the absolute trace, complex double
std::complex<double> gauss_sum_complex(const MultCharacter& chi);

// J(chi1, chi2) = sum_x chi1(x) chi2(1-x), exact in Z[zeta_M]
CycNumber jacobi_sum(const MultCharacter& chi1, const MultCharacter& chi2);

// Hasse-Davenport product relation for the canonical order-M character of F_p.
// Checked exactly in Z[zeta_M, zeta_p]; returns both sides on failure.
struct HasseDavenportResult {
    bool holds = false;
    CycNumber lhs; // g(chi^{la}) * g(chi^{M/2})^{l-1}
    CycNumber rhs;
};
HasseDavenportResult hasse_davenport_check(long p, long M, long ell, long long a);

// Character-quotient test on F(eta^a) = J(eta^{aj}, eta^{a(k-j)}) / J(eta^{ai}, eta^{a(k-i)}).
// CharacterLike means: F(eta) is an M-th root of unity and F(eta^a) = F(eta)^a on (Z/M)^x.
struct CharQuotientResult {
    enum class Verdict { character_like, not_character_like } verdict;
    long M = 0;
    long root_exponent = 0;     // F(eta) = zeta_M^root_exponent when character_like
    std::string witness;        // failure description otherwise
    bool character_like() const { return verdict == Verdict::character_like; }
};
CharQuotientResult character_quotient_test(long M, long i, long j, long k, long p);

} // namespace glcurve
