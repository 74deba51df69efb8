#include "glcurve/greene.hpp"

#include <numeric>

namespace glcurve {

namespace {

void check_same_field(const MultCharacter& a, const MultCharacter& b) {
    require(a.same_field(b), errc::field_mismatch, "characters over different fields");
}

long ring_order(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C) {
    return std::lcm(std::lcm(A.M, B.M), C.M);
}

} // namespace

CycRational greene_binomial(const MultCharacter& A, const MultCharacter& B) {
    check_same_field(A, B);
    CycNumber j = jacobi_sum(A, B.conj());
    if (B.sign_at_minus_one() < 0) j = -j;
    return CycRational(std::move(j), BigInt(A.field->q()));
}

CycRational greene_2f1_def(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda) {
    check_same_field(A, B);
    check_same_field(A, C);
    const auto& f = *A.field;
    long M = ring_order(A, B, C);
    if (lambda == 0) return CycRational(CycNumber::zero(M), BigInt(1)); // eps(0) = 0

    MultCharacter Bbar_C = B.conj() * C;
    MultCharacter Abar = A.conj();
    long sB = M / B.M, sBC = M / Bbar_C.M, sA = M / Abar.M;
    std::vector<long long> counts(M, 0);
    for (std::uint64_t u = 0; u < f.q(); ++u) {
        Elt x = (Elt)u;
        auto eb = B.exp_at(x);
        if (!eb) continue;
        auto ebc = Bbar_C.exp_at(f.sub(f.one(), x));
        if (!ebc) continue;
        auto ea = Abar.exp_at(f.sub(f.one(), f.mul(lambda, x)));
        if (!ea) continue;
        long e = (long)(((long long)*eb * sB + (long long)*ebc * sBC + (long long)*ea * sA) % M);
        counts[e] += 1;
    }
    CycNumber acc = CycNumber::from_exponent_counts(M, counts);
    if ((B * C).sign_at_minus_one() < 0) acc = -acc;
    return CycRational(std::move(acc), BigInt(f.q()));
}

CycRational greene_2f1_sum(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda) {
    check_same_field(A, B);
    check_same_field(A, C);
    const auto& f = *A.field;
    long Q1 = (long)(f.q() - 1);
    if (lambda == 0) return CycRational(CycNumber::zero(Q1), BigInt(1)); // chi(0) = 0 kills every term

    MultCharacter Af = MultCharacter(A.field, Q1, (long long)A.t * (Q1 / A.M));
    MultCharacter Bf = MultCharacter(B.field, Q1, (long long)B.t * (Q1 / B.M));
    MultCharacter Cf = MultCharacter(C.field, Q1, (long long)C.t * (Q1 / C.M));

    long dl = (long)(f.dlog(lambda) % (std::uint64_t)Q1);
    CycNumber acc = CycNumber::zero(Q1);
    for (long e = 0; e < Q1; ++e) {
        MultCharacter chi(A.field, Q1, e);
        CycNumber b1 = jacobi_sum(Af * chi, chi.conj()).lifted_to(Q1);
        if (chi.sign_at_minus_one() < 0) b1 = -b1;
        MultCharacter cchi = Cf * chi;
        CycNumber b2 = jacobi_sum(Bf * chi, cchi.conj()).lifted_to(Q1);
        if (cchi.sign_at_minus_one() < 0) b2 = -b2;
        acc += (b1 * b2) * CycNumber::root_of_unity(Q1, (long long)e * dl);
    }
    // q/(q-1) * sum of binomial pairs, each binomial carrying 1/q
    return CycRational(std::move(acc), BigInt(f.q()) * Q1);
}

IdentityCheck verify_jacobi_swap(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda) {
    require(!A.is_trivial() && !B.is_trivial(), errc::precondition, "A, B must be nontrivial");
    require(!(A.conj() * C).is_trivial() && !(B.conj() * C).is_trivial(), errc::precondition,
            "A conj(C), B conj(C) must be nontrivial");
    CycNumber ja = jacobi_sum(A, C.conj());
    CycNumber jb = jacobi_sum(B, C.conj());
    CycRational lhs = CycRational(ja, 1) * greene_2f1_def(A, B, C, lambda);
    CycRational rhs = CycRational(jb, 1) * greene_2f1_def(B, A, C, lambda);
    IdentityCheck out;
    out.holds = lhs == rhs;
    if (!out.holds) out.witness = lhs.str() + " != " + rhs.str();
    return out;
}

bool verify_trivial_c_symmetry(const MultCharacter& A, const MultCharacter& B, Elt lambda) {
    MultCharacter eps = MultCharacter::trivial(A.field);
    return greene_2f1_def(A, B, eps, lambda) == greene_2f1_def(B, A, eps, lambda);
}

IdentityCheck verify_conjugate_transform(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda) {
    require(!A.is_trivial() && !B.is_trivial(), errc::precondition, "A, B must be nontrivial");
    require(!(A.conj() * C).is_trivial() && !(B.conj() * C).is_trivial(), errc::precondition,
            "A != C and B != C required");
    const auto& f = *A.field;
    require(lambda != 0 && lambda != f.one(), errc::precondition, "lambda must avoid 0, 1");

    long M = ring_order(A, B, C);
    CycRational lhs = greene_2f1_def(A, B, C, lambda);
    CycRational rhs = greene_2f1_def(A.conj(), B.conj(), C.conj(), lambda);

    // prefactor AB(-1) conj(C)(-lambda) C conj(A) conj(B) (1 - lambda)
    long sign = (A * B).sign_at_minus_one();
    MultCharacter Cbar = C.conj();
    MultCharacter CAB = C * A.conj() * B.conj();
    auto e1 = Cbar.exp_at(f.neg(lambda));
    auto e2 = CAB.exp_at(f.sub(f.one(), lambda));
    CycNumber pref = CycNumber::root_of_unity(M, (long long)*e1 * (M / Cbar.M))
                   * CycNumber::root_of_unity(M, (long long)*e2 * (M / CAB.M));
    if (sign < 0) pref = -pref;

    // J quotient cleared by cross-multiplication:
    // J(A, conj(A)C) * lhs == pref * J(B, conj(B)C) * rhs
    CycNumber ja = jacobi_sum(A, A.conj() * C);
    CycNumber jb = jacobi_sum(B, B.conj() * C);
    CycRational L = CycRational(ja, 1) * lhs;
    CycRational R = CycRational(pref * jb, 1) * rhs;
    IdentityCheck out;
    out.holds = L == R;
    if (!out.holds) out.witness = L.str() + " != " + R.str();
    return out;
}

} // namespace glcurve
