#pragma once

#include "glcurve/charsums.hpp"

namespace glcurve {

// Greene binomial (A over B) = B(-1)/q * J(A, conj B), exact with denominator q
CycRational greene_binomial(const MultCharacter& A, const MultCharacter& B);

// 2F1(A,B;C;lambda) over F_q by the defining character sum:
// eps(lambda) * BC(-1)/q * sum_x B(x) (conj(B)C)(1-x) conj(A)(1-lambda x)
CycRational greene_2f1_def(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda);

// same value by the full character sum q/(q-1) * sum_chi (A chi | chi)(B chi | C chi) chi(lambda),
// computed exactly in Z[zeta_{q-1}]
CycRational greene_2f1_sum(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda);

struct IdentityCheck {
    bool holds = false;
    std::string witness; // both sides' canonical forms on failure
};

// J(A, conj C) 2F1(A,B;C;l) = J(B, conj C) 2F1(B,A;C;l), for A, B, A conj(C), B conj(C) != eps
IdentityCheck verify_jacobi_swap(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda);

// 2F1(A,B;eps;l) = 2F1(B,A;eps;l)
bool verify_trivial_c_symmetry(const MultCharacter& A, const MultCharacter& B, Elt lambda);

// 2F1(A,B;C;l) = AB(-1) conj(C)(-l) C conj(AB)(1-l) * J(B, conj(B)C)/J(A, conj(A)C) * 2F1(conj A, conj B; conj C; l)
// for A,B != eps, A,B != C, l != 0,1; the Jacobi quotient is cleared by cross-multiplication
IdentityCheck verify_conjugate_transform(const MultCharacter& A, const MultCharacter& B, const MultCharacter& C, Elt lambda);

} // namespace glcurve
