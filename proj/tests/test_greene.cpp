#include "doctest.h"

#include <numeric>

#include "glcurve/greene.hpp"

using namespace glcurve;

TEST_CASE("greene binomial special values") {
    Field f = build_field(11, 1);
    MultCharacter eps = MultCharacter::trivial(f);
    MultCharacter eta = MultCharacter::canonical(f, 10);

    CHECK(greene_binomial(eps, eps) == CycRational(CycNumber::integer(9), 11)); // (q-2)/q
    CHECK(greene_binomial(eta, eps) == CycRational(CycNumber::integer(-1), 11)); // -1/q

    // exact 9-term evaluation for (A, B) = (eta, eta^3)
    MultCharacter A = eta, B = eta.pow(3);
    CycNumber j = jacobi_sum(A, B.conj());
    if (B.sign_at_minus_one() < 0) j = -j;
    CHECK(greene_binomial(A, B) == CycRational(j, 11));
}

TEST_CASE("2f1 def equals sum, full cube at p = 7") {
    Field f = build_field(7, 1);
    long Q1 = 6;
    for (long ta = 0; ta < Q1; ++ta)
        for (long tb = 0; tb < Q1; ++tb)
            for (long tc = 0; tc < Q1; ++tc) {
                MultCharacter A(f, Q1, ta), B(f, Q1, tb), C(f, Q1, tc);
                for (std::uint64_t lam = 0; lam < 7; ++lam) {
                    CycRational d = greene_2f1_def(A, B, C, (Elt)lam);
                    CycRational s = greene_2f1_sum(A, B, C, (Elt)lam);
                    CHECK(d == s);
                }
            }
}

TEST_CASE("2f1 at lambda = 0 vanishes") {
    Field f = build_field(11, 1);
    MultCharacter eta = MultCharacter::canonical(f, 10);
    CHECK(greene_2f1_def(eta, eta.pow(2), eta.pow(3), 0).is_zero());
    CHECK(greene_2f1_sum(eta, eta.pow(2), eta.pow(3), 0).is_zero());
    // def = sum spot checks at p = 11
    MultCharacter eps = MultCharacter::trivial(f);
    CHECK(greene_2f1_def(eps, eps, eps, 2) == greene_2f1_sum(eps, eps, eps, 2));
    CHECK(greene_2f1_def(eta, eta.pow(7), eta.pow(4), 5) == greene_2f1_sum(eta, eta.pow(7), eta.pow(4), 5));
}

TEST_CASE("2f1 def equals sum over an extension field") {
    Field f = build_field(5, 2); // q = 25
    long Q1 = 24;
    MultCharacter A(f, Q1, 5), B(f, Q1, 7), C(f, Q1, 11);
    for (Elt lam : {Elt(0), Elt(2), Elt(7), Elt(13)})
        CHECK(greene_2f1_def(A, B, C, lam) == greene_2f1_sum(A, B, C, lam));
}

TEST_CASE("jacobi swap lemma") {
    Field f7 = build_field(7, 1);
    MultCharacter eta = MultCharacter::canonical(f7, 6);
    CHECK(verify_jacobi_swap(eta, eta.pow(2), eta.pow(4), 3).holds);

    Field f11 = build_field(11, 1);
    MultCharacter e11 = MultCharacter::canonical(f11, 10);
    CHECK(verify_jacobi_swap(e11, e11.pow(3), e11.pow(7), 5).holds);
    CHECK(verify_jacobi_swap(e11, e11, e11.pow(4), 6).holds); // A = B, trivially

    // full admissible sweep at p = 7
    for (long ta = 1; ta < 6; ++ta)
        for (long tb = 1; tb < 6; ++tb)
            for (long tc = 0; tc < 6; ++tc) {
                if (ta == tc || tb == tc) continue;
                MultCharacter A(f7, 6, ta), B(f7, 6, tb), C(f7, 6, tc);
                for (Elt lam = 0; lam < 7; ++lam) CHECK(verify_jacobi_swap(A, B, C, lam).holds);
            }
    CHECK_THROWS_AS(verify_jacobi_swap(MultCharacter::trivial(f7), eta, eta.pow(2), 3), error);
}

TEST_CASE("corollary: symmetric in A, B when C = eps") {
    Field f7 = build_field(7, 1);
    MultCharacter eta = MultCharacter::canonical(f7, 6);
    CHECK(verify_trivial_c_symmetry(eta, eta, 4));
    CHECK(verify_trivial_c_symmetry(eta, eta.pow(3), 4));

    Field f11 = build_field(11, 1);
    for (long ta = 0; ta < 10; ++ta)
        for (long tb = 0; tb < 10; ++tb) {
            MultCharacter A(f11, 10, ta), B(f11, 10, tb);
            for (Elt lam = 0; lam < 11; ++lam) CHECK(verify_trivial_c_symmetry(A, B, lam));
        }
}

TEST_CASE("conjugate-parameter transformation") {
    Field f7 = build_field(7, 1);
    MultCharacter eta7 = MultCharacter::canonical(f7, 6);
    CHECK(verify_conjugate_transform(eta7, eta7.pow(2), eta7.pow(4), 3).holds);

    Field f13 = build_field(13, 1);
    MultCharacter eta13 = MultCharacter::canonical(f13, 12);
    CHECK(verify_conjugate_transform(eta13, eta13.pow(3), eta13.pow(-2), 2).holds);

    CHECK_THROWS_AS(verify_conjugate_transform(eta7, eta7.pow(2), eta7.pow(4), 1), error); // lambda = 1

    // full admissible sweep at p = 7
    for (long ta = 1; ta < 6; ++ta)
        for (long tb = 1; tb < 6; ++tb)
            for (long tc = 0; tc < 6; ++tc) {
                if (tc == ta || tc == tb) continue;
                MultCharacter A(f7, 6, ta), B(f7, 6, tb), C(f7, 6, tc);
                for (Elt lam = 2; lam < 7; ++lam) CHECK(verify_conjugate_transform(A, B, C, lam).holds);
            }
}

TEST_CASE("order-6 hypergeometric identity") {
    // 2F1(eta, eta^2; conj eta; l) = eta(l) eta^2((1-l)/4) 2F1(conj eta, conj eta^2; eta; l)
    for (long p : {7L, 13L, 19L}) {
        Field f = build_field(p, 1);
        for (long t : {1L, 5L}) {
            MultCharacter eta(f, 6, t);
            for (Elt lam = 2; lam < (Elt)p; ++lam) {
                CycRational lhs = greene_2f1_def(eta, eta.pow(2), eta.conj(), lam);
                CycRational rhs = greene_2f1_def(eta.conj(), eta.conj().pow(2), eta, lam);
                Elt arg = f->mul(f->sub(f->one(), lam), f->inv(f->from_int(4)));
                CycNumber pref = eta.value_at(lam, 6) * eta.pow(2).value_at(arg, 6);
                CHECK(lhs == CycRational(pref, 1) * rhs);
            }
        }
    }
}

TEST_CASE("order-12 hypergeometric chain") {
    for (long p : {13L, 37L}) {
        Field fd = build_field(p, 1);
        const auto& f = *fd;
        for (long t : {1L, 5L, 7L, 11L}) {
            MultCharacter eta(fd, 12, t);
            for (Elt lam = 2; lam < (Elt)p; ++lam) {
                CycRational F1 = greene_2f1_def(eta, eta.pow(3), eta.pow(-2), lam);
                CycRational F2 = greene_2f1_def(eta.pow(5), eta.pow(3), eta.pow(2), lam);
                CycRational F3 = greene_2f1_def(eta.pow(-5), eta.pow(-3), eta.pow(-2), lam);
                CycRational F4 = greene_2f1_def(eta.pow(-1), eta.pow(-3), eta.pow(2), lam);

                CHECK(F1 == CycRational(eta.pow(2).value_at(lam, 12), 1) * F2);

                Elt om = f.sub(f.one(), lam);
                Elt m27 = f.neg(f.from_int(27));
                Elt arg3 = f.mul(m27, f.pow(om, 6));
                CHECK(F1 == CycRational(eta.value_at(arg3, 12), 1) * F3);

                Elt arg4 = f.mul(arg3, f.mul(lam, lam));
                CHECK(F1 == CycRational(eta.value_at(arg4, 12), 1) * F4);
            }
        }
    }
}
