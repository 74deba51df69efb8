#include "glcurve/periods.hpp"

namespace glcurve {

QmResult qm_check(long N, long i, long j, long k, std::vector<long> primes, long digits) {
    require(N == 3 || N == 4 || N == 6, errc::precondition, "QM criterion requires N in {3, 4, 6}");
    require(1 <= i && i < N && 1 <= j && j < N && 1 <= k && k < N, errc::precondition,
            "require 1 <= i, j, k < N");
    require((i + j + k) % N != 0, errc::precondition, "the CM case N | i+j+k is excluded");

    // finite-field route: F(eta) = J(eta^{-k'}, eta^{i'+j'+k'}) / J(eta^{i'}, eta^{j'}) in the
    // quotient-test shape (i_t, j_t, k_t) = (i', -k', i'+j') with M = N, doubling into M = 6 for N = 3
    long M = N == 3 ? 6 : N;
    long mult = N == 3 ? 2 : 1;
    long it = (mult * i) % M;
    long jt = ((-mult * k) % M + M) % M;
    long kt = (mult * (i + j)) % M;

    bool triple_ok = true;
    for (long v : {it, jt, kt, (kt - it) % M, (kt - jt) % M})
        if (((v % M) + M) % M == 0) triple_ok = false;

    if (primes.empty()) {
        for (long p = M + 1; (long)primes.size() < 3; p += M)
            if (is_prime_u64((std::uint64_t)p)) primes.push_back(p);
    }

    QmResult out;
    bool all_char_like = triple_ok;
    bool any_not_char_like = false;
    for (long p : primes) {
        QmResult::PrimeEvidence ev;
        ev.p = p;
        if (!triple_ok) {
            ev.applicable = false;
            ev.detail = "character test inapplicable: M divides one of the quotient exponents";
        } else {
            ev.applicable = true;
            try {
                auto res = character_quotient_test(M, it, jt, kt, p);
                ev.character_like = res.character_like();
                ev.detail = res.character_like()
                                ? "CharacterLike, F(eta) = zeta_" + std::to_string(M) + "^" +
                                      std::to_string(res.root_exponent)
                                : "NotCharacterLike: " + res.witness;
                if (!res.character_like()) any_not_char_like = true;
                all_char_like = all_char_like && res.character_like();
            } catch (const error& e) {
                ev.applicable = false;
                ev.detail = std::string("character test error: ") + e.what();
                all_char_like = false;
            }
        }
        out.primes.push_back(std::move(ev));
    }

    // numeric route: Theorem-1 Beta quotient
    auto beta_value = [N, i, j, k](long dig) {
        return hp::Complex::of_real(beta_fn(Rational(N - i, N), Rational(N - j, N), dig) /
                                    beta_fn(Rational(k, N), Rational(2 * N - i - j - k, N), dig));
    };
    out.beta_guess = recognize_algebraic(beta_value, digits);
    out.beta_value = beta_value(digits).re.str(digits);

    if (!triple_ok)
        out.note = "finite-field channel inapplicable for this (N,i,j,k); verdict rests on recognition only";

    if (any_not_char_like) out.verdict = QmResult::Verdict::no_qm;
    else if (all_char_like && !out.primes.empty() && out.beta_guess.recognized())
        out.verdict = QmResult::Verdict::qm;
    else out.verdict = QmResult::Verdict::inconclusive;
    return out;
}

} // namespace glcurve
