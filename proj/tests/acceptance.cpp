// Acceptance suite: one line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <string>

#include "glcurve/suites.hpp"

using namespace glcurve;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %2d [%s]: %s  %s\n", n, name.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string suite_summary(const suites::SuiteResult& sr) {
    std::string s = std::to_string(sr.passed()) + "/" + std::to_string(sr.items.size()) + " items";
    if (!sr.all_pass()) {
        for (const auto& it : sr.items)
            if (!it.pass) { s += "; first failure: " + it.id + " (" + it.detail + ")"; break; }
    }
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    suites::Options opt; // defaults: precision 50, fixed seed, shipped expectations
    const long P = 50;
    const mpfr_prec_t PREC = hp::bits_for_digits(P);
    const hp::Real tol40 = hp::Real::pow10(-40, PREC);

    {
        auto t0 = std::chrono::steady_clock::now();
        auto sr = suites::run_suite("lmfdb-table", opt);
        report(1, "L-polynomial table, p in {7,11,13,17,19,31,41}", sr.all_pass(),
               suite_summary(sr) + ", " + std::to_string(seconds_since(t0)) + "s");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        suites::Options g = opt;
        g.pmax = 13;
        auto sr = suites::run_suite("greene", g);
        report(2, "Greene identity suite at p in {7,11,13}", sr.all_pass(),
               suite_summary(sr) + ", " + std::to_string(seconds_since(t0)) + "s");
    }
    {
        suites::Options c = opt;
        c.pmax = 37;
        auto sr = suites::run_suite("count", c);
        report(3, "counting-theorem oracle equivalence, p <= 37", sr.all_pass(), suite_summary(sr));
    }
    {
        auto sr = suites::run_suite("yamamoto-example", opt);
        bool exact = sr.all_pass();
        hp::Real q = beta_fn(Rational(1, 10), Rational(6, 10), P) /
                     beta_fn(Rational(2, 10), Rational(5, 10), P);
        hp::Real target = hp::pow(hp::Real::of_long(2, PREC), hp::Real::of_rational(Rational(4, 5), PREC));
        bool numeric = (q - target).abs() <= tol40;
        report(4, "order-10 example: exact quotient and Beta value", exact && numeric,
               suite_summary(sr) + (numeric ? "; |B-quotient - 2^(4/5)| <= 1e-40" : "; Beta value off"));
    }
    {
        hp::Real q = beta_fn(Rational(1, 4), Rational(7, 12), P) /
                     beta_fn(Rational(1, 12), Rational(3, 4), P);
        hp::Real t = hp::sqrt(hp::Real::of_long(2, PREC) * hp::sqrt(hp::Real::of_long(3, PREC)) /
                                  hp::Real::of_long(3, PREC) -
                              hp::Real::of_long(1, PREC));
        bool ok = (q - t).abs() <= tol40;
        report(5, "B(1/4,7/12)/B(1/12,3/4) = sqrt(2 sqrt(3)/3 - 1)", ok,
               ok ? "within 1e-40 at 50 digits" : "off by more than 1e-40");
    }
    {
        bool ok = true;
        std::string detail;
        for (const char* ls : {"0.1", "0.3", "0.7"}) {
            hp::Real lam = hp::Real::of_decimal(ls, PREC);
            PeriodMatrix m = period_matrix(CurveFamily(6, 4, 3, 1), lam, P);
            hp::Complex prod = (m.at(0, 2) / m.at(1, 0)) * (m.at(1, 2) / m.at(0, 0));
            bool b12 = (prod - hp::Complex::of_real(hp::Real::of_long(2, PREC))).abs() <= tol40;
            auto gr = gamma_ratio_check(CurveFamily(6, 4, 3, 1), lam, P);
            bool g18 = gr.residual <= tol40;
            ok = ok && b12 && g18;
            if (!b12) detail += std::string("beta1beta2 off at lambda=") + ls + "; ";
            if (!g18) detail += std::string("gamma ratio off at lambda=") + ls + "; ";
        }
        hp::Real lam4 = hp::Real::of_decimal("0.4", PREC);
        for (auto fam : {CurveFamily(12, 9, 5, 1), CurveFamily(10, 2, 7, 7)}) {
            for (const auto& r : endomorphism_relations_check(fam, lam4, P)) {
                bool rok = r.residual <= tol40;
                ok = ok && rok;
                if (!rok) detail += fam.str() + " " + r.name + " residual too large; ";
            }
        }
        report(6, "period identities: beta1beta2, gamma ratio, endomorphism relations", ok,
               ok ? "all residuals <= 1e-40" : detail);
    }
    {
        auto sr = suites::run_suite("sec6", opt);
        report(7, "trace identity and (p-1)st coefficients, p < 100, s in {2,3,5,7}", sr.all_pass(),
               suite_summary(sr));
    }
    {
        auto sr = suites::run_suite("sec71", opt);
        report(8, "elliptic comparison for the order-3 family, good p < 50", sr.all_pass(),
               suite_summary(sr));
    }
    {
        QmResult r = qm_check(6, 4, 3, 1, {}, P);
        bool a = r.verdict == QmResult::Verdict::qm;
        bool b = true;
        std::string detail = "qm_check(6,4,3,1) = " + r.verdict_str() + ", beta " + r.beta_guess.str();
        for (long p : {11L, 31L}) {
            auto r1 = character_quotient_test(10, 3, 7, 11, p);
            auto r2 = character_quotient_test(10, 9, 1, 3, p);
            if (!r1.character_like() || !r2.character_like()) {
                b = false;
                detail += "; [10;2,7,7] quotients at p=" + std::to_string(p) + ": " +
                          (r1.character_like() ? "CharacterLike" : "NotCharacterLike (" + r1.witness + ")") +
                          " / " +
                          (r2.character_like() ? "CharacterLike" : "NotCharacterLike (" + r2.witness + ")");
            }
        }
        report(9, "QM verdicts", a && b, detail);
    }
    {
        auto sr = suites::run_suite("weil", opt);
        report(10, "Weil structure across 50 seeded (family, lambda, p) triples", sr.all_pass(),
               suite_summary(sr));
    }

    std::printf("acceptance: %d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
