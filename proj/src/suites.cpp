#include "glcurve/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "json.hpp"

namespace glcurve::suites {

using nlohmann::json;

namespace {

json load_expectations(const Options& opt) {
    std::string path = opt.expectations_path.empty() ? default_expectations_path() : opt.expectations_path;
    std::ifstream in(path);
    require(in.good(), errc::usage, "cannot open expectations file: " + path);
    json j;
    in >> j;
    return j;
}

const json* find_expected(const json& all, const std::string& suite, const std::string& item) {
    for (const auto& e : all) {
        if (e.value("suite", "") == suite && e.value("item_id", "") == item) {
            auto it = e.find("expected");
            if (it != e.end()) return &*it;
        }
    }
    return nullptr;
}

Item guarded(const std::function<Item()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return Item{"exception", false, e.what()};
    }
}

// deterministic parallel map: tasks produce items by index, order preserved
std::vector<Item> run_tasks(std::vector<std::function<Item()>> tasks, long jobs) {
    std::vector<Item> out(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = guarded(tasks[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            out[i] = guarded(tasks[i]);
        }
    };
    std::vector<std::thread> pool;
    for (long t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

std::vector<long> primes_upto(long bound, long residue, long mod) {
    std::vector<long> ps;
    for (long p = 2; p <= bound; ++p)
        if (is_prime_u64((std::uint64_t)p) && p % mod == residue) ps.push_back(p);
    return ps;
}

} // namespace

std::string default_expectations_path() {
    std::string local = "data/expectations.json";
    std::ifstream probe(local);
    if (probe.good()) return local;
    return std::string(GLCURVE_SOURCE_DIR) + "/data/expectations.json";
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"greene", "hd",   "yamamoto-example", "count",
                                                   "sec6",   "sec71", "sec72",            "lmfdb-table",
                                                   "periods", "weil"};
    return names;
}

namespace {

SuiteResult run_greene(const Options& opt) {
    SuiteResult sr{"greene", {}};
    long pmax = opt.pmax ? opt.pmax : 13;
    std::vector<long> ps = opt.primes.empty() ? primes_upto(pmax, 0, 1) : opt.primes;
    std::vector<std::function<Item()>> tasks;
    for (long p : ps) {
        if (p < 7) continue; // the identity sweeps are anchored at p in {7, 11, 13}
        tasks.push_back([p]() -> Item {
            Field f = build_field(p, 1);
            long Q1 = p - 1;
            long bad = 0;
            for (long ta = 0; ta < Q1; ++ta)
                for (long tb = 0; tb < Q1; ++tb)
                    for (long tc = 0; tc < Q1; ++tc) {
                        MultCharacter A(f, Q1, ta), B(f, Q1, tb), C(f, Q1, tc);
                        for (Elt lam = 0; lam < (Elt)p; ++lam)
                            if (greene_2f1_def(A, B, C, lam) != greene_2f1_sum(A, B, C, lam)) ++bad;
                    }
            return Item{"2f1-def-eq-sum/p=" + std::to_string(p), bad == 0,
                        std::to_string(bad) + " mismatches"};
        });
        tasks.push_back([p]() -> Item {
            Field f = build_field(p, 1);
            long Q1 = p - 1;
            long bad = 0;
            for (long ta = 1; ta < Q1; ++ta)
                for (long tb = 1; tb < Q1; ++tb)
                    for (long tc = 0; tc < Q1; ++tc) {
                        if (tc == ta || tc == tb) continue;
                        MultCharacter A(f, Q1, ta), B(f, Q1, tb), C(f, Q1, tc);
                        for (Elt lam = 0; lam < (Elt)p; ++lam)
                            if (!verify_jacobi_swap(A, B, C, lam).holds) ++bad;
                    }
            return Item{"jacobi-swap/p=" + std::to_string(p), bad == 0,
                        std::to_string(bad) + " mismatches"};
        });
        tasks.push_back([p]() -> Item {
            Field f = build_field(p, 1);
            long Q1 = p - 1;
            long bad = 0;
            for (long ta = 0; ta < Q1; ++ta)
                for (long tb = 0; tb < Q1; ++tb) {
                    MultCharacter A(f, Q1, ta), B(f, Q1, tb);
                    for (Elt lam = 0; lam < (Elt)p; ++lam)
                        if (!verify_trivial_c_symmetry(A, B, lam)) ++bad;
                }
            return Item{"trivial-c-symmetry/p=" + std::to_string(p), bad == 0,
                        std::to_string(bad) + " mismatches"};
        });
        tasks.push_back([p]() -> Item {
            Field f = build_field(p, 1);
            long Q1 = p - 1;
            long bad = 0;
            for (long ta = 1; ta < Q1; ++ta)
                for (long tb = 1; tb < Q1; ++tb)
                    for (long tc = 0; tc < Q1; ++tc) {
                        if (tc == ta || tc == tb) continue;
                        MultCharacter A(f, Q1, ta), B(f, Q1, tb), C(f, Q1, tc);
                        for (Elt lam = 2; lam < (Elt)p; ++lam)
                            if (!verify_conjugate_transform(A, B, C, lam).holds) ++bad;
                    }
            return Item{"conjugate-transform/p=" + std::to_string(p), bad == 0,
                        std::to_string(bad) + " mismatches"};
        });
        if (p % 6 == 1) {
            tasks.push_back([p]() -> Item {
                Field fd = build_field(p, 1);
                const auto& f = *fd;
                long bad = 0;
                for (long t : {1L, 5L}) {
                    MultCharacter eta(fd, 6, t);
                    for (Elt lam = 2; lam < (Elt)p; ++lam) {
                        CycRational lhs = greene_2f1_def(eta, eta.pow(2), eta.conj(), lam);
                        CycRational rhs = greene_2f1_def(eta.conj(), eta.conj().pow(2), eta, lam);
                        Elt arg = f.mul(f.sub(f.one(), lam), f.inv(f.from_int(4)));
                        CycNumber pref = eta.value_at(lam, 6) * eta.pow(2).value_at(arg, 6);
                        if (lhs != CycRational(pref, 1) * rhs) ++bad;
                    }
                }
                return Item{"order6-identity/p=" + std::to_string(p), bad == 0,
                            std::to_string(bad) + " mismatches"};
            });
        }
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_hd(const Options& opt) {
    SuiteResult sr{"hd", {}};
    long pmax = opt.pmax ? opt.pmax : 19;
    std::vector<long> ps = opt.primes.empty() ? primes_upto(pmax, 0, 1) : opt.primes;
    std::vector<std::function<Item()>> tasks;
    for (long p : ps) {
        if (p < 5) continue;
        tasks.push_back([p]() -> Item {
            long bad = 0, ran = 0;
            for (long M = 2; M <= p - 1; M += 2) {
                if ((p - 1) % M != 0) continue;
                for (long ell = 1; ell <= M; ++ell) {
                    if (M % ell != 0) continue;
                    for (long a = 1; a <= M; ++a) {
                        ++ran;
                        if (!hasse_davenport_check(p, M, ell, a).holds) ++bad;
                    }
                }
            }
            return Item{"hasse-davenport/p=" + std::to_string(p), bad == 0,
                        std::to_string(bad) + " of " + std::to_string(ran) + " relations failed"};
        });
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_yamamoto(const Options& opt) {
    SuiteResult sr{"yamamoto-example", {}};
    json exp = load_expectations(opt);
    std::vector<long> ps = opt.primes.empty() ? std::vector<long>{11, 31, 41} : opt.primes;
    std::vector<std::function<Item()>> tasks;
    for (long p : ps) {
        tasks.push_back([p, &exp]() -> Item {
            std::string id = "jacobi-quotient/p=" + std::to_string(p);
            const json* e = find_expected(exp, "yamamoto-example", id);
            std::string want = e ? e->get<std::string>() : "eta^8(2)";
            if (want != "eta^8(2)")
                return Item{id, false, "unsupported expectation " + want};
            Field f = build_field(p, 1);
            bool ok = true;
            for (long t = 1; t < 10; ++t) {
                if (std::gcd(t, 10L) != 1) continue;
                MultCharacter eta(f, 10, t);
                CycNumber lhs = jacobi_sum(eta, eta.pow(6));
                CycNumber mid = eta.value_at(f->neg(f->one()), 10) *
                                jacobi_sum(eta, eta.pow(5));
                CycNumber mid_den = jacobi_sum(eta.pow(2), eta.pow(4));
                CycNumber rhs_unit = eta.pow(8).value_at(f->from_int(2), 10);
                CycNumber den = jacobi_sum(eta.pow(2), eta.pow(5));
                // J(eta,eta^6) = eta(-1) J(eta,eta^5)/J(eta^2,eta^4) * J(eta^2,eta^5) = eta^8(2) J(eta^2,eta^5)
                if (lhs * mid_den != mid * den) ok = false;
                if (lhs != rhs_unit * den) ok = false;
            }
            return Item{id, ok, ok ? "J(eta,eta^6)/J(eta^2,eta^5) = eta^8(2) for every order-10 eta"
                                   : "quotient identity failed"};
        });
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_count(const Options& opt) {
    SuiteResult sr{"count", {}};
    long pmax = opt.pmax ? opt.pmax : 37;
    const std::vector<std::array<long, 4>> fams = {
        {6, 4, 3, 1}, {3, 1, 2, 1}, {5, 1, 4, 1}, {10, 2, 7, 7}, {12, 9, 5, 1}};
    std::vector<std::function<Item()>> tasks;
    for (const auto& fa : fams) {
        for (long p : primes_upto(pmax, 1 % fa[0], fa[0])) {
            if (p <= fa[0]) continue;
            tasks.push_back([fa, p]() -> Item {
                CurveFamily fam(fa[0], fa[1], fa[2], fa[3]);
                Field f = build_field(p, 1);
                long bad = 0;
                for (long lam = 2; lam < p; ++lam) {
                    CurveInstance inst(fam, Rational(lam));
                    CountResult b = count_points_brute(inst, f);
                    CountResult h = count_points_hgf(inst, f);
                    if (b.total != h.total || b.affine_sum != h.affine_sum) ++bad;
                }
                return Item{"hgf-eq-brute/" + fam.str() + "/p=" + std::to_string(p), bad == 0,
                            std::to_string(bad) + " lambda values disagreed"};
            });
        }
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_sec6(const Options& opt) {
    SuiteResult sr{"sec6", {}};
    long pmax = opt.pmax ? opt.pmax : 100;
    std::vector<long> ps = opt.primes.empty() ? primes_upto(pmax - 1, 1, 3) : opt.primes;
    std::vector<std::function<Item()>> tasks;
    for (long p : ps) {
        if (p <= 3) continue;
        for (long s : {2L, 3L, 5L, 7L}) {
            if (s % p == 0 || (s - 1) % p == 0) continue;
            tasks.push_back([p, s]() -> Item {
                auto r = check_366_trace_identity(Rational(s), p);
                return Item{"trace-identity/p=" + std::to_string(p) + "/s=" + std::to_string(s), r.holds,
                            r.holds ? "exact" : r.witness};
            });
            tasks.push_back([p, s]() -> Item {
                bool ok = check_p1_coefficients(p, Rational(s));
                return Item{"p1-coefficients/p=" + std::to_string(p) + "/s=" + std::to_string(s), ok,
                            ok ? "coefficients agree mod p" : "coefficient mismatch"};
            });
        }
        tasks.push_back([p]() -> Item {
            bool ok = check_p1_coefficients_symbolic(p);
            return Item{"p1-coefficients-symbolic/p=" + std::to_string(p), ok,
                        ok ? "polynomials in s agree mod p" : "mismatch"};
        });
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_sec71(const Options& opt) {
    SuiteResult sr{"sec71", {}};
    long pmax = opt.pmax ? opt.pmax : 50;
    std::vector<long> ps = opt.primes.empty() ? primes_upto(pmax - 1, 0, 1) : opt.primes;
    std::vector<std::function<Item()>> tasks;
    for (long lam : {2L, 4L, 5L}) {
        for (long p : ps) {
            if (p <= 3) continue;
            Rational l(lam);
            if (!elliptic_good_reduction(p, l)) continue;
            tasks.push_back([p, lam]() -> Item {
                Rational l(lam);
                CurveInstance inst(CurveFamily(3, 1, 2, 1), l);
                Field f = build_field(p, 1);
                long long tr = frobenius_trace_from_counts(inst, f);
                long chi3 = p % 3 == 1 ? 1 : -1;
                long long rhs = elliptic_ap(p, l) * (1 + chi3);
                bool ok = tr == rhs;
                if (p % 3 == 1 && frobenius_trace_new(inst, f) != tr) ok = false;
                if (p % 3 == 2 && tr != 0) ok = false;
                return Item{"elliptic-comparison/lambda=" + std::to_string(lam) + "/p=" + std::to_string(p),
                            ok,
                            "trace=" + std::to_string(tr) + " ap(E)(1+chi)=" + std::to_string(rhs)};
            });
        }
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_sec72(const Options& opt) {
    SuiteResult sr{"sec72", {}};
    std::vector<long> ps = opt.primes.empty() ? std::vector<long>{13, 37} : opt.primes;
    std::vector<std::function<Item()>> tasks;
    for (long p : ps) {
        if (p % 12 != 1) continue;
        tasks.push_back([p]() -> Item {
            Field fd = build_field(p, 1);
            const auto& f = *fd;
            long bad = 0;
            for (long t : {1L, 5L, 7L, 11L}) {
                MultCharacter eta(fd, 12, t);
                for (Elt lam = 2; lam < (Elt)p; ++lam) {
                    CycRational F1 = greene_2f1_def(eta, eta.pow(3), eta.pow(-2), lam);
                    CycRational F2 = greene_2f1_def(eta.pow(5), eta.pow(3), eta.pow(2), lam);
                    CycRational F3 = greene_2f1_def(eta.pow(-5), eta.pow(-3), eta.pow(-2), lam);
                    CycRational F4 = greene_2f1_def(eta.pow(-1), eta.pow(-3), eta.pow(2), lam);
                    if (F1 != CycRational(eta.pow(2).value_at(lam, 12), 1) * F2) ++bad;
                    Elt om = f.sub(f.one(), lam);
                    Elt arg3 = f.mul(f.neg(f.from_int(27)), f.pow(om, 6));
                    if (F1 != CycRational(eta.value_at(arg3, 12), 1) * F3) ++bad;
                    Elt arg4 = f.mul(arg3, f.mul(lam, lam));
                    if (F1 != CycRational(eta.value_at(arg4, 12), 1) * F4) ++bad;
                }
            }
            return Item{"order12-chain/p=" + std::to_string(p), bad == 0,
                        std::to_string(bad) + " mismatches"};
        });
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_lmfdb(const Options& opt) {
    SuiteResult sr{"lmfdb-table", {}};
    json exp = load_expectations(opt);
    std::vector<long> ps = opt.primes.empty() ? std::vector<long>{7, 11, 13, 17, 19, 31, 41} : opt.primes;
    std::vector<std::function<Item()>> tasks;
    for (long p : ps) {
        tasks.push_back([p, &exp]() -> Item {
            std::string id = "lpoly/p=" + std::to_string(p);
            const json* e = find_expected(exp, "lmfdb-table", id);
            if (!e) return Item{id, false, "no expectation pinned"};
            CurveInstance inst(CurveFamily(5, 1, 4, 1), Rational(2));
            LPolynomial L = l_polynomial(inst, p);
            std::vector<BigInt> want;
            for (const auto& c : *e) want.push_back(BigInt(c.get<std::string>()));
            bool ok = L.coeffs == want;
            return Item{id, ok, ok ? "coefficients match the pinned expansion" : "got " + L.str()};
        });
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_periods(const Options& opt) {
    SuiteResult sr{"periods", {}};
    json exp = load_expectations(opt);
    long P = opt.precision;
    mpfr_prec_t prec = hp::bits_for_digits(P);
    std::vector<std::function<Item()>> tasks;

    tasks.push_back([&exp, P, prec]() -> Item {
        const json* e = find_expected(exp, "periods", "beta-quotient-2to45");
        if (!e) return Item{"beta-quotient-2to45", false, "no expectation pinned"};
        hp::Real q = beta_fn(Rational(1, 10), Rational(6, 10), P) /
                     beta_fn(Rational(2, 10), Rational(5, 10), P);
        hp::Real want = hp::Real::of_decimal(e->get<std::string>(), prec);
        bool ok = (q - want).abs() <= hp::Real::pow10(-40, prec);
        return Item{"beta-quotient-2to45", ok, "B(1/10,6/10)/B(2/10,5/10) vs pinned 2^(4/5)"};
    });
    tasks.push_back([&exp, P, prec]() -> Item {
        const json* e = find_expected(exp, "periods", "beta-quotient-sec72");
        if (!e) return Item{"beta-quotient-sec72", false, "no expectation pinned"};
        hp::Real q = beta_fn(Rational(1, 4), Rational(7, 12), P) /
                     beta_fn(Rational(1, 12), Rational(3, 4), P);
        hp::Real want = hp::Real::of_decimal(e->get<std::string>(), prec);
        bool ok = (q - want).abs() <= hp::Real::pow10(-40, prec);
        return Item{"beta-quotient-sec72", ok, "B(1/4,7/12)/B(1/12,3/4) vs pinned sqrt(2 sqrt(3)/3 - 1)"};
    });

    const json* e_b12 = find_expected(exp, "periods", "beta1beta2");
    const json* e_g641 = find_expected(exp, "periods", "gamma-ratio-641");
    for (const char* ls : {"0.1", "0.3", "0.7"}) {
        std::string l(ls);
        tasks.push_back([l, P, prec, e_b12]() -> Item {
            if (!e_b12) return Item{"beta1beta2/lambda=" + l, false, "no expectation pinned"};
            hp::Real want = hp::Real::of_decimal(e_b12->get<std::string>(), prec);
            hp::Real lam = hp::Real::of_decimal(l, prec);
            PeriodMatrix m = period_matrix(CurveFamily(6, 4, 3, 1), lam, P);
            hp::Complex prod = (m.at(0, 2) / m.at(1, 0)) * (m.at(1, 2) / m.at(0, 0));
            hp::Real resid = (prod - hp::Complex::of_real(want)).abs();
            bool ok = resid <= hp::Real::pow10(-40, prec);
            return Item{"beta1beta2/lambda=" + l, ok, "residual " + resid.str(3)};
        });
        tasks.push_back([l, P, prec, e_g641]() -> Item {
            if (!e_g641) return Item{"gamma-ratio-641/lambda=" + l, false, "no expectation pinned"};
            hp::Real want = hp::Real::of_decimal(e_g641->get<std::string>(), prec);
            hp::Real lam = hp::Real::of_decimal(l, prec);
            auto r = gamma_ratio_check(CurveFamily(6, 4, 3, 1), lam, P);
            bool ok = r.holds && (r.ratio - want).abs() <= hp::Real::pow10(-40, prec);
            return Item{"gamma-ratio-641/lambda=" + l, ok, "residual " + r.residual.str(3)};
        });
    }
    tasks.push_back([P, prec]() -> Item {
        auto rs = endomorphism_relations_check(CurveFamily(12, 9, 5, 1), hp::Real::of_decimal("0.4", prec), P);
        bool ok = rs.size() == 6;
        std::string detail;
        for (const auto& r : rs) {
            ok = ok && r.ok;
            detail += r.name + " resid " + r.residual.str(3) + "; ";
        }
        return Item{"endomorphisms-1295", ok, detail};
    });
    tasks.push_back([P, prec]() -> Item {
        auto rs = endomorphism_relations_check(CurveFamily(10, 2, 7, 7), hp::Real::of_decimal("0.4", prec), P);
        bool ok = rs.size() == 3;
        std::string detail;
        for (const auto& r : rs) {
            ok = ok && r.ok;
            detail += r.name + " resid " + r.residual.str(3) + "; ";
        }
        return Item{"endomorphisms-10277", ok, detail};
    });
    const json* e_qm = find_expected(exp, "periods", "qm-641");
    tasks.push_back([P, e_qm]() -> Item {
        QmResult r = qm_check(6, 4, 3, 1, {}, P);
        bool ok = e_qm && r.verdict_str() == e_qm->get<std::string>();
        return Item{"qm-641", ok, "verdict " + r.verdict_str() + ", beta guess " + r.beta_guess.str()};
    });
    const json* e_cl = find_expected(exp, "periods", "qm-10277-charlike");
    for (long p : {11L, 31L}) {
        tasks.push_back([p, e_cl]() -> Item {
            // [10;2,7,7]-derived quotients: beta1 ~ (3,7,11), beta2 ~ (9,1,3) mod 10
            auto r1 = character_quotient_test(10, 3, 7, 11, p);
            auto r2 = character_quotient_test(10, 9, 1, 3, p);
            bool want_like = e_cl && e_cl->get<std::string>() == "CharacterLike";
            bool ok = want_like && r1.character_like() && r2.character_like();
            return Item{"qm-10277-charlike/p=" + std::to_string(p), ok,
                        ok ? "both Beta-quotient characters pass" : r1.witness + " | " + r2.witness};
        });
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

SuiteResult run_weil(const Options& opt) {
    SuiteResult sr{"weil", {}};
    std::mt19937_64 rng(opt.seed);
    struct Pool {
        std::array<long, 4> fam;
        std::vector<long> ps;
    };
    std::vector<Pool> pools = {
        {{3, 1, 2, 1}, primes_upto(97, 0, 1)},
        {{4, 1, 2, 1}, primes_upto(97, 0, 1)},
        {{6, 4, 3, 1}, primes_upto(61, 0, 1)},
        {{5, 1, 4, 1}, primes_upto(23, 0, 1)},
    };
    for (auto& pl : pools)
        pl.ps.erase(std::remove_if(pl.ps.begin(), pl.ps.end(), [](long p) { return p <= 3; }), pl.ps.end());

    std::vector<std::function<Item()>> tasks;
    long made = 0;
    while (made < 50) {
        const Pool& pl = pools[rng() % pools.size()];
        long p = pl.ps[rng() % pl.ps.size()];
        long lam = 2 + (long)(rng() % 11);
        if (lam % p == 0 || (lam - 1) % p == 0) continue;
        ++made;
        tasks.push_back([pl, p, lam, made]() -> Item {
            CurveFamily fam(pl.fam[0], pl.fam[1], pl.fam[2], pl.fam[3]);
            CurveInstance inst(fam, Rational(lam));
            LPolynomial L = l_polynomial(inst, p); // validate() runs inside
            return Item{"weil/" + std::to_string(made) + "/" + fam.str() + "/p=" + std::to_string(p) +
                            "/lambda=" + std::to_string(lam),
                        true, "c0, functional equation, and root moduli verified"};
        });
    }
    sr.items = run_tasks(std::move(tasks), opt.jobs);
    return sr;
}

} // namespace

SuiteResult run_suite(const std::string& name, const Options& opt) {
    if (name == "greene") return run_greene(opt);
    if (name == "hd") return run_hd(opt);
    if (name == "yamamoto-example") return run_yamamoto(opt);
    if (name == "count") return run_count(opt);
    if (name == "sec6") return run_sec6(opt);
    if (name == "sec71") return run_sec71(opt);
    if (name == "sec72") return run_sec72(opt);
    if (name == "lmfdb-table") return run_lmfdb(opt);
    if (name == "periods") return run_periods(opt);
    if (name == "weil") return run_weil(opt);
    fail(errc::usage, "unknown suite: " + name);
}

std::vector<SuiteResult> run_all(const Options& opt) {
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, opt));
    return out;
}

} // namespace glcurve::suites
