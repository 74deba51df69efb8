#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "glcurve/suites.hpp"

using namespace glcurve;
using ordered_json = nlohmann::ordered_json;

namespace {

struct OutputCfg {
    std::string format = "table";
    long precision = 50;
    std::string expectations;
};

ordered_json cyc_to_json(const CycNumber& v) {
    ordered_json j;
    j["M"] = v.M();
    ordered_json coeffs = ordered_json::array();
    if (v.p() == 0) {
        for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
        j["coeffs"] = coeffs;
    } else {
        long pdim = v.p() - 1;
        long phi = v.phi();
        ordered_json grid = ordered_json::array();
        for (long a = 0; a < phi; ++a) {
            ordered_json row = ordered_json::array();
            for (long b = 0; b < pdim; ++b) row.push_back(v.coeffs()[(size_t)(a * pdim + b)].str());
            grid.push_back(row);
        }
        // coeffs carries the zeta_p-free column; the full grid sits in p_part
        for (long a = 0; a < phi; ++a) coeffs.push_back(v.coeffs()[(size_t)(a * pdim)].str());
        j["coeffs"] = coeffs;
        j["p_part"] = ordered_json{{"p", v.p()}, {"grid", grid}};
    }
    auto e = v.embed();
    j["embedding"] = {e.real(), e.imag()};
    return j;
}

ordered_json complex_to_json(const hp::Complex& v, long digits) {
    return ordered_json{{"re", v.re.str(digits)}, {"im", v.im.str(digits)}};
}

int emit(const OutputCfg& cfg, const std::string& command, const ordered_json& invocation,
         const ordered_json& items, bool all_pass, std::chrono::steady_clock::time_point started) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    started)
                  .count();
    long pass = 0, fail = 0;
    for (const auto& it : items)
        if (it.contains("status")) (it["status"] == "pass" ? pass : fail) += 1;
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema_version"] = "1";
        doc["command"] = command;
        doc["invocation"] = invocation;
        doc["items"] = items;
        doc["summary"] = ordered_json{{"pass", pass}, {"fail", fail}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& it : items) {
            std::cout << it.value("id", "item");
            if (it.contains("status")) std::cout << ": " << it["status"].get<std::string>();
            if (it.contains("detail")) std::cout << "  (" << it["detail"].get<std::string>() << ")";
            for (const auto& [k, v] : it.items()) {
                if (k == "id" || k == "status" || k == "detail") continue;
                std::cout << "\n    " << k << " = " << v.dump();
            }
            std::cout << "\n";
        }
        std::cout << "summary: " << pass << " pass, " << fail << " fail\n";
    }
    std::cerr << "elapsed_ms " << ms << "\n";
    return all_pass ? 0 : 1;
}

ordered_json result_item(const std::string& id, bool pass, const std::string& detail) {
    return ordered_json{{"id", id}, {"status", pass ? "pass" : "fail"}, {"detail", detail}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Legendre curve toolkit: character sums, point counts, periods"};
    app.require_subcommand(1);
    OutputCfg cfg;
    app.add_option("--format", cfg.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--precision", cfg.precision, "working precision in decimal digits (default 50)");
    app.add_option("--expectations", cfg.expectations, "path to the pinned expectations file");

    auto* c_count = app.add_subcommand("count", "point counts of y^N = x^i (1-x)^j (1-lambda x)^k");
    long cN, ci, cj, ck, cp, cs = 1;
    std::string clam, cmethod = "both";
    c_count->add_option("--N", cN)->required();
    c_count->add_option("--i", ci)->required();
    c_count->add_option("--j", cj)->required();
    c_count->add_option("--k", ck)->required();
    c_count->add_option("--lambda", clam, "rational u/v")->required();
    c_count->add_option("--p", cp)->required();
    c_count->add_option("--s", cs, "extension degree (default 1)");
    c_count->add_option("--method", cmethod)->check(CLI::IsMember({"brute", "hgf", "both"}));

    auto* c_lpoly = app.add_subcommand("lpoly", "L-polynomial from point counts over F_{p^s}");
    long lN, li, lj, lk, lp;
    std::string llam;
    c_lpoly->add_option("--N", lN)->required();
    c_lpoly->add_option("--i", li)->required();
    c_lpoly->add_option("--j", lj)->required();
    c_lpoly->add_option("--k", lk)->required();
    c_lpoly->add_option("--lambda", llam)->required();
    c_lpoly->add_option("--p", lp)->required();

    auto* c_char = app.add_subcommand("charsum", "Gauss/Jacobi sums and Greene 2F1 values");
    c_char->require_subcommand(1);
    auto* c_gauss = c_char->add_subcommand("gauss", "g(xi_M^a) over F_p, exact");
    long gp, gM, ga;
    c_gauss->add_option("--p", gp)->required();
    c_gauss->add_option("--M", gM)->required();
    c_gauss->add_option("--a", ga)->required();
    auto* c_jac = c_char->add_subcommand("jacobi", "J(xi_M^a, xi_M^b) over F_p, exact");
    long jp, jM, ja, jb;
    c_jac->add_option("--p", jp)->required();
    c_jac->add_option("--M", jM)->required();
    c_jac->add_option("--a", ja)->required();
    c_jac->add_option("--b", jb)->required();
    auto* c_hgf = c_char->add_subcommand("hgf", "Greene 2F1(xi^A, xi^B; xi^C; lambda) over F_p");
    long hp_, hM, hA, hB, hC;
    std::string hlam, hvia = "both";
    c_hgf->add_option("--p", hp_)->required();
    c_hgf->add_option("--M", hM)->required();
    c_hgf->add_option("--A", hA)->required();
    c_hgf->add_option("--B", hB)->required();
    c_hgf->add_option("--C", hC)->required();
    c_hgf->add_option("--lambda", hlam, "field element (integer or u/v)")->required();
    c_hgf->add_option("--via", hvia)->check(CLI::IsMember({"def", "sum", "both"}));

    auto* c_per = app.add_subcommand("periods", "periods, period matrix, gamma-ratio, beta recognition");
    long pN, pi_, pj, pk;
    std::string plam;
    c_per->add_option("--N", pN)->required();
    c_per->add_option("--i", pi_)->required();
    c_per->add_option("--j", pj)->required();
    c_per->add_option("--k", pk)->required();
    c_per->add_option("--lambda", plam, "real in (0,1), decimal")->required();

    auto* c_qm = app.add_subcommand("qm-check", "quaternionic multiplication criterion, N in {3,4,6}");
    long qN, qi, qj, qk;
    std::vector<long> qprimes;
    c_qm->add_option("--N", qN)->required();
    c_qm->add_option("--i", qi)->required();
    c_qm->add_option("--j", qj)->required();
    c_qm->add_option("--k", qk)->required();
    c_qm->add_option("--primes", qprimes, "character-test primes (default: first 3 with p = 1 mod M)")
        ->delimiter(',');

    auto* c_ver = app.add_subcommand("verify", "run a verification suite against pinned expectations");
    std::string vsuite;
    long vpmax = 0, vjobs = 1;
    std::uint64_t vseed = 20140401;
    std::vector<long> vprimes;
    c_ver->add_option("--suite", vsuite,
                      "greene|hd|yamamoto-example|count|sec6|sec71|sec72|lmfdb-table|periods|weil|all")
        ->required();
    c_ver->add_option("--pmax", vpmax);
    c_ver->add_option("--primes", vprimes)->delimiter(',');
    c_ver->add_option("--jobs", vjobs, "parallel workers for independent items (default 1)");
    c_ver->add_option("--seed", vseed, "seed for the randomized Weil sweep");

    // let global flags (--format, --precision, ...) appear anywhere on the line
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        if (*c_count) {
            CurveInstance inst(CurveFamily(cN, ci, cj, ck), Rational::parse(clam));
            Field f = build_field(cp, cs);
            ordered_json items = ordered_json::array();
            std::optional<CountResult> rb, rh;
            if (cmethod != "hgf") rb = count_points_brute(inst, f);
            if (cmethod != "brute") rh = count_points_hgf(inst, f);
            auto count_json = [](const CountResult& r) {
                return ordered_json{{"q", r.q},
                                    {"affine_sum", r.affine_sum},
                                    {"n0", r.resolved.n0},
                                    {"n1", r.resolved.n1},
                                    {"n_invlambda", r.resolved.n_invlambda},
                                    {"n_inf", r.resolved.n_inf},
                                    {"total", r.total}};
            };
            if (rb) {
                ordered_json it = result_item("count-brute", true, "direct sweep");
                it["result"] = count_json(*rb);
                items.push_back(it);
            }
            if (rh) {
                ordered_json it = result_item("count-hgf", true, "hypergeometric formula");
                it["result"] = count_json(*rh);
                items.push_back(it);
            }
            bool agree = !(rb && rh) || rb->total == rh->total;
            if (rb && rh)
                items.push_back(result_item("methods-agree", agree, agree ? "totals equal" : "totals differ"));
            return emit(cfg, "count",
                        ordered_json{{"N", cN}, {"i", ci}, {"j", cj}, {"k", ck}, {"lambda", clam},
                                     {"p", cp}, {"s", cs}, {"method", cmethod}},
                        items, agree, started);
        }
        if (*c_lpoly) {
            CurveInstance inst(CurveFamily(lN, li, lj, lk), Rational::parse(llam));
            LPolynomial L = l_polynomial(inst, lp);
            ordered_json items = ordered_json::array();
            ordered_json it = result_item("lpoly", true, "validated: c0, functional equation, Weil roots");
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : L.coeffs) coeffs.push_back(c.str());
            it["genus"] = L.genus;
            it["coeffs_low_to_high"] = coeffs;
            items.push_back(it);
            return emit(cfg, "lpoly",
                        ordered_json{{"N", lN}, {"i", li}, {"j", lj}, {"k", lk}, {"lambda", llam},
                                     {"p", lp}},
                        items, true, started);
        }
        if (*c_gauss) {
            Field f = build_field(gp, 1);
            CycNumber g = gauss_sum(MultCharacter(f, gM, ga));
            ordered_json it = result_item("gauss", true, "exact in Z[zeta_M, zeta_p]");
            it["value"] = cyc_to_json(g);
            return emit(cfg, "charsum gauss", ordered_json{{"p", gp}, {"M", gM}, {"a", ga}},
                        ordered_json::array({it}), true, started);
        }
        if (*c_jac) {
            Field f = build_field(jp, 1);
            CycNumber v = jacobi_sum(MultCharacter(f, jM, ja), MultCharacter(f, jM, jb));
            ordered_json it = result_item("jacobi", true, "exact in Z[zeta_M]");
            it["value"] = cyc_to_json(v);
            return emit(cfg, "charsum jacobi",
                        ordered_json{{"p", jp}, {"M", jM}, {"a", ja}, {"b", jb}},
                        ordered_json::array({it}), true, started);
        }
        if (*c_hgf) {
            Field f = build_field(hp_, 1);
            MultCharacter A(f, hM, hA), B(f, hM, hB), C(f, hM, hC);
            Rational lr = Rational::parse(hlam);
            long den = ((lr.den % hp_).convert_to<long>() + hp_) % hp_;
            require(den != 0, errc::precondition, "lambda denominator vanishes mod p");
            Elt lam = f->mul(f->from_int((lr.num % hp_).convert_to<long long>()), f->inv(f->from_int(den)));
            ordered_json items = ordered_json::array();
            std::optional<CycRational> vd, vs;
            if (hvia != "sum") vd = greene_2f1_def(A, B, C, lam);
            if (hvia != "def") vs = greene_2f1_sum(A, B, C, lam);
            if (vd) {
                ordered_json it = result_item("hgf-def", true, "defining character sum");
                it["num"] = cyc_to_json(vd->num);
                it["den"] = vd->den.str();
                items.push_back(it);
            }
            if (vs) {
                ordered_json it = result_item("hgf-sum", true, "binomial character sum");
                it["num"] = cyc_to_json(vs->num);
                it["den"] = vs->den.str();
                items.push_back(it);
            }
            bool agree = !(vd && vs) || *vd == *vs;
            if (vd && vs) items.push_back(result_item("routes-agree", agree, agree ? "equal" : "differ"));
            return emit(cfg, "charsum hgf",
                        ordered_json{{"p", hp_}, {"M", hM}, {"A", hA}, {"B", hB}, {"C", hC},
                                     {"lambda", hlam}, {"via", hvia}},
                        items, agree, started);
        }
        if (*c_per) {
            mpfr_prec_t prec = hp::bits_for_digits(cfg.precision);
            hp::Real lam = hp::Real::of_decimal(plam, prec);
            require(lam.sign() > 0 && lam.to_double() < 1.0, errc::precondition,
                    "lambda must lie in (0,1)");
            CurveFamily fam(pN, pi_, pj, pk);
            ordered_json items = ordered_json::array();
            bool all = true;
            bool produced = false;
            if (pN == 3 || pN == 4 || pN == 6) {
                try {
                    PeriodSet ps = period_tau(fam, lam, cfg.precision);
                    produced = true;
                    ordered_json it = result_item("period-set", true, "tau values at working precision");
                    it["tau1"] = complex_to_json(ps.tau1, cfg.precision);
                    it["tau1p"] = complex_to_json(ps.tau1p, cfg.precision);
                    it["tauNm1"] = complex_to_json(ps.tauNm1, cfg.precision);
                    it["tauNm1p"] = complex_to_json(ps.tauNm1p, cfg.precision);
                    items.push_back(it);
                    auto gr = gamma_ratio_check(fam, lam, cfg.precision);
                    all = all && gr.holds;
                    ordered_json g = result_item("gamma-ratio", gr.holds, "residual " + gr.residual.str(3));
                    g["ratio"] = gr.ratio.str(cfg.precision);
                    items.push_back(g);
                    auto guess = recognize_algebraic(
                        [&fam](long d) {
                            return hp::Complex::of_real(
                                beta_fn(Rational(fam.i + fam.j + fam.k - fam.N, fam.N),
                                        Rational(fam.N - fam.k, fam.N), d) /
                                beta_fn(Rational(fam.i, fam.N), Rational(fam.j, fam.N), d));
                        },
                        cfg.precision);
                    items.push_back(result_item("beta-recognition", true, guess.str()));
                } catch (const error& e) {
                    if (!e.precondition_like()) throw;
                    items.push_back(result_item("period-set", true, std::string("not available: ") + e.what()));
                }
            }
            try {
                PeriodMatrix m = period_matrix(fam, lam, cfg.precision);
                produced = true;
                hp::Real tol = hp::Real::pow10(-(cfg.precision - 10), prec);
                bool rank = m.full_real_rank(tol);
                all = all && rank;
                ordered_json it = result_item("period-matrix", rank, rank ? "full real rank" : "rank deficient");
                it["rows"] = m.rows;
                it["cols"] = m.cols;
                ordered_json rowsj = ordered_json::array();
                for (long r = 0; r < m.rows; ++r) {
                    ordered_json row = ordered_json::array();
                    for (long c = 0; c < m.cols; ++c) row.push_back(complex_to_json(m.at(r, c), 20));
                    rowsj.push_back(row);
                }
                it["entries"] = rowsj;
                items.push_back(it);
                auto rels = endomorphism_relations_check(fam, lam, cfg.precision);
                for (const auto& r : rels) {
                    all = all && r.ok;
                    items.push_back(result_item("relation/" + r.name, r.ok, "residual " + r.residual.str(3)));
                }
            } catch (const error& e) {
                if (!e.precondition_like()) throw;
                items.push_back(result_item("period-matrix", true, std::string("not available: ") + e.what()));
            }
            require(produced, errc::precondition, "family unsupported by every period surface");
            return emit(cfg, "periods",
                        ordered_json{{"N", pN}, {"i", pi_}, {"j", pj}, {"k", pk}, {"lambda", plam},
                                     {"precision", cfg.precision}},
                        items, all, started);
        }
        if (*c_qm) {
            QmResult r = qm_check(qN, qi, qj, qk, qprimes, cfg.precision);
            ordered_json items = ordered_json::array();
            ordered_json it = result_item("qm-verdict", true, r.verdict_str());
            it["verdict"] = r.verdict_str();
            ordered_json evs = ordered_json::array();
            for (const auto& ev : r.primes)
                evs.push_back(ordered_json{{"p", ev.p},
                                           {"applicable", ev.applicable},
                                           {"character_like", ev.character_like},
                                           {"detail", ev.detail}});
            it["prime_evidence"] = evs;
            it["beta_quotient"] = r.beta_value;
            it["beta_guess"] = r.beta_guess.str();
            if (!r.note.empty()) it["note"] = r.note;
            items.push_back(it);
            return emit(cfg, "qm-check", ordered_json{{"N", qN}, {"i", qi}, {"j", qj}, {"k", qk}},
                        items, true, started);
        }
        if (*c_ver) {
            suites::Options opt;
            opt.pmax = vpmax;
            opt.primes = vprimes;
            opt.precision = cfg.precision;
            opt.jobs = vjobs;
            opt.seed = vseed;
            opt.expectations_path = cfg.expectations;
            std::vector<suites::SuiteResult> results;
            if (vsuite == "all") results = suites::run_all(opt);
            else results.push_back(suites::run_suite(vsuite, opt));
            ordered_json items = ordered_json::array();
            bool all = true;
            for (const auto& sres : results)
                for (const auto& it : sres.items) {
                    all = all && it.pass;
                    items.push_back(result_item(sres.name + "/" + it.id, it.pass, it.detail));
                }
            // jobs is an execution detail: documents must not depend on parallelism degree
            return emit(cfg, "verify",
                        ordered_json{{"suite", vsuite}, {"pmax", vpmax}, {"seed", vseed},
                                     {"precision", cfg.precision}},
                        items, all, started);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.precondition_like() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
