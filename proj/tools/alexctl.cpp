// alexctl: exact Alexander-module computations for polynomial fibrations.
//
// Subcommands operate on JSON representation documents (see the repository
// data/ directory for samples) or on inline matrix / polynomial literals.
// Reports are printed as text or JSON; both renderings carry the same
// canonical strings.  Exit codes: 0 success, 1 computation error, 2 parse
// error, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alexmod/repdoc.hpp"
#include "alexmod/report.hpp"
#include "alexmod/verify.hpp"

namespace {

using namespace alexmod;

struct CommonOpts {
    std::string out;
    std::string format = "text";
    unsigned long cyclotomic_bound = default_cyclotomic_bound;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--out", c.out, "write the report to this file instead of stdout");
    sub->add_option("--format", c.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cyclotomic-bound", c.cyclotomic_bound,
                    "largest cyclotomic order tried when factoring (default 120)");
}

void emit(const Report& r, const CommonOpts& c) {
    const std::string payload =
        c.format == "json" ? report_json(r).dump(2) + "\n" : report_text(r);
    if (c.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw math_error("cannot open output file: " + c.out);
    f << payload;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw math_error("cannot read input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Integer matrix literal: rows separated by ';', entries by ','.
ZMatrix parse_zmatrix(const std::string& text) {
    std::vector<std::vector<Integer>> rows;
    std::size_t start = 0;
    bool done = false;
    while (!done) {
        std::size_t semi = text.find(';', start);
        std::string row = semi == std::string::npos ? text.substr(start)
                                                    : text.substr(start, semi - start);
        done = semi == std::string::npos;
        start = semi + 1;
        std::vector<Integer> entries;
        std::size_t rstart = 0;
        bool rdone = false;
        while (!rdone) {
            std::size_t comma = row.find(',', rstart);
            std::string cell = comma == std::string::npos
                                   ? row.substr(rstart)
                                   : row.substr(rstart, comma - rstart);
            rdone = comma == std::string::npos;
            rstart = comma + 1;
            auto v = parse_entry(cell, 1).as_integer();
            if (!v) throw parse_error("matrix entries must be integers", 0);
            entries.push_back(*v);
        }
        if (!rows.empty() && entries.size() != rows.front().size())
            throw parse_error("matrix rows must all have the same length", 0);
        rows.push_back(std::move(entries));
    }
    ZMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

ZPoly parse_integer_poly(const std::string& text) {
    FPoly p = parse_poly(text, 1);
    std::vector<Integer> c(static_cast<std::size_t>(p.degree() < 0 ? 0 : p.degree()) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        auto v = p.coeff(k).as_integer();
        if (!v) throw parse_error("integer coefficients required", 0);
        c[k] = *v;
    }
    return ZPoly(c);
}

nlohmann::ordered_json module_json(const LaurentModule& m) {
    nlohmann::ordered_json j;
    j["free_rank"] = m.free_rank;
    nlohmann::ordered_json chain = nlohmann::ordered_json::array();
    for (const FPoly& d : m.invariant_factors) chain.push_back(render_poly(d));
    j["invariant_factors"] = std::move(chain);
    return j;
}

nlohmann::ordered_json group_json(const AbelianGroup& g) {
    nlohmann::ordered_json j;
    j["rank"] = g.rank;
    nlohmann::ordered_json tors = nlohmann::ordered_json::array();
    for (const Integer& c : g.torsion) tors.push_back(render_integer(c));
    j["torsion"] = std::move(tors);
    return j;
}

void add_module_result(Report& r, const std::string& key, const LaurentModule& m,
                       unsigned long bound) {
    r.add(key, render_module(m, bound), module_json(m));
    for (const FPoly& d : m.invariant_factors) {
        if (!factorize(d, bound).complete)
            r.warnings.push_back("factorization incomplete for invariant factor " +
                                 render_poly(d) + "; printed unfactored");
    }
}

void add_hypotheses(Report& r, const MonodromyRep& rep) {
    if (rep.h_good) {
        r.hypotheses.push_back(
            "input document declares the fibration h-good; "
            "module identifications rely on it");
    } else {
        r.warnings.push_back(
            "input document does not declare h-good; the topological "
            "interpretation of these modules is not guaranteed");
    }
}

RepDocument load_document(const std::string& path, Report& r) {
    std::string text = slurp(path);
    r.inputs_digest = digest64(text);
    return load_rep_document(text);
}

std::size_t label_index(const MonodromyRep& rep, const std::string& label) {
    for (std::size_t i = 0; i < rep.labels.size(); ++i)
        if (rep.labels[i] == label) return i;
    throw math_error("unknown generator label: " + label);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Alexander-module invariants of polynomial fibrations"};
    app.require_subcommand(1);
    int rc = 0;

    // fiber-module
    auto fm = std::make_shared<CommonOpts>();
    std::string fm_input, fm_label, fm_word;
    bool fm_infinity = false;
    CLI::App* fiber = app.add_subcommand(
        "fiber-module", "module of one monodromy operator acting on the fiber homology");
    fiber->add_option("--input", fm_input, "representation document (JSON)")->required();
    auto* fl = fiber->add_option("--label", fm_label, "generator label to evaluate");
    auto* fw = fiber->add_option("--word", fm_word, "word in the generators, e.g. \"g1 g2^-1\"");
    auto* fi = fiber->add_flag("--infinity", fm_infinity,
                               "use the ordered product of all generators");
    fl->excludes(fw)->excludes(fi);
    fw->excludes(fi);
    add_common(fiber, *fm);
    fiber->callback([&, fm] {
        Report r;
        r.command = "fiber-module";
        RepDocument doc = load_document(fm_input, r);
        FMatrix t(0, 0);
        if (fm_infinity) {
            r.command += " --infinity";
            t = monodromy_at_infinity(doc.rep);
        } else if (!fm_word.empty()) {
            r.command += " --word " + fm_word;
            t = evaluate_word(doc.rep, FreeWord::parse(fm_word));
        } else if (!fm_label.empty()) {
            r.command += " --label " + fm_label;
            t = doc.rep.matrices[label_index(doc.rep, fm_label)];
        } else {
            throw parse_error("choose one of --label, --word, --infinity", 0);
        }
        LaurentModule m = module_from_automorphism(t);
        add_module_result(r, "module", m, fm->cyclotomic_bound);
        r.add("order_polynomial", render_factored(alexander_polynomial(m), fm->cyclotomic_bound),
              render_poly(alexander_polynomial(m)));
        emit(r, *fm);
    });

    // global
    auto gl = std::make_shared<CommonOpts>();
    std::string gl_input;
    CLI::App* global = app.add_subcommand(
        "global", "global Alexander module: coinvariants under the commutator subgroup");
    global->add_option("--input", gl_input, "representation document (JSON)")->required();
    add_common(global, *gl);
    global->callback([&, gl] {
        Report r;
        r.command = "global";
        RepDocument doc = load_document(gl_input, r);
        MultiActionModule m = global_alexander_module(doc.rep, doc.mode);
        if (doc.mode == CoeffMode::field) {
            nlohmann::ordered_json v;
            v["dimension"] = m.quotient_dim;
            r.add("module", render_multi_module(m), std::move(v));
        } else {
            r.add("module", render_multi_module(m), group_json(m.z_quotient));
        }
        add_hypotheses(r, doc.rep);
        emit(r, *gl);
    });

    // local
    auto lo = std::make_shared<CommonOpts>();
    std::string lo_input, lo_value;
    CLI::App* local = app.add_subcommand(
        "local", "local Alexander module at one bifurcation value, with the chain report");
    local->add_option("--input", lo_input, "representation document (JSON)")->required();
    local->add_option("--value", lo_value,
                      "bifurcation value label (default: the document's distinguished value)");
    add_common(local, *lo);
    local->callback([&, lo] {
        Report r;
        r.command = "local";
        RepDocument doc = load_document(lo_input, r);
        if (!lo_value.empty()) {
            r.command += " --value " + lo_value;
            doc.rep.distinguished = label_index(doc.rep, lo_value);
        }
        if (doc.mode == CoeffMode::field) {
            ChainReport chain = factorization_chain_report(doc.rep);
            add_module_result(r, "module", chain.local_module, lo->cyclotomic_bound);
            add_module_result(r, "fiber_module", chain.fiber_module, lo->cyclotomic_bound);
            add_module_result(r, "global_module", chain.global_module, lo->cyclotomic_bound);
            r.add("chain_dimensions",
                  std::to_string(chain.dim_fiber) + " -> " + std::to_string(chain.dim_global) +
                      " -> " + std::to_string(chain.dim_local),
                  nlohmann::ordered_json::array(
                      {chain.dim_fiber, chain.dim_global, chain.dim_local}));
            r.add("dominance",
                  chain.dominance_fiber_global && chain.dominance_global_local ? "holds"
                                                                               : "fails",
                  chain.dominance_fiber_global && chain.dominance_global_local);
        } else {
            LocalModuleResult res = local_alexander_module(doc.rep, CoeffMode::integers);
            nlohmann::ordered_json v;
            v["lattice_rank"] = res.z_module.lattice_rank;
            v["torsion"] = group_json(res.z_module.torsion);
            r.add("module", render_z_module(res.z_module), std::move(v));
        }
        add_hypotheses(r, doc.rep);
        emit(r, *lo);
    });

    // verify-paper
    auto vp = std::make_shared<CommonOpts>();
    bool vp_list = false;
    CLI::App* verify = app.add_subcommand(
        "verify-paper", "run the built-in suite of reference computations");
    verify->add_flag("--list", vp_list, "enumerate the cases without running them");
    add_common(verify, *vp);
    verify->callback([&, vp] {
        Report r;
        r.command = "verify-paper";
        if (vp_list) {
            for (const std::string& name : list_verification_cases())
                r.add("case." + name, "listed");
            emit(r, *vp);
            return;
        }
        VerifySummary s = run_verification_suite();
        for (const VerifyOutcome& o : s.outcomes) {
            nlohmann::ordered_json v;
            v["passed"] = o.passed;
            if (!o.message.empty()) v["message"] = o.message;
            r.add("case." + o.name, o.passed ? "PASS" : "FAIL: " + o.message, std::move(v));
            for (const std::string& w : o.warnings) r.warnings.push_back(o.name + ": " + w);
        }
        r.add("total", std::to_string(s.outcomes.size()) + " cases, " +
                           std::to_string(s.failures) + " failures",
              nlohmann::ordered_json{{"cases", s.outcomes.size()},
                                     {"failures", s.failures}});
        emit(r, *vp);
        if (!s.all_passed) rc = 3;
    });

    // poly-transform
    auto pt = std::make_shared<CommonOpts>();
    std::string pt_poly;
    long pt_ell = 1;
    unsigned long pt_order = 1;
    CLI::App* ptc = app.add_subcommand(
        "poly-transform", "polynomial whose roots are the ell-th powers of the input's roots");
    ptc->add_option("--poly", pt_poly, "monic polynomial with nonzero constant term")
        ->required();
    ptc->add_option("--ell", pt_ell, "power to apply to the roots (may be negative)")
        ->required();
    ptc->add_option("--order", pt_order, "cyclotomic order of the coefficient field (default 1)");
    add_common(ptc, *pt);
    ptc->callback([&, pt] {
        Report r;
        r.command = "poly-transform --poly " + pt_poly + " --ell " + std::to_string(pt_ell);
        r.inputs_digest = digest64(pt_poly);
        FPoly p = parse_poly(pt_poly, pt_order);
        FPoly q = power_transform(p, pt_ell);
        r.add("transformed", render_poly(q));
        r.add("factored", render_factored(q, pt->cyclotomic_bound), render_poly(q));
        emit(r, *pt);
    });

    // order-at-one
    auto oo = std::make_shared<CommonOpts>();
    std::string oo_poly;
    CLI::App* ooc = app.add_subcommand(
        "order-at-one", "|P(1)| for an integer polynomial: the homology order of the cover");
    ooc->add_option("--poly", oo_poly, "polynomial with integer coefficients")->required();
    add_common(ooc, *oo);
    ooc->callback([&, oo] {
        Report r;
        r.command = "order-at-one --poly " + oo_poly;
        r.inputs_digest = digest64(oo_poly);
        auto v = torsion_order_at_one(parse_integer_poly(oo_poly));
        if (v) {
            r.add("order", render_integer(*v));
        } else {
            r.add("order", "infinite", nullptr);
            r.warnings.push_back("the polynomial vanishes at 1; the group is infinite");
        }
        emit(r, *oo);
    });

    // constraint-check
    auto cc = std::make_shared<CommonOpts>();
    unsigned long long cc_p = 0, cc_d = 0;
    std::string cc_shape;
    CLI::App* ccc = app.add_subcommand(
        "constraint-check", "necessary conditions on p-torsion of a degree-d hypersurface");
    ccc->add_option("--p", cc_p, "prime")->required();
    ccc->add_option("--d", cc_d, "degree of the hypersurface")->required();
    ccc->add_option("--shape", cc_shape, "exponents k1>=k2>=..., comma separated")->required();
    add_common(ccc, *cc);
    ccc->callback([&, cc] {
        Report r;
        r.command = "constraint-check --p " + std::to_string(cc_p) + " --d " +
                    std::to_string(cc_d) + " --shape " + cc_shape;
        TorsionShape shape;
        shape.p = Integer(cc_p);
        shape.d = Integer(cc_d);
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = cc_shape.find(',', start);
            std::string cell = comma == std::string::npos
                                   ? cc_shape.substr(start)
                                   : cc_shape.substr(start, comma - start);
            auto v = parse_entry(cell, 1).as_integer();
            if (!v || *v < 1 || *v > 1000000)
                throw parse_error("shape entries must be positive integers", start);
            shape.exponents.push_back(static_cast<unsigned>(*v));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        TorsionConstraintResult res = torsion_constraint_check(shape);
        const char* verdict = res.verdict == TorsionVerdict::consistent ? "consistent"
                              : res.verdict == TorsionVerdict::inconsistent
                                  ? "inconsistent"
                                  : "no-constraint";
        r.add("verdict", verdict);
        for (std::size_t i = 0; i < res.reasons.size(); ++i)
            r.add("reason." + std::to_string(i + 1), res.reasons[i]);
        emit(r, *cc);
    });

    // bounds
    auto bo = std::make_shared<CommonOpts>();
    long long bo_mux = 0, bo_mu0x = 0, bo_mu = 0;
    CLI::App* boc = app.add_subcommand(
        "bounds", "lower and upper bounds on the middle homology rank of a fiber complement");
    boc->add_option("--mux", bo_mux, "total Milnor number of the special fiber")->required();
    boc->add_option("--mu0x", bo_mu0x, "Milnor number sum of its singular points")->required();
    boc->add_option("--mu", bo_mu, "total Milnor number of the generic fiber")->required();
    add_common(boc, *bo);
    boc->callback([&, bo] {
        Report r;
        r.command = "bounds --mux " + std::to_string(bo_mux) + " --mu0x " +
                    std::to_string(bo_mu0x) + " --mu " + std::to_string(bo_mu);
        auto [lo_b, hi_b] = milnor_bounds({Integer(bo_mux), Integer(bo_mu0x), Integer(bo_mu)});
        r.add("lower", render_integer(lo_b));
        r.add("upper", render_integer(hi_b));
        r.hypotheses.push_back(
            "the inequality assumes a (topologically) good polynomial; "
            "h-good alone is not claimed to suffice");
        emit(r, *bo);
    });

    // cover
    auto co = std::make_shared<CommonOpts>();
    std::string co_matrix, co_prev;
    unsigned long co_e = 1;
    CLI::App* coc = app.add_subcommand(
        "cover", "homology of the degree-e cyclic cover from the deck action matrix");
    coc->add_option("--matrix", co_matrix, "integer action on H_k, rows ';', entries ','")
        ->required();
    coc->add_option("--prev", co_prev, "integer action on H_{k-1} (default: zero module)");
    coc->add_option("--e", co_e, "cover degree")->required();
    add_common(coc, *co);
    coc->callback([&, co] {
        Report r;
        r.command = "cover --matrix " + co_matrix + " --e " + std::to_string(co_e);
        ZLaurentModule hk = z_module_from_automorphism(parse_zmatrix(co_matrix));
        ZLaurentModule hk1;
        if (!co_prev.empty()) hk1 = z_module_from_automorphism(parse_zmatrix(co_prev));
        AbelianGroup h = cover_homology(hk, hk1, co_e);
        r.add("homology", render_abelian_group(h), group_json(h));
        emit(r, *co);
    });

    // snf
    auto sn = std::make_shared<CommonOpts>();
    std::string sn_matrix;
    CLI::App* snc = app.add_subcommand(
        "snf", "Smith normal form and cokernel of an integer matrix");
    snc->add_option("--matrix", sn_matrix, "integer matrix, rows ';', entries ','")->required();
    add_common(snc, *sn);
    snc->callback([&, sn] {
        Report r;
        r.command = "snf --matrix " + sn_matrix;
        ZMatrix m = parse_zmatrix(sn_matrix);
        auto s = smith_normal_form_Z(m);
        std::string diag;
        nlohmann::ordered_json dj = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
            if (i) diag += ", ";
            diag += render_integer(s.diagonal[i]);
            dj.push_back(render_integer(s.diagonal[i]));
        }
        r.add("invariant_factors", diag.empty() ? "none" : diag, std::move(dj));
        AbelianGroup c = cokernel_Z(m);
        r.add("cokernel", render_abelian_group(c), group_json(c));
        emit(r, *sn);
    });

    // suspension-bound
    auto su = std::make_shared<CommonOpts>();
    std::vector<std::string> su_polys;
    unsigned long su_d = 1;
    CLI::App* suc = app.add_subcommand(
        "suspension-bound",
        "order bound |Res(t^d - 1, prod P_i)| for the d-fold suspension cover");
    suc->add_option("--poly", su_polys, "local order polynomial (repeatable)")->required();
    suc->add_option("--d", su_d, "suspension degree")->required();
    add_common(suc, *su);
    suc->callback([&, su] {
        Report r;
        r.command = "suspension-bound --d " + std::to_string(su_d);
        std::vector<ZPoly> factors;
        for (const std::string& p : su_polys) {
            r.command += " --poly " + p;
            factors.push_back(parse_integer_poly(p));
        }
        r.add("bound", render_integer(suspension_order_bound(factors, su_d)));
        emit(r, *su);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
