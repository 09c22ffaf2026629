#include "amtk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "amtk/json_io.hpp"

namespace amtk::cli {

namespace {

struct Common {
    bool json = false;
    unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "emit a single JSON document on stdout");
    sub->add_option("--threads", c.threads, "worker threads (0 = hardware)")->capture_default_str();
}

// Codes are named by catalog entry or passed as @path to a generator-matrix
// text file.
BinaryCode load_code(const std::string& spec, std::ostream& err) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open code file: " + spec.substr(1));
        std::stringstream buf;
        buf << in.rdbuf();
        ParseResult pr = parse_generator_matrix(buf.str());
        if (pr.dropped_dependent_rows)
            err << "warning: dependent generator rows were dropped\n";
        return pr.code;
    }
    return catalog_code(spec);
}

CriterionCase parse_case(const std::string& s) {
    if (s == "four") return CriterionCase::four_weight;
    if (s == "five") return CriterionCase::five_weight;
    throw std::invalid_argument("unknown case '" + s + "' (expected four or five)");
}

void emit(std::ostream& out, bool json, const ojson& doc, const std::string& text) {
    if (json)
        out << doc.dump(2) << "\n";
    else
        out << text;
}

std::string strengths_text(const DeltaSReport& rep) {
    std::ostringstream os;
    os << "w  blocks  strength\n";
    for (const auto& row : rep.table) {
        os << row.w << "  " << row.block_count << "  " << row.strength
           << (row.capped ? "+ (capped)" : "") << (row.complete ? " [complete]" : "") << "\n";
    }
    if (rep.delta)
        os << "delta = " << *rep.delta << (rep.delta_capped ? "+" : "") << ", s = " << *rep.s
           << (rep.s_capped ? "+" : "") << "\n";
    else
        os << "delta/s undefined: no proper nonempty weights\n";
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact weight-enumerator, support-design and feasibility toolkit"};
    app.require_subcommand(0, 1);
    bool manifest = false;
    app.add_flag("--manifest", manifest, "print schema versions and exit");

    // ---- code ----------------------------------------------------------
    struct {
        Common common;
        std::string code;
        bool generators = false, weights = false, dual = false;
        uint32_t max_dim = 28;
    } code_opts;
    CLI::App* code_cmd = app.add_subcommand("code", "profile a code");
    add_common(code_cmd, code_opts.common);
    code_cmd->add_option("--code", code_opts.code, "catalog name or @file")->required();
    code_cmd->add_flag("--generators", code_opts.generators, "include the generator matrix");
    code_cmd->add_flag("--weights", code_opts.weights, "include the weight distribution");
    code_cmd->add_flag("--dual", code_opts.dual, "include the dual code");
    code_cmd->add_option("--max-dim", code_opts.max_dim, "enumeration budget exponent")
        ->capture_default_str();

    // ---- macwilliams ---------------------------------------------------
    struct {
        Common common;
        std::string code, wenum_file;
        uint32_t k = 0, max_dim = 28;
    } mac_opts;
    CLI::App* mac_cmd = app.add_subcommand("macwilliams", "dual weight enumerator");
    add_common(mac_cmd, mac_opts.common);
    auto* mac_code = mac_cmd->add_option("--code", mac_opts.code, "catalog name or @file");
    auto* mac_file = mac_cmd->add_option("--wenum", mac_opts.wenum_file,
                                         "JSON file with an array of decimal coefficients");
    auto* mac_k = mac_cmd->add_option("--k", mac_opts.k, "dimension for --wenum");
    mac_cmd->add_option("--max-dim", mac_opts.max_dim, "enumeration budget exponent")
        ->capture_default_str();
    mac_file->needs(mac_k);
    mac_code->excludes(mac_file);

    // ---- harm ----------------------------------------------------------
    struct {
        Common common;
        uint32_t n = 0, h = 0;
        bool dim_only = false;
        uint32_t max_n = 24, max_h = 6;
    } harm_opts;
    CLI::App* harm_cmd = app.add_subcommand("harm", "harmonic-space basis");
    add_common(harm_cmd, harm_opts.common);
    harm_cmd->add_option("--n", harm_opts.n, "ground-set size")->required();
    harm_cmd->add_option("--h", harm_opts.h, "degree")->required();
    harm_cmd->add_flag("--dim-only", harm_opts.dim_only, "print the dimension only");
    harm_cmd->add_option("--max-n", harm_opts.max_n, "budget: largest n")->capture_default_str();
    harm_cmd->add_option("--max-h", harm_opts.max_h, "budget: largest h")->capture_default_str();

    // ---- design --------------------------------------------------------
    struct {
        Common common;
        std::string code, method = "direct";
        uint32_t weight = 0, t = 0, max_dim = 28, max_n = 24, max_h = 6;
        uint64_t max_subsets = 10'000'000;
    } design_opts;
    CLI::App* design_cmd = app.add_subcommand("design", "support-design strength check");
    add_common(design_cmd, design_opts.common);
    design_cmd->add_option("--code", design_opts.code)->required();
    design_cmd->add_option("--weight", design_opts.weight, "codeword weight")->required();
    design_cmd->add_option("--t", design_opts.t, "strength to test")->required();
    design_cmd->add_option("--method", design_opts.method, "direct | harmonic | both")
        ->capture_default_str();
    design_cmd->add_option("--max-dim", design_opts.max_dim)->capture_default_str();
    design_cmd->add_option("--max-subsets", design_opts.max_subsets)->capture_default_str();
    design_cmd->add_option("--max-n", design_opts.max_n)->capture_default_str();
    design_cmd->add_option("--max-h", design_opts.max_h)->capture_default_str();

    // ---- delta-s -------------------------------------------------------
    struct {
        Common common;
        std::string code;
        uint32_t t_max = 5, max_dim = 28;
        uint64_t max_subsets = 10'000'000;
    } ds_opts;
    CLI::App* ds_cmd = app.add_subcommand("delta-s", "per-weight design strengths");
    add_common(ds_cmd, ds_opts.common);
    ds_cmd->add_option("--code", ds_opts.code)->required();
    ds_cmd->add_option("--tmax", ds_opts.t_max, "largest strength to certify")
        ->capture_default_str();
    ds_cmd->add_option("--max-dim", ds_opts.max_dim)->capture_default_str();
    ds_cmd->add_option("--max-subsets", ds_opts.max_subsets)->capture_default_str();

    // ---- am ------------------------------------------------------------
    struct {
        Common common;
        std::string code;
        bool verify = false;
        uint32_t max_dim = 28;
        uint64_t max_subsets = 10'000'000;
    } am_opts;
    CLI::App* am_cmd = app.add_subcommand("am", "counting condition and certified designs");
    add_common(am_cmd, am_opts.common);
    am_cmd->add_option("--code", am_opts.code)->required();
    am_cmd->add_flag("--verify", am_opts.verify, "recheck every certified design by counting");
    am_cmd->add_option("--max-dim", am_opts.max_dim)->capture_default_str();
    am_cmd->add_option("--max-subsets", am_opts.max_subsets)->capture_default_str();

    // ---- criterion -----------------------------------------------------
    struct {
        Common common;
        std::string kase;
        uint32_t n = 0, d1 = 0, d2 = 0, t = 0;
        int64_t w = -1, w_max = -1;
    } crit_opts;
    CLI::App* crit_cmd = app.add_subcommand("criterion", "extra-design criterion value");
    add_common(crit_cmd, crit_opts.common);
    crit_cmd->add_option("--case", crit_opts.kase, "four | five")->required();
    crit_cmd->add_option("--n", crit_opts.n)->required();
    crit_cmd->add_option("--d1", crit_opts.d1)->required();
    crit_cmd->add_option("--d2", crit_opts.d2)->required();
    crit_cmd->add_option("--t", crit_opts.t)->required();
    auto* crit_w = crit_cmd->add_option("--w", crit_opts.w, "single shift to evaluate");
    auto* crit_wmax = crit_cmd->add_option("--wmax", crit_opts.w_max, "scan w = 0..wmax for zeros");
    crit_w->excludes(crit_wmax);

    // ---- zdual ---------------------------------------------------------
    struct {
        Common common;
        std::string kase;
        uint32_t n = 0, d1 = 0, d2 = 0, t = 0;
    } zd_opts;
    CLI::App* zd_cmd = app.add_subcommand("zdual", "dual-side polynomial expansion");
    add_common(zd_cmd, zd_opts.common);
    zd_cmd->add_option("--case", zd_opts.kase, "four | five")->required();
    zd_cmd->add_option("--n", zd_opts.n)->required();
    zd_cmd->add_option("--d1", zd_opts.d1)->required();
    zd_cmd->add_option("--d2", zd_opts.d2)->required();
    zd_cmd->add_option("--t", zd_opts.t)->required();

    // ---- scan ----------------------------------------------------------
    struct {
        Common common;
        std::string kase;
        uint32_t n_max = 200;
        bool jsonl = false;
    } scan_opts;
    CLI::App* scan_cmd = app.add_subcommand("scan", "exhaustive feasibility scan");
    add_common(scan_cmd, scan_opts.common);
    scan_cmd->add_option("--case", scan_opts.kase, "four | five")->required();
    scan_cmd->add_option("--nmax", scan_opts.n_max, "largest length")->capture_default_str();
    scan_cmd->add_flag("--jsonl", scan_opts.jsonl, "one JSON record per line plus a summary line");

    // ---- lemma ---------------------------------------------------------
    struct {
        Common common;
        uint32_t degree = 4;
        uint64_t n_max = 1'000'000;
    } lemma_opts;
    CLI::App* lemma_cmd = app.add_subcommand("lemma", "binomial-sum power-of-two scan");
    add_common(lemma_cmd, lemma_opts.common);
    lemma_cmd->add_option("--degree", lemma_opts.degree, "4 | 5")->required();
    lemma_cmd->add_option("--nmax", lemma_opts.n_max, "scan bound")->capture_default_str();

    // ---- conjecture ----------------------------------------------------
    struct {
        Common common;
        uint32_t ell = 0, n = 0;
        std::vector<uint32_t> weights;
    } conj_opts;
    CLI::App* conj_cmd = app.add_subcommand("conjecture", "cardinality identity probe");
    add_common(conj_cmd, conj_opts.common);
    conj_cmd->add_option("--ell", conj_opts.ell)->required();
    conj_cmd->add_option("--n", conj_opts.n)->required();
    conj_cmd->add_option("--weights", conj_opts.weights, "comma-separated weight list")
        ->required()
        ->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (manifest) {
            out << manifest_json().dump(2) << "\n";
            return kExitOk;
        }
        if (app.get_subcommands().empty()) {
            out << app.help();
            return kExitUsage;
        }

        if (code_cmd->parsed()) {
            EnumerationLimits lim{code_opts.max_dim, code_opts.common.threads};
            BinaryCode c = load_code(code_opts.code, err);
            CodeProfile p = code_profile(c, lim);
            ojson j;
            j["profile"] = profile_json(p);
            std::ostringstream text;
            text << "[" << p.n << "," << p.k << "] d=" << p.d << " d_dual=" << p.d_dual
                 << " all_ones=" << (p.has_all_ones ? "yes" : "no") << "\n";
            if (code_opts.generators) j["code"] = code_json(c);
            if (code_opts.weights) {
                WeightEnumerator w = weight_distribution(c, lim);
                j["weights"] = enumerator_json(w);
            }
            if (code_opts.dual) {
                BinaryCode d = dual_code(c);
                j["dual"] = code_json(d);
            }
            emit(out, code_opts.common.json, j, text.str());
            return kExitOk;
        }

        if (mac_cmd->parsed()) {
            WeightEnumerator w;
            uint32_t k = 0;
            ojson j;
            if (!mac_opts.code.empty()) {
                EnumerationLimits lim{mac_opts.max_dim, mac_opts.common.threads};
                BinaryCode c = load_code(mac_opts.code, err);
                w = weight_distribution(c, lim);
                k = c.k;
            } else if (!mac_opts.wenum_file.empty()) {
                std::ifstream in(mac_opts.wenum_file);
                if (!in)
                    throw std::invalid_argument("cannot open enumerator file: " +
                                                mac_opts.wenum_file);
                ojson doc = ojson::parse(in);
                w = enumerator_from_json(doc);
                k = mac_opts.k;
            } else {
                throw std::invalid_argument("macwilliams needs --code or --wenum");
            }
            WeightEnumerator dual = macwilliams_transform(w, k);
            j["n"] = w.n();
            j["k"] = k;
            j["enumerator"] = enumerator_json(w);
            j["dual_enumerator"] = enumerator_json(dual);
            std::ostringstream text;
            for (uint32_t i = 0; i <= dual.n(); ++i)
                if (dual.coeffs[i] != 0) text << "A_" << i << " = " << int_str(dual.coeffs[i]) << "\n";
            emit(out, mac_opts.common.json, j, text.str());
            return kExitOk;
        }

        if (harm_cmd->parsed()) {
            HarmBudget budget{harm_opts.max_n, harm_opts.max_h};
            std::vector<HarmonicFunction> basis = harm_basis(harm_opts.n, harm_opts.h, budget);
            ojson j;
            j["n"] = harm_opts.n;
            j["h"] = harm_opts.h;
            j["dim"] = basis.size();
            if (!harm_opts.dim_only) {
                ojson arr = ojson::array();
                for (const HarmonicFunction& f : basis) arr.push_back(harmonic_json(f));
                j["basis"] = arr;
            }
            std::ostringstream text;
            text << "dim Harm_" << harm_opts.h << "(" << harm_opts.n << ") = " << basis.size()
                 << "\n";
            emit(out, harm_opts.common.json, j, text.str());
            return kExitOk;
        }

        if (design_cmd->parsed()) {
            EnumerationLimits lim{design_opts.max_dim, design_opts.common.threads};
            DesignBudget budget{design_opts.max_subsets};
            HarmBudget hbudget{design_opts.max_n, design_opts.max_h};
            BinaryCode c = load_code(design_opts.code, err);
            SupportDesign d = support_design(c, design_opts.weight, lim);
            ojson j;
            std::ostringstream text;
            auto describe = [&](const DesignCheckResult& r) {
                text << (r.is_design ? "is a " : "is not a ") << r.t << "-design";
                if (r.lambda) text << " (lambda = " << int_str(*r.lambda) << ")";
                text << "\n";
            };
            if (design_opts.method == "direct" || design_opts.method == "both") {
                DesignCheckResult r = check_t_design_direct(d, design_opts.t, budget);
                j["direct"] = design_check_json(d, r, "direct");
                describe(r);
            }
            if (design_opts.method == "harmonic" || design_opts.method == "both") {
                DesignCheckResult r = check_t_design_harmonic(d, design_opts.t, hbudget, budget);
                j["harmonic"] = design_check_json(d, r, "harmonic");
                describe(r);
            }
            if (design_opts.method == "both")
                j["agree"] = j["direct"]["is_design"] == j["harmonic"]["is_design"];
            else if (design_opts.method != "direct" && design_opts.method != "harmonic")
                throw std::invalid_argument("unknown method: " + design_opts.method);
            emit(out, design_opts.common.json, j, text.str());
            return kExitOk;
        }

        if (ds_cmd->parsed()) {
            EnumerationLimits lim{ds_opts.max_dim, ds_opts.common.threads};
            DesignBudget budget{ds_opts.max_subsets};
            BinaryCode c = load_code(ds_opts.code, err);
            DeltaSReport rep = delta_s(c, ds_opts.t_max, lim, budget);
            CodeProfile p = code_profile(c, lim);
            emit(out, ds_opts.common.json, delta_s_json(p, rep), strengths_text(rep));
            return kExitOk;
        }

        if (am_cmd->parsed()) {
            EnumerationLimits lim{am_opts.max_dim, am_opts.common.threads};
            BinaryCode c = load_code(am_opts.code, err);
            AMReport rep = am_t_values(c, lim);
            ojson j = am_report_json(rep);
            std::ostringstream text;
            text << "t_values = {";
            for (size_t i = 0; i < rep.t_values.size(); ++i)
                text << (i ? "," : "") << rep.t_values[i];
            text << "}\n";
            int rc = kExitOk;
            if (am_opts.verify) {
                if (!rep.max_t)
                    throw std::invalid_argument("am --verify: no t satisfies the condition");
                DesignBudget budget{am_opts.max_subsets};
                AMVerification ver = am_designs_verified(c, *rep.max_t, lim, budget);
                j["verification"] = am_verification_json(ver);
                text << (ver.all_confirmed ? "all designs confirmed\n"
                                           : "DESIGN VERIFICATION FAILED\n");
                if (!ver.all_confirmed) rc = kExitCounterexample;
            }
            emit(out, am_opts.common.json, j, text.str());
            return rc;
        }

        if (crit_cmd->parsed()) {
            CriterionCase kase = parse_case(crit_opts.kase);
            if (crit_opts.w >= 0) {
                CriterionValue v =
                    kase == CriterionCase::four_weight
                        ? criterion_four(crit_opts.n, crit_opts.d1, crit_opts.d2, crit_opts.t,
                                         uint32_t(crit_opts.w))
                        : criterion_five(crit_opts.n, crit_opts.d1, crit_opts.d2, crit_opts.t,
                                         uint32_t(crit_opts.w));
                std::ostringstream text;
                text << "value = " << rat_str(v.value) << (v.is_zero ? " (zero)" : "") << "\n";
                emit(out, crit_opts.common.json, criterion_json(v), text.str());
            } else if (crit_opts.w_max >= 0) {
                DesignWeightScan s = find_design_weights(kase, crit_opts.n, crit_opts.d1,
                                                         crit_opts.d2, crit_opts.t,
                                                         uint32_t(crit_opts.w_max));
                std::ostringstream text;
                text << s.zeros.size() << " nontrivial zeros";
                if (s.trivial_w0) text << " (plus the identically-zero w = 0)";
                text << "\n";
                for (const CriterionValue& v : s.zeros)
                    text << "  w = " << v.w << " -> design weight " << v.implied_design_weight
                         << "\n";
                emit(out, crit_opts.common.json, design_weight_scan_json(s), text.str());
            } else {
                throw std::invalid_argument("criterion needs --w or --wmax");
            }
            return kExitOk;
        }

        if (zd_cmd->parsed()) {
            CriterionCase kase = parse_case(zd_opts.kase);
            ZDualExpansion z = zdual_expansion(kase, zd_opts.n, zd_opts.d1, zd_opts.d2, zd_opts.t);
            std::ostringstream text;
            for (uint32_t i = 0; i <= z.n; ++i)
                if (z.p[i] != 0) text << "p_" << i << " = " << rat_str(z.p[i]) << "\n";
            emit(out, zd_opts.common.json, zdual_json(z), text.str());
            return kExitOk;
        }

        if (scan_cmd->parsed()) {
            CriterionCase kase = parse_case(scan_opts.kase);
            ScanResult res = scan_nonexistence(kase, scan_opts.n_max, scan_opts.common.threads);
            if (scan_opts.jsonl) {
                for (const FeasibilityRecord& rec : res.feasible)
                    out << feasibility_json(rec).dump() << "\n";
                ojson s = scan_json(res);
                s.erase("records");
                out << s.dump() << "\n";
            } else {
                std::ostringstream text;
                text << "scanned " << res.summary.tuples << " tuples, feasible: "
                     << res.summary.feasible << "\n";
                emit(out, scan_opts.common.json, scan_json(res), text.str());
            }
            return res.feasible.empty() ? kExitOk : kExitCounterexample;
        }

        if (lemma_cmd->parsed()) {
            std::vector<LemmaSolution> sols =
                lemma_scan(lemma_opts.degree, lemma_opts.n_max, lemma_opts.common.threads);
            std::ostringstream text;
            for (const LemmaSolution& s : sols)
                text << "n = " << s.n << ": 2^" << s.exponent << "\n";
            emit(out, lemma_opts.common.json, lemma_json(lemma_opts.degree, lemma_opts.n_max, sols),
                 text.str());
            return kExitOk;
        }

        if (conj_cmd->parsed()) {
            ConjectureProbe probe = conjecture_probe(conj_opts.ell, conj_opts.n, conj_opts.weights);
            ojson j = conjecture_json(probe);
            emit(out, conj_opts.common.json, j, std::string(j.at("status").get<std::string>()) + "\n");
            return kExitOk;
        }

        out << app.help();
        return kExitUsage;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace amtk::cli
