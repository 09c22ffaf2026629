#include "amtk/json_io.hpp"

namespace amtk {

const int kSchemaVersion = 1;

namespace {

ojson points_1based(const std::vector<uint32_t>& pts) {
    ojson arr = ojson::array();
    for (uint32_t p : pts) arr.push_back(p + 1);
    return arr;
}

ojson mask_points(uint64_t mask, uint32_t n) {
    std::vector<uint32_t> pts;
    for (uint32_t i = 0; i < n; ++i)
        if (mask >> i & 1) pts.push_back(i);
    return points_1based(pts);
}

const char* case_name(CriterionCase kase) {
    return kase == CriterionCase::four_weight ? "four" : "five";
}

}  // namespace

ojson enumerator_json(const WeightEnumerator& w) {
    ojson arr = ojson::array();
    for (const Int& c : w.coeffs) arr.push_back(int_str(c));
    return arr;
}

WeightEnumerator enumerator_from_json(const ojson& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("enumerator JSON must be a nonempty array");
    WeightEnumerator w;
    for (const auto& item : j) {
        if (item.is_string())
            w.coeffs.emplace_back(item.get<std::string>());
        else if (item.is_number_integer())
            w.coeffs.emplace_back(static_cast<long>(item.get<int64_t>()));
        else
            throw std::invalid_argument("enumerator coefficients must be decimal strings");
    }
    return w;
}

ojson code_json(const BinaryCode& c) {
    ojson j;
    j["n"] = c.n;
    j["k"] = c.k;
    ojson rows = ojson::array();
    for (const BitVec& g : c.generators) rows.push_back(g.to_string());
    j["generators"] = rows;
    return j;
}

ojson profile_json(const CodeProfile& p) {
    ojson j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d;
    j["d_is_sentinel"] = p.d == p.n + 1;
    j["d_dual"] = p.d_dual;
    j["d_dual_is_sentinel"] = p.d_dual == p.n + 1;
    j["has_all_ones"] = p.has_all_ones;
    j["weights"] = p.weights;
    return j;
}

ojson harmonic_json(const HarmonicFunction& f) {
    ojson j;
    j["n"] = f.n;
    j["h"] = f.h;
    ojson entries = ojson::array();
    for (const auto& [mask, value] : f.entries)
        entries.push_back(ojson::array({mask_points(mask, f.n), rat_str(value)}));
    j["entries"] = entries;
    return j;
}

HarmonicFunction harmonic_from_json(const ojson& j) {
    uint32_t n = j.at("n").get<uint32_t>();
    uint32_t h = j.at("h").get<uint32_t>();
    std::vector<std::pair<uint64_t, Rat>> entries;
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("harmonic entry must be [subset, rational]");
        uint64_t mask = 0;
        for (const auto& p : e[0]) {
            uint64_t idx = p.get<uint64_t>();
            if (idx < 1 || idx > n) throw std::invalid_argument("harmonic subset point out of range");
            mask |= uint64_t(1) << (idx - 1);
        }
        entries.emplace_back(mask, parse_rat(e[1].get<std::string>()));
    }
    return HarmonicFunction::create(n, h, std::move(entries));
}

ojson bivariate_json(const BivariatePoly& p) {
    ojson j;
    j["degree"] = p.degree;
    ojson coeffs = ojson::array();
    for (const Rat& c : p.coeffs) coeffs.push_back(rat_str(c));
    j["coeffs_by_y_power"] = coeffs;
    return j;
}

ojson harmonic_enumerator_json(const HarmonicEnumerator& e) {
    ojson j;
    j["h"] = e.h;
    j["code_size"] = int_str(e.code_size);
    j["w"] = bivariate_json(e.w_poly);
    j["z"] = bivariate_json(e.z_poly);
    return j;
}

ojson design_json(const SupportDesign& d) {
    ojson j;
    j["n"] = d.n;
    j["w"] = d.w;
    ojson blocks = ojson::array();
    for (const BitVec& b : d.blocks) blocks.push_back(points_1based(b.support()));
    j["blocks"] = blocks;
    return j;
}

ojson design_check_json(const SupportDesign& d, const DesignCheckResult& r, const char* method) {
    ojson j;
    j["n"] = d.n;
    j["w"] = d.w;
    j["t"] = r.t;
    j["blocks"] = d.blocks.size();
    j["method"] = method;
    j["is_design"] = r.is_design;
    j["lambda"] = r.lambda ? ojson(int_str(*r.lambda)) : ojson(nullptr);
    j["empty"] = r.empty;
    j["complete"] = r.complete;
    if (r.witness) {
        ojson w;
        w["more_covered"] = points_1based(r.witness->first);
        w["less_covered"] = points_1based(r.witness->second);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    if (r.harmonic_violation) {
        ojson v;
        v["h"] = r.harmonic_violation->first;
        v["basis_index"] = r.harmonic_violation->second;
        j["harmonic_violation"] = v;
    } else {
        j["harmonic_violation"] = nullptr;
    }
    return j;
}

ojson delta_s_json(const CodeProfile& p, const DeltaSReport& r) {
    ojson j;
    j["profile"] = profile_json(p);
    j["t_max"] = r.t_max;
    ojson table = ojson::array();
    for (const WeightStrength& row : r.table) {
        ojson e;
        e["w"] = row.w;
        e["blocks"] = row.block_count;
        e["strength"] = row.strength;
        e["capped"] = row.capped;
        e["complete"] = row.complete;
        table.push_back(e);
    }
    j["table"] = table;
    j["delta"] = r.delta ? ojson(*r.delta) : ojson(nullptr);
    j["delta_capped"] = r.delta_capped;
    j["s"] = r.s ? ojson(*r.s) : ojson(nullptr);
    j["s_capped"] = r.s_capped;
    j["conventions"] = {{"empty_weights", "excluded"}, {"complete_design_weight_n", "excluded"}};
    return j;
}

ojson am_report_json(const AMReport& r) {
    ojson j;
    j["profile"] = profile_json(r.profile);
    j["t_values"] = r.t_values;
    j["max_t"] = r.max_t ? ojson(*r.max_t) : ojson(nullptr);
    j["design_weights"] = {{"code", r.primal_design_weights}, {"dual", r.dual_design_weights}};
    return j;
}

ojson am_verification_json(const AMVerification& v) {
    ojson j;
    j["t"] = v.t;
    ojson entries = ojson::array();
    for (const auto& e : v.entries) {
        ojson x;
        x["side"] = e.dual ? "dual" : "code";
        x["weight"] = e.weight;
        x["blocks"] = e.blocks;
        x["lambda"] = int_str(e.lambda);
        x["confirmed"] = e.confirmed;
        entries.push_back(x);
    }
    j["entries"] = entries;
    j["all_confirmed"] = v.all_confirmed;
    return j;
}

ojson criterion_json(const CriterionValue& v) {
    ojson j;
    j["case"] = case_name(v.kase);
    j["n"] = v.n;
    j["d1"] = v.d1;
    j["d2"] = v.d2;
    j["t"] = v.t;
    j["w"] = v.w;
    j["value"] = rat_str(v.value);
    j["is_zero"] = v.is_zero;
    j["implied_design_weight"] = v.implied_design_weight;
    return j;
}

ojson zdual_json(const ZDualExpansion& z) {
    ojson j;
    j["case"] = case_name(z.kase);
    j["n"] = z.n;
    j["d1"] = z.d1;
    j["d2"] = z.d2;
    j["t"] = z.t;
    j["a1"] = "1";
    j["a2"] = rat_str(z.a2);
    j["b"] = z.b ? ojson(rat_str(*z.b)) : ojson(nullptr);
    ojson p = ojson::array();
    for (const Rat& c : z.p) p.push_back(rat_str(c));
    j["p"] = p;
    return j;
}

ojson design_weight_scan_json(const DesignWeightScan& s) {
    ojson j;
    j["case"] = case_name(s.kase);
    j["w_max"] = s.w_max;
    j["trivial_w0_zero"] = s.trivial_w0;
    ojson zeros = ojson::array();
    for (const CriterionValue& v : s.zeros) zeros.push_back(criterion_json(v));
    j["zeros"] = zeros;
    return j;
}

ojson feasibility_json(const FeasibilityRecord& r) {
    ojson j;
    j["case"] = case_name(r.kase);
    j["n"] = r.n;
    j["d1"] = r.d1;
    j["d2"] = r.d2;
    j["singular"] = r.singular;
    if (!r.singular) {
        j["alpha"] = rat_str(r.alpha);
        j["beta"] = rat_str(r.beta);
        if (r.kase == CriterionCase::five_weight) j["gamma"] = rat_str(r.gamma);
        ojson res = ojson::array();
        for (const Rat& x : r.residuals) res.push_back(rat_str(x));
        j["residuals"] = res;
        j["all_residuals_zero"] = r.all_residuals_zero;
        j["integral"] = r.integral;
        j["positive"] = r.positive;
        if (r.kase == CriterionCase::five_weight) j["gamma_even"] = r.gamma_even;
        j["cardinality"] = rat_str(r.cardinality);
        j["power_of_two"] = r.power_of_two;
        j["exponent"] = r.exponent ? ojson(*r.exponent) : ojson(nullptr);
    }
    j["feasible"] = r.feasible;
    ojson diag;
    ojson xs = ojson::array(), ys = ojson::array(), zs = ojson::array(), dets = ojson::array();
    for (const Int& v : r.diag_x) xs.push_back(int_str(v));
    for (const Int& v : r.diag_y) ys.push_back(int_str(v));
    for (const Int& v : r.diag_z) zs.push_back(int_str(v));
    for (const Int& v : r.diag_dets) dets.push_back(int_str(v));
    diag["x"] = xs;
    diag["y"] = ys;
    if (r.kase == CriterionCase::five_weight) diag["z"] = zs;
    diag["dets"] = dets;
    j["diagnostics"] = diag;
    return j;
}

ojson scan_json(const ScanResult& r) {
    ojson j;
    j["case"] = case_name(r.summary.kase);
    j["n_max"] = r.summary.n_max;
    ojson s;
    s["tuples"] = r.summary.tuples;
    s["singular"] = r.summary.singular;
    s["residuals_zero"] = r.summary.residuals_zero;
    s["feasible"] = r.summary.feasible;
    j["summary"] = s;
    ojson recs = ojson::array();
    for (const FeasibilityRecord& rec : r.feasible) recs.push_back(feasibility_json(rec));
    j["records"] = recs;
    return j;
}

ojson lemma_json(uint32_t degree, uint64_t n_max, const std::vector<LemmaSolution>& sols) {
    ojson j;
    j["degree"] = degree;
    j["n_max"] = n_max;
    j["exhaustive_up_to"] = n_max;
    ojson arr = ojson::array();
    for (const LemmaSolution& s : sols) {
        ojson e;
        e["n"] = s.n;
        e["exponent"] = s.exponent;
        arr.push_back(e);
    }
    j["solutions"] = arr;
    return j;
}

ojson conjecture_json(const ConjectureProbe& p) {
    ojson j;
    j["ell"] = p.ell;
    j["n"] = p.n;
    j["weights"] = p.weights;
    const char* status = "inapplicable";
    switch (p.status) {
        case ConjectureProbe::Status::confirmed: status = "confirmed"; break;
        case ConjectureProbe::Status::refuted: status = "refuted"; break;
        case ConjectureProbe::Status::inapplicable: status = "inapplicable"; break;
        case ConjectureProbe::Status::singular: status = "singular"; break;
    }
    j["status"] = status;
    ojson alphas = ojson::array();
    for (const Rat& a : p.alphas) alphas.push_back(rat_str(a));
    j["alphas"] = alphas;
    ojson res = ojson::array();
    for (const Rat& r : p.residuals) res.push_back(rat_str(r));
    j["residuals"] = res;
    j["lhs"] = p.lhs ? ojson(rat_str(*p.lhs)) : ojson(nullptr);
    j["rhs"] = p.rhs ? ojson(int_str(*p.rhs)) : ojson(nullptr);
    j["power_of_two"] = p.power_of_two;
    j["exponent"] = p.exponent ? ojson(*p.exponent) : ojson(nullptr);
    return j;
}

ojson manifest_json() {
    ojson j;
    j["tool"] = "amtk";
    j["version"] = "1.0.0";
    ojson schemas;
    for (const char* name :
         {"code", "profile", "enumerator", "harmonic", "harmonic_enumerator", "design",
          "design_check", "delta_s", "am_report", "am_verification", "criterion", "zdual",
          "design_weight_scan", "feasibility", "scan", "lemma", "conjecture"})
        schemas[name] = kSchemaVersion;
    j["schemas"] = schemas;
    return j;
}

}  // namespace amtk
