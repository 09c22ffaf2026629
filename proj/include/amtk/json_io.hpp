#ifndef AMTK_JSON_IO_HPP
#define AMTK_JSON_IO_HPP

#include <json.hpp>

#include "amtk/am_criteria.hpp"
#include "amtk/designs.hpp"
#include "amtk/feasibility.hpp"
#include "amtk/gf2.hpp"
#include "amtk/harmonics.hpp"

// JSON views of every serializable type. Key order is fixed and all numeric
// payloads are decimal or "p/q" strings, so identical inputs always produce
// byte-identical documents. Point indices are 1-based on the wire.

namespace amtk {

using ojson = nlohmann::ordered_json;

extern const int kSchemaVersion;

ojson enumerator_json(const WeightEnumerator& w);  // bare array of decimal strings
WeightEnumerator enumerator_from_json(const ojson& j);

ojson code_json(const BinaryCode& c);
ojson profile_json(const CodeProfile& p);

ojson harmonic_json(const HarmonicFunction& f);
HarmonicFunction harmonic_from_json(const ojson& j);

ojson bivariate_json(const BivariatePoly& p);
ojson harmonic_enumerator_json(const HarmonicEnumerator& e);

ojson design_json(const SupportDesign& d);
ojson design_check_json(const SupportDesign& d, const DesignCheckResult& r, const char* method);
ojson delta_s_json(const CodeProfile& p, const DeltaSReport& r);

ojson am_report_json(const AMReport& r);
ojson am_verification_json(const AMVerification& v);

ojson criterion_json(const CriterionValue& v);
ojson zdual_json(const ZDualExpansion& z);
ojson design_weight_scan_json(const DesignWeightScan& s);

ojson feasibility_json(const FeasibilityRecord& r);
ojson scan_json(const ScanResult& r);
ojson lemma_json(uint32_t degree, uint64_t n_max, const std::vector<LemmaSolution>& sols);
ojson conjecture_json(const ConjectureProbe& p);

ojson manifest_json();

}  // namespace amtk

#endif
