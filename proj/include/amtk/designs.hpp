#ifndef AMTK_DESIGNS_HPP
#define AMTK_DESIGNS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "amtk/exact.hpp"
#include "amtk/gf2.hpp"
#include "amtk/harmonics.hpp"

namespace amtk {

// Supports of the weight-w codewords, as blocks on the point set {1..n}.
// Distinct codewords of one weight have distinct supports over GF(2), so the
// block list is duplicate-free by construction; it is kept sorted.
struct SupportDesign {
    uint32_t n = 0;
    uint32_t w = 0;
    std::vector<BitVec> blocks;
};

SupportDesign support_design(const BinaryCode& c, uint32_t w, const EnumerationLimits& lim = {});

struct DesignBudget {
    uint64_t max_subsets = 10'000'000;  // cap on C(n,t) counting tables
};

struct DesignCheckResult {
    uint32_t t = 0;
    bool is_design = false;
    std::optional<Int> lambda;  // set when is_design
    bool empty = false;         // no blocks: vacuously a design, lambda 0
    bool complete = false;      // single all-points block
    // Direct counting: two t-subsets (0-based points) with unequal counts.
    std::optional<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> witness;
    // Harmonic route: first (h, basis index) whose block sum is nonzero.
    std::optional<std::pair<uint32_t, uint32_t>> harmonic_violation;
};

/// Counts, for every t-subset of points, the number of blocks containing it;
/// a design iff all counts agree. Cost |blocks| * C(w,t) increments.
DesignCheckResult check_t_design_direct(const SupportDesign& d, uint32_t t,
                                        const DesignBudget& budget = {});

// Reusable source of harmonic bases keyed by (n, h).
class HarmBasisCache {
   public:
    explicit HarmBasisCache(HarmBudget budget = {}) : budget_(budget) {}
    const std::vector<HarmonicFunction>& get(uint32_t n, uint32_t h);

   private:
    HarmBudget budget_;
    std::map<std::pair<uint32_t, uint32_t>, std::vector<HarmonicFunction>> cache_;
};

/// Design test via harmonic sums: a design iff every basis function of every
/// degree 1..t sums to zero over the blocks.
DesignCheckResult check_t_design_harmonic(const SupportDesign& d, uint32_t t,
                                          HarmBasisCache& basis_source,
                                          const DesignBudget& budget = {});
DesignCheckResult check_t_design_harmonic(const SupportDesign& d, uint32_t t,
                                          const HarmBudget& hbudget = {},
                                          const DesignBudget& budget = {});

struct WeightStrength {
    uint32_t w = 0;
    uint64_t block_count = 0;
    uint32_t strength = 0;  // largest t <= min(t_max, w) that checks out
    bool capped = false;    // hit the cap without failing
    bool complete = false;  // w == n single block
};

// Aggregates exclude the complete (w == n) design and empty weights; the
// table row for a complete design is still reported, flagged.
struct DeltaSReport {
    uint32_t t_max = 0;
    std::vector<WeightStrength> table;
    std::optional<uint32_t> delta;
    std::optional<uint32_t> s;
    bool delta_capped = false;
    bool s_capped = false;
};

/// Per-weight design strengths by direct counting, with delta = min and
/// s = max over the proper nonempty weights.
DeltaSReport delta_s(const BinaryCode& c, uint32_t t_max, const EnumerationLimits& lim = {},
                     const DesignBudget& budget = {});

}  // namespace amtk

#endif
