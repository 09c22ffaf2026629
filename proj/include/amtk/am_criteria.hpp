#ifndef AMTK_AM_CRITERIA_HPP
#define AMTK_AM_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "amtk/designs.hpp"
#include "amtk/exact.hpp"
#include "amtk/gf2.hpp"

namespace amtk {

// Strengths t for which the code meets the counting condition
//   d_dual - t = #{u : C_u nonempty, 0 < u <= n-t},
// plus the design weights that condition then certifies at the maximal t.
struct AMReport {
    CodeProfile profile;
    std::vector<uint32_t> t_values;  // all 1 <= t < d satisfying the condition
    std::optional<uint32_t> max_t;
    std::vector<uint32_t> primal_design_weights;  // nonempty u with d <= u <= n - max_t
    std::vector<uint32_t> dual_design_weights;    // nonempty dual w with d_dual <= w <= n
};

/// Requires the all-ones word in C and a nonzero dual.
AMReport am_t_values(const BinaryCode& c, const EnumerationLimits& lim = {});

struct AMVerification {
    uint32_t t = 0;
    struct Entry {
        bool dual = false;
        uint32_t weight = 0;
        uint64_t blocks = 0;
        Int lambda;
        bool confirmed = false;
    };
    std::vector<Entry> entries;
    bool all_confirmed = false;  // false witnesses an internal inconsistency
};

/// Rechecks every certified design weight by direct counting. t must belong
/// to am_t_values(c).t_values.
AMVerification am_designs_verified(const BinaryCode& c, uint32_t t,
                                   const EnumerationLimits& lim = {},
                                   const DesignBudget& budget = {});

enum class CriterionCase { four_weight, five_weight };

struct CriterionValue {
    CriterionCase kase = CriterionCase::four_weight;
    uint32_t n = 0, d1 = 0, d2 = 0, t = 0, w = 0;
    Rat value;
    bool is_zero = false;
    uint32_t implied_design_weight = 0;  // 2w+t+2 (four) or 2w+t+1 (five)
};

/// Four-weight criterion: sum over i of (-1)^(w-i) C(d1-(t+1), w-i) C(n-2d1, 2i+1)
/// minus (n-2d1)/(n-2d2) times the same sum built from d2. Requires
/// 0 < d1 < d2 < n/2, t >= 1, t+1 <= d1, 2w+t+2 <= n.
CriterionValue criterion_four(uint32_t n, uint32_t d1, uint32_t d2, uint32_t t, uint32_t w);

/// Five-weight criterion: the analogous three-term expression with even
/// binomials, ratio (n-2d1)(n-2d1-2)/((n-2d2)(n-2d2-2)), and the middle-weight
/// term 8(d2-d1)(n-d1-d2-1)/((n-2d2)(n-2d2-2)) (-1)^(w+1) C(n/2-(t+1), w).
/// Requires n even and d2 != n/2 - 1 (the ratio denominator vanishes there).
CriterionValue criterion_five(uint32_t n, uint32_t d1, uint32_t d2, uint32_t t, uint32_t w);

// Expansion of (xy)^(t+1) Z where Z is the dual-side cofactor bracket with
// a1' normalized to 1; p[i] is the coefficient of x^(n-i) y^i.
struct ZDualExpansion {
    CriterionCase kase = CriterionCase::four_weight;
    uint32_t n = 0, d1 = 0, d2 = 0, t = 0;
    Rat a2;                 // derived second coefficient (a1 = 1)
    std::optional<Rat> b;   // derived middle coefficient, five-weight only
    std::vector<Rat> p;     // size n+1
};

/// Four-weight bracket:
///   (x^2-y^2)^(d1-t-1) [(x+y)^(n-2d1) - (x-y)^(n-2d1)]
///   - (n-2d1)/(n-2d2) (x^2-y^2)^(d2-t-1) [(x+y)^(n-2d2) - (x-y)^(n-2d2)],
/// so only odd y-powers survive in Z. Five-weight uses the even combination
/// plus b (x^2-y^2)^(n/2-t-1), leaving only even y-powers in Z.
ZDualExpansion zdual_expansion(CriterionCase kase, uint32_t n, uint32_t d1, uint32_t d2,
                               uint32_t t);

struct DesignWeightScan {
    CriterionCase kase = CriterionCase::four_weight;
    uint32_t w_max = 0;
    bool trivial_w0 = false;            // four-weight: w = 0 vanishes identically
    std::vector<CriterionValue> zeros;  // nontrivial zeros, ascending w
};

/// Evaluates the case criterion for w = 0..w_max and reports the zeros.
DesignWeightScan find_design_weights(CriterionCase kase, uint32_t n, uint32_t d1, uint32_t d2,
                                     uint32_t t, uint32_t w_max);

enum class WeightShape { other, four_weight, five_weight };

/// four_weight: nonzero weights are {d1, d2, n-d2, n-d1, n} with
/// 0 < d1 < d2 < n/2; five_weight additionally has n/2. Requires all-ones
/// (weight n present) to qualify.
WeightShape classify_weight_shape(const CodeProfile& p);

struct CodeCriterionParams {
    CriterionCase kase = CriterionCase::four_weight;
    uint32_t n = 0, d1 = 0, d2 = 0, t = 0;
    uint32_t d_dual = 0;
};

// (d_dual, t) pairs admissible for each case.
bool admissible_case_pair(CriterionCase kase, uint32_t d_dual, uint32_t t);

/// Extracts criterion parameters from a concrete code: the profile must be
/// four- or five-weight shaped, the maximal AM strength is used, and the
/// (d_dual, t) pair must be one of the admissible ones for the case.
CodeCriterionParams criterion_params_from_code(const BinaryCode& c,
                                               const EnumerationLimits& lim = {});

}  // namespace amtk

#endif
