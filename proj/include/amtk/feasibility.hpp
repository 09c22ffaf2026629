#ifndef AMTK_FEASIBILITY_HPP
#define AMTK_FEASIBILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "amtk/am_criteria.hpp"
#include "amtk/exact.hpp"

namespace amtk {

// Candidate weight enumerator for the vanishing-dual-coefficient system:
//   C(n,2i) + K_2i(d1) alpha + K_2i(d2) beta [+ K_2i(n/2) gamma/2] = 0.
// The leading square subsystem (i = 1,2 four-weight; i = 1,2,3 five-weight)
// is solved exactly; the remaining constraints become residuals. A record is
// feasible only if every flag holds, and a feasible record contradicts the
// nonexistence statements, so scans surface it loudly.
struct FeasibilityRecord {
    CriterionCase kase = CriterionCase::four_weight;
    uint32_t n = 0, d1 = 0, d2 = 0;
    bool singular = false;  // leading subsystem had no unique solution

    Rat alpha, beta, gamma;      // gamma meaningful for five_weight only
    std::vector<Rat> residuals;  // non-leading constraints at the solution

    bool all_residuals_zero = false;
    bool integral = false;
    bool positive = false;
    bool gamma_even = true;  // five-weight: gamma must be an even integer
    Rat cardinality;         // 1 + alpha + beta (+ gamma/2)
    bool power_of_two = false;
    std::optional<uint64_t> exponent;  // cardinality == 2^exponent
    bool feasible = false;

    // Homogenized pairings of the first constraint with each later one:
    // X[i], Y[i] (and Z[i] for the gamma column) are the alpha/beta/gamma
    // coefficients after the constant terms cancel; dets are the square
    // minors formed from the leading rows.
    std::vector<Int> diag_x, diag_y, diag_z;
    std::vector<Int> diag_dets;
};

FeasibilityRecord putative_enumerator(CriterionCase kase, uint32_t n, uint32_t d1, uint32_t d2);

struct ScanSummary {
    CriterionCase kase = CriterionCase::four_weight;
    uint32_t n_max = 0;
    uint64_t tuples = 0;
    uint64_t singular = 0;
    uint64_t residuals_zero = 0;  // solvable with every residual vanishing
    uint64_t feasible = 0;
};

struct ScanResult {
    ScanSummary summary;
    std::vector<FeasibilityRecord> feasible;  // expected empty
};

/// Exhaustive scan over 5 < n <= n_max, 0 < d1 < d2 < n/2 (n even for the
/// five-weight case). Returns every feasible record; finding one is the
/// noteworthy outcome, not an error.
ScanResult scan_nonexistence(CriterionCase kase, uint32_t n_max, unsigned threads = 1);

struct LemmaSolution {
    uint64_t n = 0;
    uint64_t exponent = 0;
};

/// Scans n = 0..n_max for p(n) = 2^e where p is the degree-4 quartic
/// (24 - 18n + 23n^2 - 6n^3 + n^4)/24 or the degree-5 quintic
/// (184n - 110n^2 + 55n^3 - 10n^4 + n^5)/120. Exhaustive only up to n_max.
std::vector<LemmaSolution> lemma_scan(uint32_t degree, uint64_t n_max, unsigned threads = 1);

struct ConjectureProbe {
    uint32_t ell = 0, n = 0;
    std::vector<uint32_t> weights;
    enum class Status { confirmed, refuted, inapplicable, singular } status = Status::inapplicable;
    std::vector<Rat> alphas;
    std::vector<Rat> residuals;
    std::optional<Rat> lhs;  // 1 + sum alpha_i (+ last/2 for odd ell)
    std::optional<Int> rhs;  // sum_{i<=ell} C(n-1, i)
    bool power_of_two = false;
    std::optional<uint64_t> exponent;
};

/// Models A_2i = 0 for i = 1..ell on an antipodal enumerator with the given
/// weight list (final weight n/2 mandatory when ell is odd), solves the
/// leading subsystem, and tests the cardinality identity when all residuals
/// vanish.
ConjectureProbe conjecture_probe(uint32_t ell, uint32_t n, const std::vector<uint32_t>& weights);

}  // namespace amtk

#endif
