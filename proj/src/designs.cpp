#include "amtk/designs.hpp"

#include <algorithm>

namespace amtk {

namespace {

// Colexicographic rank of a t-subset given by ascending 0-based points.
uint64_t colex_rank(const std::vector<uint32_t>& pts, uint32_t t) {
    uint64_t r = 0;
    for (uint32_t i = 0; i < t; ++i) r += small_binomial(pts[i], i + 1);
    return r;
}

std::vector<uint32_t> colex_unrank(uint64_t rank, uint32_t t, uint32_t n) {
    std::vector<uint32_t> pts(t);
    for (uint32_t i = t; i-- > 0;) {
        uint32_t p = i;  // smallest candidate for position i is i
        for (uint32_t q = n; q-- > i;) {
            if (small_binomial(q, i + 1) <= rank) {
                p = q;
                break;
            }
        }
        pts[i] = p;
        rank -= small_binomial(p, i + 1);
    }
    return pts;
}

void check_design_budget(uint32_t n, uint32_t t, const DesignBudget& budget) {
    Int combos = binomial(n, t);
    if (combos > Int(static_cast<unsigned long>(budget.max_subsets)))
        throw budget_error("design check over C(" + std::to_string(n) + "," + std::to_string(t) +
                           ") subsets exceeds the budget " + std::to_string(budget.max_subsets));
}

// Calls fn with each t-subset of the given ascending point list.
template <typename Fn>
void for_each_subset(const std::vector<uint32_t>& pts, uint32_t t, Fn&& fn) {
    uint32_t m = uint32_t(pts.size());
    if (t > m) return;
    std::vector<uint32_t> idx(t);
    for (uint32_t i = 0; i < t; ++i) idx[i] = i;
    std::vector<uint32_t> cur(t);
    while (true) {
        for (uint32_t i = 0; i < t; ++i) cur[i] = pts[idx[i]];
        fn(cur);
        uint32_t i = t;
        while (i-- > 0) {
            if (idx[i] + (t - i) < m) {
                ++idx[i];
                for (uint32_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

Int design_lambda(uint64_t blocks, uint32_t w, uint32_t t, uint32_t n) {
    Int num = Int(static_cast<unsigned long>(blocks)) * binomial(w, t);
    Int den = binomial(n, t);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("design lambda is not integral despite equal counts");
    return num / den;
}

}  // namespace

SupportDesign support_design(const BinaryCode& c, uint32_t w, const EnumerationLimits& lim) {
    if (w == 0 || w > c.n) throw std::invalid_argument("support_design: need 0 < w <= n");
    SupportDesign d;
    d.n = c.n;
    d.w = w;
    d.blocks = codewords_of_weight(c, w, lim);  // binary supports == codewords
    return d;
}

DesignCheckResult check_t_design_direct(const SupportDesign& d, uint32_t t,
                                        const DesignBudget& budget) {
    DesignCheckResult res;
    res.t = t;
    if (d.blocks.empty()) {
        res.is_design = true;
        res.empty = true;
        res.lambda = 0;
        return res;
    }
    if (t > d.w) throw std::invalid_argument("check_t_design_direct: t exceeds the block size");
    res.complete = d.w == d.n;
    check_design_budget(d.n, t, budget);
    if (t == 0) {
        res.is_design = true;
        res.lambda = Int(static_cast<unsigned long>(d.blocks.size()));
        return res;
    }

    uint64_t table_size = small_binomial(d.n, t);
    std::vector<uint32_t> counts(table_size, 0);
    for (const BitVec& b : d.blocks) {
        std::vector<uint32_t> pts = b.support();
        for_each_subset(pts, t, [&](const std::vector<uint32_t>& sub) {
            ++counts[colex_rank(sub, t)];
        });
    }
    uint64_t lo = 0, hi = 0;
    for (uint64_t i = 1; i < table_size; ++i) {
        if (counts[i] < counts[lo]) lo = i;
        if (counts[i] > counts[hi]) hi = i;
    }
    if (counts[lo] == counts[hi]) {
        res.is_design = true;
        res.lambda = design_lambda(d.blocks.size(), d.w, t, d.n);
        if (*res.lambda != counts[lo])
            throw std::logic_error("design lambda disagrees with the counted value");
    } else {
        res.is_design = false;
        res.witness = std::make_pair(colex_unrank(hi, t, d.n), colex_unrank(lo, t, d.n));
    }
    return res;
}

const std::vector<HarmonicFunction>& HarmBasisCache::get(uint32_t n, uint32_t h) {
    auto key = std::make_pair(n, h);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, harm_basis(n, h, budget_)).first;
    return it->second;
}

DesignCheckResult check_t_design_harmonic(const SupportDesign& d, uint32_t t,
                                          HarmBasisCache& basis_source,
                                          const DesignBudget& budget) {
    DesignCheckResult res;
    res.t = t;
    if (d.blocks.empty()) {
        res.is_design = true;
        res.empty = true;
        res.lambda = 0;
        return res;
    }
    if (t > d.w) throw std::invalid_argument("check_t_design_harmonic: t exceeds the block size");
    if (d.n > 64) throw std::invalid_argument("check_t_design_harmonic: n > 64");
    res.complete = d.w == d.n;

    for (uint32_t h = 1; h <= t; ++h) {
        check_design_budget(d.n, h, budget);
        // Containment table: for each h-subset, how many blocks contain it.
        // The basis sum over blocks of f-tilde is then the sparse dot product
        // of f's entries with this table.
        uint64_t table_size = small_binomial(d.n, h);
        std::vector<uint64_t> contain(table_size, 0);
        for (const BitVec& b : d.blocks) {
            std::vector<uint32_t> pts = b.support();
            for_each_subset(pts, h, [&](const std::vector<uint32_t>& sub) {
                ++contain[colex_rank(sub, h)];
            });
        }
        const std::vector<HarmonicFunction>& basis = basis_source.get(d.n, h);
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            Rat sum = 0;
            for (const auto& [mask, value] : basis[bi].entries) {
                BitVec bv = BitVec::from_mask(d.n, mask);
                std::vector<uint32_t> pts = bv.support();
                uint64_t cnt = contain[colex_rank(pts, h)];
                if (cnt) sum += value * Rat(Int(static_cast<unsigned long>(cnt)));
            }
            sum.canonicalize();
            if (sum != 0) {
                res.is_design = false;
                res.harmonic_violation = std::make_pair(h, uint32_t(bi));
                return res;
            }
        }
    }
    res.is_design = true;
    res.lambda = design_lambda(d.blocks.size(), d.w, t, d.n);
    return res;
}

DesignCheckResult check_t_design_harmonic(const SupportDesign& d, uint32_t t,
                                          const HarmBudget& hbudget, const DesignBudget& budget) {
    HarmBasisCache cache(hbudget);
    return check_t_design_harmonic(d, t, cache, budget);
}

DeltaSReport delta_s(const BinaryCode& c, uint32_t t_max, const EnumerationLimits& lim,
                     const DesignBudget& budget) {
    DeltaSReport rep;
    rep.t_max = t_max;
    CodeProfile p = code_profile(c, lim);
    for (uint32_t w : p.weights) {
        SupportDesign d = support_design(c, w, lim);
        WeightStrength row;
        row.w = w;
        row.block_count = d.blocks.size();
        row.complete = w == c.n;
        uint32_t cap = std::min(t_max, w);
        uint32_t t = 0;
        while (t < cap) {
            DesignCheckResult r = check_t_design_direct(d, t + 1, budget);
            if (!r.is_design) break;
            ++t;
        }
        row.strength = t;
        // Strength can never exceed the block size, so only the t_max
        // truncation leaves the true value uncertain.
        row.capped = t == t_max && t_max < w;
        rep.table.push_back(row);
    }

    // Aggregates over proper weights (0 < w < n): the complete single-block
    // design and empty weights carry no design information.
    bool min_all_capped = true;
    for (const WeightStrength& row : rep.table) {
        if (row.complete) continue;
        if (!rep.delta || row.strength < *rep.delta) {
            rep.delta = row.strength;
            min_all_capped = row.capped;
        } else if (row.strength == *rep.delta) {
            min_all_capped = min_all_capped && row.capped;
        }
        if (!rep.s || row.strength > *rep.s) {
            rep.s = row.strength;
            rep.s_capped = row.capped;
        } else if (row.strength == *rep.s) {
            rep.s_capped = rep.s_capped || row.capped;
        }
    }
    rep.delta_capped = rep.delta && min_all_capped;
    return rep;
}

}  // namespace amtk
