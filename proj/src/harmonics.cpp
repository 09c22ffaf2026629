#include "amtk/harmonics.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace amtk {

namespace {

void check_harm_budget(uint32_t n, uint32_t h, const HarmBudget& budget) {
    if (n > 64) throw std::invalid_argument("harmonic functions require n <= 64");
    if (n > budget.max_n || h > budget.max_h)
        throw budget_error("harmonic space (n=" + std::to_string(n) + ", h=" + std::to_string(h) +
                           ") exceeds the budget (n <= " + std::to_string(budget.max_n) +
                           ", h <= " + std::to_string(budget.max_h) + ")");
}

// Sum of f over the (h-1)-subsets of each entry must vanish identically.
void verify_kernel(uint32_t n, uint32_t h, const std::vector<std::pair<uint64_t, Rat>>& entries) {
    if (h == 0) return;  // the down-shift of a degree-0 function is empty
    std::map<uint64_t, Rat> down;
    for (const auto& [mask, value] : entries) {
        uint64_t m = mask;
        while (m) {
            uint64_t bit = m & -m;
            down[mask ^ bit] += value;
            m ^= bit;
        }
    }
    for (const auto& [mask, sum] : down)
        if (sum != 0)
            throw std::invalid_argument("function is not harmonic: down-shift sum at a (h-1)-subset is " +
                                        rat_str(sum));
}

}  // namespace

HarmonicFunction HarmonicFunction::create(uint32_t n, uint32_t h,
                                          std::vector<std::pair<uint64_t, Rat>> entries) {
    if (n > 64) throw std::invalid_argument("harmonic functions require n <= 64");
    if (h > n) throw std::invalid_argument("harmonic degree exceeds ground-set size");
    uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    std::map<uint64_t, Rat> merged;
    for (auto& [mask, value] : entries) {
        if (mask & ~full) throw std::invalid_argument("harmonic entry outside the ground set");
        if (uint32_t(std::popcount(mask)) != h)
            throw std::invalid_argument("harmonic entry is not an h-subset");
        if (value != 0) merged[mask] += value;
    }
    std::vector<std::pair<uint64_t, Rat>> clean;
    for (auto& [mask, value] : merged) {
        value.canonicalize();
        if (value != 0) clean.emplace_back(mask, value);
    }
    verify_kernel(n, h, clean);
    HarmonicFunction f;
    f.n = n;
    f.h = h;
    f.entries = std::move(clean);
    return f;
}

std::vector<HarmonicFunction> harm_basis(uint32_t n, uint32_t h, const HarmBudget& budget) {
    if (h > n) throw std::invalid_argument("harm_basis: h > n");
    check_harm_budget(n, h, budget);
    std::vector<HarmonicFunction> basis;
    if (h == 0) {
        basis.push_back(HarmonicFunction::create(n, 0, {{0, Rat(1)}}));
        return basis;
    }

    // Index basis elements by h-subsets B = {b_1 < ... < b_h} with b_i >= 2i
    // (1-based). Pair b_i with a_i, the i-th smallest point outside B; the
    // element is the expanded product of (point b_i minus point a_i): for
    // each way of swapping some b_i for a_i, the resulting h-subset carries
    // sign (-1)^(number of swaps). Each factor's down-shift cancels pairwise,
    // so the product lies in the kernel, and the leading-term triangularity
    // of this family makes it independent; the count matches the kernel
    // dimension C(n,h) - C(n,h-1), so it is a basis.
    std::vector<uint32_t> b(h);
    for (uint32_t i = 0; i < h; ++i) b[i] = i;  // 0-based positions
    // iterate h-subsets of {0..n-1} in colexicographic order
    while (true) {
        bool ballot = true;
        for (uint32_t i = 0; i < h; ++i)
            if (b[i] + 1 < 2 * (i + 1)) {
                ballot = false;
                break;
            }
        if (ballot) {
            uint64_t bmask = 0;
            for (uint32_t x : b) bmask |= uint64_t(1) << x;
            std::vector<uint32_t> a;
            for (uint32_t x = 0; a.size() < h; ++x)
                if (!(bmask >> x & 1)) a.push_back(x);
            std::vector<std::pair<uint64_t, Rat>> entries;
            entries.reserve(size_t(1) << h);
            for (uint32_t s = 0; s < (uint32_t(1) << h); ++s) {
                uint64_t mask = 0;
                for (uint32_t i = 0; i < h; ++i)
                    mask |= uint64_t(1) << ((s >> i & 1) ? a[i] : b[i]);
                entries.emplace_back(mask, Rat(std::popcount(s) & 1 ? -1 : 1));
            }
            basis.push_back(HarmonicFunction::create(n, h, std::move(entries)));
        }
        // next subset in colex order
        uint32_t i = 0;
        while (i + 1 < h && b[i] + 1 == b[i + 1]) ++i;
        if (b[i] + 1 == n) break;
        ++b[i];
        for (uint32_t j = 0; j < i; ++j) b[j] = j;
    }

    uint64_t ch = small_binomial(n, h), chm1 = small_binomial(n, h - 1);
    uint64_t expect = ch > chm1 ? ch - chm1 : 0;
    if (basis.size() != expect)
        throw std::logic_error("harm_basis: constructed " + std::to_string(basis.size()) +
                               " elements, expected " + std::to_string(expect));
    return basis;
}

Rat tilde_evaluate(const HarmonicFunction& f, uint64_t subset_mask) {
    Rat s = 0;
    for (const auto& [mask, value] : f.entries)
        if ((mask & ~subset_mask) == 0) s += value;
    s.canonicalize();
    return s;
}

Rat tilde_evaluate(const HarmonicFunction& f, const BitVec& subset) {
    if (subset.size() != f.n) throw std::invalid_argument("tilde_evaluate: length mismatch");
    if (subset.size() > 64) throw std::invalid_argument("tilde_evaluate: n > 64");
    return tilde_evaluate(f, subset.low_mask());
}

HarmonicEnumerator harmonic_weight_enumerator(const BinaryCode& c, const HarmonicFunction& f,
                                              const EnumerationLimits& lim) {
    if (f.n != c.n) throw std::invalid_argument("harmonic_weight_enumerator: length mismatch");
    if (c.n > 64) throw std::invalid_argument("harmonic_weight_enumerator: n > 64");
    if (c.k > lim.max_dim)
        throw budget_error("harmonic enumerator over 2^" + std::to_string(c.k) +
                           " words exceeds the budget 2^" + std::to_string(lim.max_dim));
    HarmonicEnumerator e;
    e.h = f.h;
    e.code_size = pow2(c.k);
    e.w_poly = BivariatePoly(c.n);

    // Gray-code walk: step i flips generator ctz(i).
    uint64_t total = uint64_t(1) << c.k;
    BitVec word(c.n);
    for (uint64_t i = 0; i < total; ++i) {
        if (i > 0) word ^= c.generators[std::countr_zero(i)];
        Rat ft = tilde_evaluate(f, word.low_mask());
        if (ft != 0) e.w_poly.coeffs[word.popcount()] += ft;
    }
    for (Rat& coeff : e.w_poly.coeffs) coeff.canonicalize();

    // The (xy)^h factorization must come out exactly: coefficients below
    // weight h or above n-h have to vanish.
    if (c.n < 2 * f.h) {
        for (const Rat& coeff : e.w_poly.coeffs)
            if (coeff != 0) throw std::logic_error("harmonic enumerator does not factor as (xy)^h");
        e.z_poly = BivariatePoly(0);
        e.z_poly.coeffs[0] = 0;
        return e;
    }
    for (uint32_t w = 0; w <= c.n; ++w) {
        if (w >= f.h && w <= c.n - f.h) continue;
        if (e.w_poly.coeffs[w] != 0)
            throw std::logic_error("harmonic enumerator does not factor as (xy)^h");
    }
    e.z_poly = BivariatePoly(c.n - 2 * f.h);
    for (uint32_t i = 0; i <= c.n - 2 * f.h; ++i) e.z_poly.coeffs[i] = e.w_poly.coeffs[i + f.h];
    return e;
}

BivariatePoly bachoc_transform(const BivariatePoly& z, uint32_t h, const Int& code_size) {
    auto log = exact_log2(code_size);
    if (!log) throw std::invalid_argument("bachoc_transform: |C| must be a power of two");
    uint32_t deg = z.degree;
    BivariatePoly out(deg);
    // Substitute (x+y, x-y): term c_i (x+y)^(deg-i) (x-y)^i contributes
    // c_i * sum over split products of binomials with alternating signs.
    for (uint32_t i = 0; i <= deg; ++i) {
        if (z.coeffs[i] == 0) continue;
        for (uint32_t j = 0; j <= deg; ++j) {
            // coefficient of y^j in (x+y)^(deg-i) (x-y)^i
            Int conv = 0;
            for (uint32_t a = 0; a <= j; ++a) {
                if (a > i || j - a > deg - i) continue;
                Int term = binomial(i, a) * binomial(deg - i, j - a);
                if (a & 1)
                    conv -= term;
                else
                    conv += term;
            }
            if (conv != 0) out.coeffs[j] += z.coeffs[i] * Rat(conv);
        }
    }
    Rat scale = Rat(pow2(h)) / Rat(code_size);
    if (h & 1) scale = -scale;
    for (Rat& coeff : out.coeffs) {
        coeff *= scale;
        coeff.canonicalize();
    }
    return out;
}

}  // namespace amtk
