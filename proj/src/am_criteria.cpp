#include "amtk/am_criteria.hpp"

#include <algorithm>

namespace amtk {

namespace {

// Signed binomial sum shared by both criteria: for exponent parity `odd`,
//   sum_{i=0}^{w} (-1)^(w-i) C(d-(t+1), w-i) C(n-2d, 2i+parity).
Int criterion_sum(uint32_t n, uint32_t d, uint32_t t, uint32_t w, bool odd) {
    Int s = 0;
    uint32_t top = d - (t + 1);
    uint32_t span = n - 2 * d;
    for (uint32_t i = 0; i <= w; ++i) {
        Int term = binomial(top, w - i) * binomial(span, 2 * i + (odd ? 1 : 0));
        if ((w - i) & 1)
            s -= term;
        else
            s += term;
    }
    return s;
}

void check_common(const char* who, uint32_t n, uint32_t d1, uint32_t d2, uint32_t t) {
    if (!(0 < d1 && d1 < d2))
        throw std::invalid_argument(std::string(who) + ": need 0 < d1 < d2");
    if (2 * d2 >= n) throw std::invalid_argument(std::string(who) + ": need d2 < n/2");
    if (t < 1) throw std::invalid_argument(std::string(who) + ": need t >= 1");
    if (t + 1 > d1) throw std::invalid_argument(std::string(who) + ": need t+1 <= d1");
}

// y-coefficient vector of (x^2-y^2)^p * (x+y)^q (sign +1) or (x^2-y^2)^p *
// (x-y)^q (sign -1), homogeneous of degree 2p+q.
std::vector<Int> squares_times_linear(uint32_t p, uint32_t q, int sign) {
    std::vector<Int> out(2 * p + q + 1, 0);
    for (uint32_t m = 0; m <= p; ++m) {
        Int left = binomial(p, m);
        if (m & 1) left = -left;
        for (uint32_t l = 0; l <= q; ++l) {
            Int right = binomial(q, l);
            if (sign < 0 && (l & 1)) right = -right;
            out[2 * m + l] += left * right;
        }
    }
    return out;
}

}  // namespace

CriterionValue criterion_four(uint32_t n, uint32_t d1, uint32_t d2, uint32_t t, uint32_t w) {
    check_common("criterion_four", n, d1, d2, t);
    if (2 * w + t + 2 > n)
        throw std::invalid_argument("criterion_four: design weight 2w+t+2 exceeds n");
    Int s1 = criterion_sum(n, d1, t, w, true);
    Int s2 = criterion_sum(n, d2, t, w, true);
    Rat value = Rat(s1) - Rat(Int(n - 2 * d1), Int(n - 2 * d2)) * Rat(s2);
    value.canonicalize();
    CriterionValue v;
    v.kase = CriterionCase::four_weight;
    v.n = n;
    v.d1 = d1;
    v.d2 = d2;
    v.t = t;
    v.w = w;
    v.value = value;
    v.is_zero = value == 0;
    v.implied_design_weight = 2 * w + t + 2;
    return v;
}

CriterionValue criterion_five(uint32_t n, uint32_t d1, uint32_t d2, uint32_t t, uint32_t w) {
    if (n % 2 != 0) throw std::invalid_argument("criterion_five: n must be even");
    check_common("criterion_five", n, d1, d2, t);
    if (d2 == n / 2 - 1)
        throw std::invalid_argument(
            "criterion_five: degenerate denominator at d2 = n/2 - 1, the ratio "
            "(n-2d2)(n-2d2-2) vanishes and the expression is undefined");
    if (2 * w + t + 1 > n)
        throw std::invalid_argument("criterion_five: design weight 2w+t+1 exceeds n");
    Int a = n - 2 * d1, b = n - 2 * d2;
    Int s1 = criterion_sum(n, d1, t, w, false);
    Int s2 = criterion_sum(n, d2, t, w, false);
    Rat ratio(a * (a - 2), b * (b - 2));
    Rat middle(Int(8) * Int(d2 - d1) * Int(n - d1 - d2 - 1), b * (b - 2));
    Int mid_binom = binomial(n / 2 - (t + 1), w);
    Rat third = middle * Rat(mid_binom);
    if (w % 2 == 0) third = -third;  // the (-1)^(w+1) factor
    Rat value = Rat(s1) - ratio * Rat(s2) + third;
    value.canonicalize();
    CriterionValue v;
    v.kase = CriterionCase::five_weight;
    v.n = n;
    v.d1 = d1;
    v.d2 = d2;
    v.t = t;
    v.w = w;
    v.value = value;
    v.is_zero = value == 0;
    v.implied_design_weight = 2 * w + t + 1;
    return v;
}

ZDualExpansion zdual_expansion(CriterionCase kase, uint32_t n, uint32_t d1, uint32_t d2,
                               uint32_t t) {
    ZDualExpansion z;
    z.kase = kase;
    z.n = n;
    z.d1 = d1;
    z.d2 = d2;
    z.t = t;
    uint32_t p1 = 0, p2 = 0;
    std::vector<Rat> bracket;

    if (kase == CriterionCase::four_weight) {
        check_common("zdual_expansion(four)", n, d1, d2, t);
        p1 = d1 - (t + 1);
        p2 = d2 - (t + 1);
        z.a2 = Rat(Int(n - 2 * d1), Int(n - 2 * d2));
        z.a2 = -z.a2;
        // a1 [ (x2-y2)^p1 (x+y)^(n-2d1) - (x2-y2)^p1 (x-y)^(n-2d1) ]
        // + a2 [ (x2-y2)^p2 (x+y)^(n-2d2) - (x2-y2)^p2 (x-y)^(n-2d2) ]
        // with a1 = 1; only odd powers of y survive.
        bracket.assign(n - 2 * (t + 1) + 1, Rat(0));
        auto add = [&](const std::vector<Int>& poly, const Rat& coeff) {
            for (size_t i = 0; i < poly.size(); ++i)
                if (poly[i] != 0) bracket[i] += coeff * Rat(poly[i]);
        };
        add(squares_times_linear(p1, n - 2 * d1, +1), Rat(1));
        add(squares_times_linear(p1, n - 2 * d1, -1), Rat(-1));
        add(squares_times_linear(p2, n - 2 * d2, +1), z.a2);
        add(squares_times_linear(p2, n - 2 * d2, -1), -z.a2);
    } else {
        if (n % 2 != 0) throw std::invalid_argument("zdual_expansion(five): n must be even");
        check_common("zdual_expansion(five)", n, d1, d2, t);
        if (d2 == n / 2 - 1)
            throw std::invalid_argument(
                "zdual_expansion(five): degenerate denominator at d2 = n/2 - 1");
        p1 = d1 - (t + 1);
        p2 = d2 - (t + 1);
        Int a = n - 2 * d1, b = n - 2 * d2;
        z.a2 = -Rat(a * (a - 2), b * (b - 2));
        z.b = Rat(Int(8) * Int(d2 - d1) * Int(n - d1 - d2 - 1), b * (b - 2));
        bracket.assign(n - 2 * (t + 1) + 1, Rat(0));
        auto add = [&](const std::vector<Int>& poly, const Rat& coeff) {
            for (size_t i = 0; i < poly.size(); ++i)
                if (poly[i] != 0) bracket[i] += coeff * Rat(poly[i]);
        };
        add(squares_times_linear(p1, n - 2 * d1, +1), Rat(1));
        add(squares_times_linear(p1, n - 2 * d1, -1), Rat(1));
        add(squares_times_linear(p2, n - 2 * d2, +1), z.a2);
        add(squares_times_linear(p2, n - 2 * d2, -1), z.a2);
        add(squares_times_linear(n / 2 - (t + 1), 0, +1), *z.b);
    }

    // Multiply by (xy)^(t+1): p[i] = bracket[i - (t+1)].
    z.p.assign(n + 1, Rat(0));
    for (size_t j = 0; j < bracket.size(); ++j) {
        bracket[j].canonicalize();
        z.p[j + t + 1] = bracket[j];
    }

    // Parity invariant: the bracket keeps only odd (four-weight) or only
    // even (five-weight) powers of y.
    bool odd_only = kase == CriterionCase::four_weight;
    for (size_t j = 0; j < bracket.size(); ++j) {
        bool even = j % 2 == 0;
        if ((odd_only && even && bracket[j] != 0) || (!odd_only && !even && bracket[j] != 0))
            throw std::logic_error("zdual_expansion: parity invariant violated");
    }
    return z;
}

DesignWeightScan find_design_weights(CriterionCase kase, uint32_t n, uint32_t d1, uint32_t d2,
                                     uint32_t t, uint32_t w_max) {
    DesignWeightScan scan;
    scan.kase = kase;
    scan.w_max = w_max;
    for (uint32_t w = 0; w <= w_max; ++w) {
        CriterionValue v = kase == CriterionCase::four_weight ? criterion_four(n, d1, d2, t, w)
                                                              : criterion_five(n, d1, d2, t, w);
        if (!v.is_zero) continue;
        if (kase == CriterionCase::four_weight && w == 0)
            scan.trivial_w0 = true;  // both sums reduce to n-2d1, identically zero
        else
            scan.zeros.push_back(v);
    }
    return scan;
}

AMReport am_t_values(const BinaryCode& c, const EnumerationLimits& lim) {
    if (!contains_all_ones(c))
        throw std::invalid_argument("am_t_values: the code must contain the all-ones word");
    if (c.k == c.n)
        throw std::invalid_argument("am_t_values: zero dual code, d_dual is undefined");
    AMReport rep;
    rep.profile = code_profile(c, lim);
    const CodeProfile& p = rep.profile;
    for (uint32_t t = 1; t < p.d; ++t) {
        if (t > p.n) break;
        uint32_t count = 0;
        for (uint32_t u : p.weights)
            if (u <= p.n - t) ++count;
        if (p.d_dual >= t && p.d_dual - t == count) rep.t_values.push_back(t);
    }
    if (!rep.t_values.empty()) {
        uint32_t t = rep.t_values.back();
        rep.max_t = t;
        for (uint32_t u : p.weights)
            if (u >= p.d && u <= p.n - t) rep.primal_design_weights.push_back(u);
        WeightEnumerator dual = macwilliams_transform(weight_distribution(c, lim), c.k);
        for (uint32_t w = 1; w <= p.n; ++w)
            if (dual.coeffs[w] != 0 && w >= p.d_dual) rep.dual_design_weights.push_back(w);
    }
    return rep;
}

AMVerification am_designs_verified(const BinaryCode& c, uint32_t t, const EnumerationLimits& lim,
                                   const DesignBudget& budget) {
    AMReport rep = am_t_values(c, lim);
    if (std::find(rep.t_values.begin(), rep.t_values.end(), t) == rep.t_values.end())
        throw std::invalid_argument("am_designs_verified: t = " + std::to_string(t) +
                                    " does not satisfy the counting condition for this code");
    AMVerification ver;
    ver.t = t;
    ver.all_confirmed = true;
    BinaryCode dual = dual_code(c);

    auto verify = [&](const BinaryCode& code, uint32_t weight, bool is_dual) {
        SupportDesign d = support_design(code, weight, lim);
        DesignCheckResult r = check_t_design_direct(d, std::min(t, weight), budget);
        AMVerification::Entry e;
        e.dual = is_dual;
        e.weight = weight;
        e.blocks = d.blocks.size();
        e.confirmed = r.is_design && r.t == t;
        if (r.lambda) e.lambda = *r.lambda;
        if (t > weight) e.confirmed = false;  // cannot certify beyond the block size
        ver.entries.push_back(e);
        ver.all_confirmed = ver.all_confirmed && e.confirmed;
    };

    // Recompute the certified weight lists at this t (not only the maximal one).
    for (uint32_t u : rep.profile.weights)
        if (u >= rep.profile.d && u <= rep.profile.n - t) verify(c, u, false);
    WeightEnumerator dw = weight_distribution(dual, lim);
    for (uint32_t w = 1; w <= c.n; ++w)
        if (dw.coeffs[w] != 0 && w >= rep.profile.d_dual) verify(dual, w, true);
    return ver;
}

WeightShape classify_weight_shape(const CodeProfile& p) {
    if (!p.has_all_ones) return WeightShape::other;
    std::vector<uint32_t> inner;  // nonzero weights strictly below n
    for (uint32_t u : p.weights)
        if (u != p.n) inner.push_back(u);
    auto paired = [&](uint32_t d1, uint32_t d2) {
        return 0 < d1 && d1 < d2 && 2 * d2 < p.n;
    };
    if (inner.size() == 4) {
        uint32_t d1 = inner[0], d2 = inner[1];
        if (paired(d1, d2) && inner[2] == p.n - d2 && inner[3] == p.n - d1)
            return WeightShape::four_weight;
    }
    if (inner.size() == 5 && p.n % 2 == 0) {
        uint32_t d1 = inner[0], d2 = inner[1];
        if (paired(d1, d2) && inner[2] == p.n / 2 && inner[3] == p.n - d2 && inner[4] == p.n - d1)
            return WeightShape::five_weight;
    }
    return WeightShape::other;
}

bool admissible_case_pair(CriterionCase kase, uint32_t d_dual, uint32_t t) {
    if (kase == CriterionCase::four_weight)
        return (d_dual == 6 && t == 2) || (d_dual == 8 && t == 4);
    return (d_dual == 6 && t == 1) || (d_dual == 8 && t == 3) || (d_dual == 10 && t == 5);
}

CodeCriterionParams criterion_params_from_code(const BinaryCode& c, const EnumerationLimits& lim) {
    AMReport rep = am_t_values(c, lim);
    WeightShape shape = classify_weight_shape(rep.profile);
    if (shape == WeightShape::other)
        throw std::invalid_argument(
            "criterion_params_from_code: the code is not four- or five-weight shaped");
    if (!rep.max_t)
        throw std::invalid_argument(
            "criterion_params_from_code: the code meets the counting condition for no t");
    CodeCriterionParams params;
    params.kase =
        shape == WeightShape::four_weight ? CriterionCase::four_weight : CriterionCase::five_weight;
    params.n = rep.profile.n;
    params.d1 = rep.profile.weights[0];
    params.d2 = rep.profile.weights[1];
    params.t = *rep.max_t;
    params.d_dual = rep.profile.d_dual;
    if (!admissible_case_pair(params.kase, params.d_dual, params.t))
        throw std::invalid_argument(
            "criterion_params_from_code: (d_dual, t) = (" + std::to_string(params.d_dual) + ", " +
            std::to_string(params.t) + ") is outside the admissible pairs for this shape");
    return params;
}

}  // namespace amtk
