#include "amtk/feasibility.hpp"

#include <algorithm>

#include "amtk/enumerators.hpp"
#include "amtk/linalg.hpp"
#include "amtk/parallel.hpp"

namespace amtk {

namespace {

// Constraint row for A_2i = 0 on the antipodal enumerator: for a weight
// d < n/2 the paired terms fold to one coefficient K_2i(d), and the middle
// weight n/2 (if present) contributes K_2i(n/2)/2 against gamma.
struct ConstraintSystem {
    uint32_t n = 0;
    std::vector<uint32_t> weights;  // < n/2, plus possibly a final n/2
    bool has_middle = false;

    // Constraints indexed past n/2 are identically zero (the enumerator has
    // no such coefficient), so their rows vanish.
    Rat coeff(uint32_t i, size_t j) const {
        if (2 * i > n) return Rat(0);
        Int k = krawtchouk(2 * i, weights[j], n);
        if (has_middle && j + 1 == weights.size()) return Rat(k) / 2;
        return Rat(k);
    }
    Rat rhs(uint32_t i) const { return -Rat(binomial(n, 2 * i)); }
};

void check_pair(uint32_t n, uint32_t d1, uint32_t d2) {
    if (!(0 < d1 && d1 < d2)) throw std::invalid_argument("need 0 < d1 < d2");
    if (2 * d2 >= n) throw std::invalid_argument("need d2 < n/2");
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

void finish_flags(FeasibilityRecord& rec) {
    bool five = rec.kase == CriterionCase::five_weight;
    rec.all_residuals_zero = true;
    for (const Rat& r : rec.residuals)
        if (r != 0) rec.all_residuals_zero = false;
    rec.integral = is_integer(rec.alpha) && is_integer(rec.beta) && (!five || is_integer(rec.gamma));
    rec.positive = rec.alpha > 0 && rec.beta > 0 && (!five || rec.gamma > 0);
    rec.gamma_even = true;
    if (five && is_integer(rec.gamma)) {
        Int g = rec.gamma.get_num();
        rec.gamma_even = mpz_even_p(g.get_mpz_t()) != 0;
    } else if (five) {
        rec.gamma_even = false;
    }
    rec.cardinality = Rat(1) + rec.alpha + rec.beta;
    if (five) rec.cardinality += rec.gamma / 2;
    rec.cardinality.canonicalize();
    rec.power_of_two = false;
    if (is_integer(rec.cardinality)) {
        if (auto e = exact_log2(rec.cardinality.get_num())) {
            rec.power_of_two = true;
            rec.exponent = *e;
        }
    }
    rec.feasible = !rec.singular && rec.all_residuals_zero && rec.integral && rec.positive &&
                   rec.gamma_even && rec.power_of_two;
}

// Homogenized diagnostics: pair the first constraint with each later one so
// the constant terms cancel, leaving pure coefficient rows.
void fill_diagnostics(FeasibilityRecord& rec, const ConstraintSystem& sys, uint32_t i_max) {
    Int c2 = binomial(sys.n, 2);
    for (uint32_t i = 2; i <= i_max; ++i) {
        Int ci = binomial(sys.n, 2 * i);
        Rat x = Rat(ci) * sys.coeff(1, 0) - Rat(c2) * sys.coeff(i, 0);
        Rat y = Rat(ci) * sys.coeff(1, 1) - Rat(c2) * sys.coeff(i, 1);
        x.canonicalize();
        y.canonicalize();
        rec.diag_x.push_back(x.get_num());
        rec.diag_y.push_back(y.get_num());
        if (sys.weights.size() > 2) {
            Rat zc = Rat(ci) * sys.coeff(1, 2) - Rat(c2) * sys.coeff(i, 2);
            zc *= 2;  // clear the middle-column half so the entry stays integral
            zc.canonicalize();
            rec.diag_z.push_back(zc.get_num());
        }
    }
    if (sys.weights.size() == 2) {
        // dets of [[X1,Y1],[Xi,Yi]] for i = 2,3 (rows are 0-indexed in diag_*)
        for (size_t i = 1; i < rec.diag_x.size(); ++i) {
            Int det = rec.diag_x[0] * rec.diag_y[i] - rec.diag_x[i] * rec.diag_y[0];
            rec.diag_dets.push_back(det);
        }
    } else {
        // dets of the 3x3 systems formed by rows (1,2,i) for i = 3,4
        for (size_t i = 2; i < rec.diag_x.size(); ++i) {
            QMatrix m(3, 3);
            size_t pick[3] = {0, 1, i};
            for (size_t r = 0; r < 3; ++r) {
                m.at(r, 0) = Rat(rec.diag_x[pick[r]]);
                m.at(r, 1) = Rat(rec.diag_y[pick[r]]);
                m.at(r, 2) = Rat(rec.diag_z[pick[r]]);
            }
            Rat det = determinant(std::move(m));
            det.canonicalize();
            rec.diag_dets.push_back(det.get_num());
        }
    }
}

}  // namespace

FeasibilityRecord putative_enumerator(CriterionCase kase, uint32_t n, uint32_t d1, uint32_t d2) {
    bool five = kase == CriterionCase::five_weight;
    check_pair(n, d1, d2);
    if (five && n % 2 != 0)
        throw std::invalid_argument("five-weight system: n must be even");

    FeasibilityRecord rec;
    rec.kase = kase;
    rec.n = n;
    rec.d1 = d1;
    rec.d2 = d2;

    ConstraintSystem sys;
    sys.n = n;
    sys.weights = {d1, d2};
    if (five) {
        sys.weights.push_back(n / 2);
        sys.has_middle = true;
    }
    size_t m = sys.weights.size();       // unknowns: alpha, beta[, gamma]
    uint32_t i_max = five ? 5 : 4;       // constraints A_2..A_{2 i_max}

    QMatrix lead(m, m);
    std::vector<Rat> rhs(m);
    for (uint32_t i = 1; i <= m; ++i) {
        for (size_t j = 0; j < m; ++j) lead.at(i - 1, j) = sys.coeff(i, j);
        rhs[i - 1] = sys.rhs(i);
    }
    auto sol = solve_square(lead, rhs);
    fill_diagnostics(rec, sys, i_max);
    if (!sol) {
        rec.singular = true;
        finish_flags(rec);
        rec.feasible = false;
        return rec;
    }
    rec.alpha = (*sol)[0];
    rec.beta = (*sol)[1];
    if (five) rec.gamma = (*sol)[2];

    for (uint32_t i = uint32_t(m) + 1; i <= i_max; ++i) {
        Rat r = -sys.rhs(i);
        for (size_t j = 0; j < m; ++j) r += sys.coeff(i, j) * (*sol)[j];
        r.canonicalize();
        rec.residuals.push_back(r);
    }
    finish_flags(rec);
    return rec;
}

ScanResult scan_nonexistence(CriterionCase kase, uint32_t n_max, unsigned threads) {
    ScanResult out;
    out.summary.kase = kase;
    out.summary.n_max = n_max;
    bool five = kase == CriterionCase::five_weight;

    unsigned t = resolve_threads(threads);
    struct Partial {
        ScanSummary summary;
        std::vector<FeasibilityRecord> feasible;
    };
    std::vector<Partial> parts(t);
    uint64_t lo_n = 6, hi_n = uint64_t(n_max) + 1;
    if (hi_n < lo_n) hi_n = lo_n;
    parallel_chunks(lo_n, hi_n, t, [&](unsigned worker, uint64_t lo, uint64_t hi) {
        Partial& part = parts[worker];
        for (uint64_t n = lo; n < hi; ++n) {
            if (five && n % 2 != 0) continue;
            for (uint32_t d2 = 2; 2 * d2 < n; ++d2) {
                for (uint32_t d1 = 1; d1 < d2; ++d1) {
                    ++part.summary.tuples;
                    FeasibilityRecord rec =
                        putative_enumerator(kase, uint32_t(n), d1, d2);
                    if (rec.singular) ++part.summary.singular;
                    if (rec.all_residuals_zero && !rec.singular) ++part.summary.residuals_zero;
                    if (rec.feasible) {
                        ++part.summary.feasible;
                        part.feasible.push_back(std::move(rec));
                    }
                }
            }
        }
    });
    for (const Partial& part : parts) {
        out.summary.tuples += part.summary.tuples;
        out.summary.singular += part.summary.singular;
        out.summary.residuals_zero += part.summary.residuals_zero;
        out.summary.feasible += part.summary.feasible;
        for (const FeasibilityRecord& rec : part.feasible) out.feasible.push_back(rec);
    }
    return out;
}

std::vector<LemmaSolution> lemma_scan(uint32_t degree, uint64_t n_max, unsigned threads) {
    if (degree != 4 && degree != 5)
        throw std::invalid_argument("lemma_scan: degree must be 4 or 5");
    unsigned t = resolve_threads(threads);
    std::vector<std::vector<LemmaSolution>> parts(t);
    parallel_chunks(0, n_max + 1, t, [&](unsigned worker, uint64_t lo, uint64_t hi) {
        auto& out = parts[worker];
        Int val, n_i;
        for (uint64_t n = lo; n < hi; ++n) {
            n_i = Int(static_cast<unsigned long>(n));
            if (degree == 4) {
                // (24 - 18n + 23n^2 - 6n^3 + n^4) / 24
                val = ((((n_i - 6) * n_i + 23) * n_i - 18) * n_i + 24);
                val /= 24;
            } else {
                // (184n - 110n^2 + 55n^3 - 10n^4 + n^5) / 120
                val = (((((n_i - 10) * n_i + 55) * n_i - 110) * n_i + 184) * n_i);
                val /= 120;
            }
            if (auto e = exact_log2(val)) out.push_back({n, *e});
        }
    });
    std::vector<LemmaSolution> all;
    for (const auto& part : parts)
        for (const LemmaSolution& s : part) all.push_back(s);
    return all;
}

ConjectureProbe conjecture_probe(uint32_t ell, uint32_t n,
                                 const std::vector<uint32_t>& weights) {
    if (ell < 4) throw std::invalid_argument("conjecture_probe: need ell >= 4");
    size_t m = (ell + 1) / 2;
    if (weights.size() != m)
        throw std::invalid_argument("conjecture_probe: expected " + std::to_string(m) +
                                    " weights for ell = " + std::to_string(ell));
    bool odd = ell % 2 != 0;
    if (odd && n % 2 != 0)
        throw std::invalid_argument("conjecture_probe: odd ell requires even n");
    for (size_t j = 0; j < m; ++j) {
        if (j > 0 && weights[j] <= weights[j - 1])
            throw std::invalid_argument("conjecture_probe: weights must increase strictly");
        bool is_last = j + 1 == m;
        if (odd && is_last) {
            if (weights[j] != n / 2)
                throw std::invalid_argument("conjecture_probe: odd ell requires final weight n/2");
        } else if (2 * weights[j] >= n) {
            throw std::invalid_argument("conjecture_probe: weights must be below n/2");
        }
    }

    ConjectureProbe probe;
    probe.ell = ell;
    probe.n = n;
    probe.weights = weights;

    ConstraintSystem sys;
    sys.n = n;
    sys.weights = weights;
    sys.has_middle = odd;

    QMatrix lead(m, m);
    std::vector<Rat> rhs(m);
    for (uint32_t i = 1; i <= m; ++i) {
        for (size_t j = 0; j < m; ++j) lead.at(i - 1, j) = sys.coeff(i, j);
        rhs[i - 1] = sys.rhs(i);
    }
    auto sol = solve_square(lead, rhs);
    if (!sol) {
        probe.status = ConjectureProbe::Status::singular;
        return probe;
    }
    probe.alphas = *sol;
    bool residuals_zero = true;
    for (uint32_t i = uint32_t(m) + 1; i <= ell; ++i) {
        Rat r = -sys.rhs(i);
        for (size_t j = 0; j < m; ++j) r += sys.coeff(i, j) * (*sol)[j];
        r.canonicalize();
        probe.residuals.push_back(r);
        if (r != 0) residuals_zero = false;
    }
    if (!residuals_zero) {
        probe.status = ConjectureProbe::Status::inapplicable;
        return probe;
    }

    Rat lhs = 1;
    for (size_t j = 0; j < m; ++j) {
        if (odd && j + 1 == m)
            lhs += (*sol)[j] / 2;
        else
            lhs += (*sol)[j];
    }
    lhs.canonicalize();
    Int rhs_sum = 0;
    for (uint32_t i = 0; i <= ell; ++i) rhs_sum += binomial(n - 1, i);
    probe.lhs = lhs;
    probe.rhs = rhs_sum;
    if (is_integer(lhs)) {
        if (auto e = exact_log2(lhs.get_num())) {
            probe.power_of_two = true;
            probe.exponent = *e;
        }
    }
    probe.status = lhs == Rat(rhs_sum) ? ConjectureProbe::Status::confirmed
                                       : ConjectureProbe::Status::refuted;
    return probe;
}

}  // namespace amtk
