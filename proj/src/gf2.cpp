#include "amtk/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <mutex>
#include <sstream>

#include "amtk/parallel.hpp"

namespace amtk {

namespace {

// Reduced row echelon form over GF(2); returns rows with strictly
// increasing pivot columns, zero rows removed.
std::vector<BitVec> rref_gf2(uint32_t n, std::vector<BitVec> rows) {
    size_t r = 0;
    for (uint32_t c = 0; c < n && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        ++r;
    }
    rows.resize(r);
    return rows;
}

void check_budget(uint32_t k, const EnumerationLimits& lim) {
    if (k > lim.max_dim)
        throw budget_error("codeword enumeration over 2^" + std::to_string(k) +
                           " words exceeds the budget 2^" + std::to_string(lim.max_dim) +
                           "; if n-k is small, enumerate the dual and apply the "
                           "MacWilliams transform instead");
}

// Codeword for message counter i under Gray ordering: XOR of the generators
// selected by i ^ (i >> 1). Stepping i -> i+1 toggles generator ctz(i+1).
BitVec gray_start(const BinaryCode& c, uint64_t i) {
    BitVec w(c.n);
    uint64_t g = i ^ (i >> 1);
    while (g) {
        w ^= c.generators[std::countr_zero(g)];
        g &= g - 1;
    }
    return w;
}

template <typename Visit>
void visit_words(const BinaryCode& c, uint64_t lo, uint64_t hi, Visit&& visit) {
    BitVec w = gray_start(c, lo);
    for (uint64_t i = lo; i < hi; ++i) {
        visit(w);
        if (i + 1 < (uint64_t(1) << c.k)) w ^= c.generators[std::countr_zero(i + 1)];
    }
}

BinaryCode reed_muller(uint32_t r, uint32_t m) {
    if (m == 0 || m > 6) throw std::invalid_argument("rm(r,m): m must be in 1..6");
    if (r > m) throw std::invalid_argument("rm(r,m): r must be at most m");
    uint32_t n = uint32_t(1) << m;
    std::vector<BitVec> rows;
    // One row per monomial in the m point coordinates, degree <= r; the row
    // evaluates the monomial over all 2^m points.
    for (uint32_t vars = 0; vars < n; ++vars) {
        if (uint32_t(std::popcount(vars)) > r) continue;
        BitVec row(n);
        for (uint32_t p = 0; p < n; ++p)
            if ((p & vars) == vars) row.set(p);
        rows.push_back(row);
    }
    return make_code(n, rows);
}

BinaryCode cyclic_golay_23() {
    // Generator polynomial x^11 + x^9 + x^7 + x^6 + x^5 + x + 1 and its
    // 12 cyclic shifts.
    uint32_t g[] = {0, 1, 5, 6, 7, 9, 11};
    std::vector<BitVec> rows;
    for (uint32_t s = 0; s < 12; ++s) {
        BitVec row(23);
        for (uint32_t e : g) row.set(e + s);
        rows.push_back(row);
    }
    return make_code(23, rows);
}

// Extend each generator with an overall parity bit; extension is linear, so
// extending the generators extends the code.
BinaryCode extend_with_parity(const BinaryCode& c) {
    std::vector<BitVec> rows;
    for (const BitVec& g : c.generators) {
        BitVec row(c.n + 1);
        for (uint32_t i = 0; i < c.n; ++i)
            if (g.get(i)) row.set(i);
        if (g.popcount() & 1) row.set(c.n);
        rows.push_back(row);
    }
    return make_code(c.n + 1, rows);
}

BinaryCode repetition(uint32_t n) {
    if (n == 0) throw std::invalid_argument("repetition_n: n must be positive");
    BitVec row(n);
    for (uint32_t i = 0; i < n; ++i) row.set(i);
    return make_code(n, {row});
}

BinaryCode even_weight(uint32_t n) {
    if (n < 2) throw std::invalid_argument("even_weight_n: n must be at least 2");
    std::vector<BitVec> rows;
    for (uint32_t i = 0; i + 1 < n; ++i) {
        BitVec row(n);
        row.set(i);
        row.set(i + 1);
        rows.push_back(row);
    }
    return make_code(n, rows);
}

bool parse_uint(const std::string& s, uint32_t& out) {
    if (s.empty()) return false;
    uint64_t v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        v = v * 10 + uint64_t(ch - '0');
        if (v > 0xffffffffull) return false;
    }
    out = uint32_t(v);
    return true;
}

}  // namespace

BinaryCode make_code(uint32_t n, const std::vector<BitVec>& rows) {
    for (const BitVec& r : rows)
        if (r.size() != n) throw std::invalid_argument("make_code: row length mismatch");
    BinaryCode c;
    c.n = n;
    c.generators = rref_gf2(n, rows);
    c.k = uint32_t(c.generators.size());
    return c;
}

ParseResult parse_generator_matrix(std::string_view text) {
    std::vector<BitVec> rows;
    std::optional<size_t> width;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        std::string bits;
        bool comment = false;
        for (char ch : line) {
            if (comment) break;
            if (ch == '#') {
                comment = true;
            } else if (ch == '0' || ch == '1') {
                bits.push_back(ch);
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument(std::string("unexpected character '") + ch +
                                            "' in generator matrix");
            }
        }
        if (bits.empty()) continue;
        if (width && bits.size() != *width)
            throw std::invalid_argument("ragged generator matrix: row of length " +
                                        std::to_string(bits.size()) + " after rows of length " +
                                        std::to_string(*width));
        width = bits.size();
        BitVec row(uint32_t(bits.size()));
        for (size_t i = 0; i < bits.size(); ++i)
            if (bits[i] == '1') row.set(uint32_t(i));
        rows.push_back(row);
    }
    if (!width) throw std::invalid_argument("empty generator matrix");
    ParseResult res;
    res.code = make_code(uint32_t(*width), rows);
    res.dropped_dependent_rows = res.code.k < rows.size();
    return res;
}

std::string to_text(const BinaryCode& c) {
    std::string out;
    for (const BitVec& g : c.generators) {
        out += g.to_string();
        out += '\n';
    }
    if (c.k == 0) out = std::string(c.n, '0') + "\n";  // keep the length recoverable
    return out;
}

BinaryCode catalog_code(const std::string& name) {
    if (name == "hamming_7_4")
        return parse_generator_matrix("1000011\n0100101\n0010110\n0001111").code;
    if (name == "ext_hamming_8_4")
        return parse_generator_matrix("10000111\n01001011\n00101101\n00011110").code;
    if (name == "golay_23_12") return cyclic_golay_23();
    if (name == "ext_golay_24_12") return extend_with_parity(cyclic_golay_23());
    if (name.rfind("rm(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(3, name.size() - 4);
        size_t comma = inner.find(',');
        uint32_t r, m;
        if (comma == std::string::npos || !parse_uint(inner.substr(0, comma), r) ||
            !parse_uint(inner.substr(comma + 1), m))
            throw std::invalid_argument("unknown catalog code: " + name);
        return reed_muller(r, m);
    }
    if (name.rfind("repetition_", 0) == 0) {
        uint32_t n;
        if (parse_uint(name.substr(11), n)) return repetition(n);
    }
    if (name.rfind("even_weight_", 0) == 0) {
        uint32_t n;
        if (parse_uint(name.substr(12), n)) return even_weight(n);
    }
    throw std::invalid_argument("unknown catalog code: " + name);
}

std::vector<std::string> catalog_names() {
    return {"hamming_7_4",  "ext_hamming_8_4", "golay_23_12",  "ext_golay_24_12",
            "rm(r,m)",      "repetition_n",    "even_weight_n"};
}

BinaryCode dual_code(const BinaryCode& c) {
    // Pivot/free split of the canonical generators gives the parity checks:
    // for each free column f, the dual generator has a 1 at f and at every
    // pivot column whose row has a 1 at f.
    std::vector<uint32_t> pivots;
    std::vector<bool> is_pivot(c.n, false);
    for (const BitVec& g : c.generators) {
        uint32_t p = g.support().empty() ? c.n : g.support()[0];
        pivots.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<BitVec> rows;
    for (uint32_t f = 0; f < c.n; ++f) {
        if (is_pivot[f]) continue;
        BitVec row(c.n);
        row.set(f);
        for (uint32_t i = 0; i < c.k; ++i)
            if (c.generators[i].get(f)) row.set(pivots[i]);
        rows.push_back(row);
    }
    return make_code(c.n, rows);
}

bool contains_all_ones(const BinaryCode& c) {
    // Reduce the all-ones vector by the echelon rows; membership iff it
    // reduces to zero.
    BitVec v(c.n);
    for (uint32_t i = 0; i < c.n; ++i) v.set(i);
    for (const BitVec& g : c.generators) {
        uint32_t p = g.support().empty() ? c.n : g.support()[0];
        if (p < c.n && v.get(p)) v ^= g;
    }
    return !v.any();
}

WeightEnumerator weight_distribution(const BinaryCode& c, const EnumerationLimits& lim) {
    check_budget(c.k, lim);
    uint64_t total = uint64_t(1) << c.k;
    unsigned t = resolve_threads(lim.threads);
    std::vector<std::vector<uint64_t>> partial(t, std::vector<uint64_t>(c.n + 1, 0));
    parallel_chunks(0, total, t, [&](unsigned worker, uint64_t lo, uint64_t hi) {
        auto& hist = partial[worker];
        visit_words(c, lo, hi, [&](const BitVec& w) { ++hist[w.popcount()]; });
    });
    WeightEnumerator we(c.n);
    for (const auto& hist : partial)
        for (uint32_t i = 0; i <= c.n; ++i) we.coeffs[i] += hist[i];
    return we;
}

CodeProfile code_profile(const BinaryCode& c, const EnumerationLimits& lim) {
    CodeProfile p;
    p.n = c.n;
    p.k = c.k;
    WeightEnumerator we = weight_distribution(c, lim);
    for (uint32_t i = 1; i <= c.n; ++i)
        if (we.coeffs[i] != 0) p.weights.push_back(i);
    p.d = p.weights.empty() ? c.n + 1 : p.weights.front();
    p.has_all_ones = !p.weights.empty() && p.weights.back() == c.n;
    if (c.k == c.n) {
        p.d_dual = c.n + 1;  // dual is the zero code
    } else {
        WeightEnumerator dual = macwilliams_transform(we, c.k);
        p.d_dual = c.n + 1;
        for (uint32_t i = 1; i <= c.n; ++i)
            if (dual.coeffs[i] != 0) {
                p.d_dual = i;
                break;
            }
    }
    return p;
}

std::vector<BitVec> codewords_of_weight(const BinaryCode& c, uint32_t w,
                                        const EnumerationLimits& lim) {
    if (w > c.n) throw std::invalid_argument("codewords_of_weight: w exceeds n");
    check_budget(c.k, lim);
    uint64_t total = uint64_t(1) << c.k;
    unsigned t = resolve_threads(lim.threads);
    std::vector<std::vector<BitVec>> partial(t);
    parallel_chunks(0, total, t, [&](unsigned worker, uint64_t lo, uint64_t hi) {
        auto& out = partial[worker];
        visit_words(c, lo, hi, [&](const BitVec& word) {
            if (word.popcount() == w) out.push_back(word);
        });
    });
    std::vector<BitVec> all;
    for (auto& part : partial)
        for (auto& w_ : part) all.push_back(std::move(w_));
    std::sort(all.begin(), all.end(), [](const BitVec& a, const BitVec& b) { return a.lex_less(b); });
    return all;
}

}  // namespace amtk
