#ifndef AMTK_ENUMERATORS_HPP
#define AMTK_ENUMERATORS_HPP

#include <cstdint>
#include <vector>

#include "amtk/exact.hpp"

namespace amtk {

// Weight distribution A_0..A_n of a length-n code, as exact integers.
struct WeightEnumerator {
    std::vector<Int> coeffs;

    WeightEnumerator() = default;
    explicit WeightEnumerator(uint32_t n) : coeffs(n + 1, 0) {}

    uint32_t n() const { return uint32_t(coeffs.size()) - 1; }
    Int total() const {
        Int s = 0;
        for (const Int& c : coeffs) s += c;
        return s;
    }
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

// Homogeneous bivariate polynomial of fixed total degree; coeffs[i] is the
// coefficient of x^(degree-i) y^i.
struct BivariatePoly {
    uint32_t degree = 0;
    std::vector<Rat> coeffs;

    BivariatePoly() : coeffs(1, Rat(0)) {}
    explicit BivariatePoly(uint32_t deg) : degree(deg), coeffs(deg + 1, Rat(0)) {}

    bool is_zero() const {
        for (const Rat& c : coeffs)
            if (c != 0) return false;
        return true;
    }
    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
};

/// Coefficient of x^(n-j) y^j in (x+y)^(n-u) (x-y)^u, by the direct
/// alternating sum over C(u,i) C(n-u, j-i). No recurrence is used.
Int krawtchouk(uint32_t j, uint32_t u, uint32_t n);

/// Dual weight distribution of an [n,k] enumerator: expands
/// 2^-k W(x+y, x-y) in exact integers. Rejects input whose transform is not
/// divisible by 2^k, since no [n,k] code can produce it.
WeightEnumerator macwilliams_transform(const WeightEnumerator& w, uint32_t k);

/// True iff A_i = A_{n-i} for all i.
bool antipodal_check(const WeightEnumerator& w);

}  // namespace amtk

#endif
