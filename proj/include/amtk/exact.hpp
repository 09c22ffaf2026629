#ifndef AMTK_EXACT_HPP
#define AMTK_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace amtk {

// Every quantity in this library is an exact integer or an exact rational.
// There is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Raised when an operation would exceed a configured enumeration budget.
class budget_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline Int binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow2(uint64_t e) {
    Int r = 1;
    r <<= e;
    return r;
}

// Exponent e with v == 2^e, if v is a positive power of two.
inline std::optional<uint64_t> exact_log2(const Int& v) {
    if (v <= 0) return std::nullopt;
    if (mpz_popcount(v.get_mpz_t()) != 1) return std::nullopt;
    return mpz_scan1(v.get_mpz_t(), 0);
}

inline std::string int_str(const Int& v) { return v.get_str(); }

// Canonical rational rendering: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// Binomial coefficients small enough for subset ranking. All C(n,k) with
// n <= 64 fit in uint64, which covers every bitmask-indexed structure here.
uint64_t small_binomial(uint32_t n, uint32_t k);

}  // namespace amtk

#endif
