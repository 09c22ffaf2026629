#ifndef AMTK_BITVEC_HPP
#define AMTK_BITVEC_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace amtk {

// Fixed-length bit vector backed by 64-bit words. Bit i is coordinate i+1
// of the ground set {1..n}; serialized form writes bit 0 first.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_mask(uint32_t n, uint64_t mask) {
        if (n > 64) throw std::invalid_argument("from_mask: n > 64");
        BitVec v(n);
        if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("from_mask: mask exceeds length");
        if (n > 0) v.w_[0] = mask;
        return v;
    }

    uint32_t size() const { return n_; }

    bool get(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(uint32_t i, bool v = true) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    BitVec& operator^=(const BitVec& o) {
        for (size_t j = 0; j < w_.size(); ++j) w_[j] ^= o.w_[j];
        return *this;
    }

    uint32_t popcount() const {
        uint32_t c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    bool is_subset_of(const BitVec& o) const {
        for (size_t j = 0; j < w_.size(); ++j)
            if (w_[j] & ~o.w_[j]) return false;
        return true;
    }

    // Low 64 bits as a mask; only valid when n <= 64.
    uint64_t low_mask() const { return w_.empty() ? 0 : w_[0]; }

    std::vector<uint32_t> support() const {
        std::vector<uint32_t> s;
        for (size_t j = 0; j < w_.size(); ++j) {
            uint64_t x = w_[j];
            while (x) {
                s.push_back(uint32_t(j * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return s;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (uint32_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) = default;

    // Order of the '0'/'1' strings: first differing coordinate decides, 0 < 1.
    bool lex_less(const BitVec& o) const {
        for (size_t j = 0; j < w_.size(); ++j) {
            uint64_t d = w_[j] ^ o.w_[j];
            if (d) {
                uint64_t bit = d & -d;
                return (o.w_[j] & bit) != 0;
            }
        }
        return false;
    }

   private:
    uint32_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace amtk

#endif
