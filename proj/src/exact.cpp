#include "amtk/exact.hpp"

#include <array>

namespace amtk {

namespace {

constexpr uint32_t kMaxN = 64;

std::array<std::array<uint64_t, kMaxN + 1>, kMaxN + 1> build_pascal() {
    std::array<std::array<uint64_t, kMaxN + 1>, kMaxN + 1> t{};
    for (uint32_t n = 0; n <= kMaxN; ++n) {
        t[n][0] = 1;
        for (uint32_t k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
}

}  // namespace

uint64_t small_binomial(uint32_t n, uint32_t k) {
    static const auto table = build_pascal();
    if (n > kMaxN) throw std::invalid_argument("small_binomial: n > 64");
    if (k > n) return 0;
    return table[n][k];
}

}  // namespace amtk
