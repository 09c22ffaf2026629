#include "amtk/enumerators.hpp"

namespace amtk {

Int krawtchouk(uint32_t j, uint32_t u, uint32_t n) {
    if (j > n || u > n) throw std::invalid_argument("krawtchouk: arguments out of range");
    Int s = 0;
    for (uint32_t i = 0; i <= j; ++i) {
        Int term = binomial(u, i) * binomial(n - u, j - i);
        if (i & 1)
            s -= term;
        else
            s += term;
    }
    return s;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& w, uint32_t k) {
    uint32_t n = w.n();
    if (k > n) throw std::invalid_argument("macwilliams_transform: k > n");
    Int scale = pow2(k);
    WeightEnumerator out(n);
    for (uint32_t j = 0; j <= n; ++j) {
        Int s = 0;
        for (uint32_t u = 0; u <= n; ++u) {
            if (w.coeffs[u] == 0) continue;
            s += w.coeffs[u] * krawtchouk(j, u, n);
        }
        if (!mpz_divisible_p(s.get_mpz_t(), scale.get_mpz_t()))
            throw std::invalid_argument(
                "not a valid [n,k] enumerator: transform coefficient " + std::to_string(j) +
                " is not divisible by 2^" + std::to_string(k));
        out.coeffs[j] = s / scale;
    }
    return out;
}

bool antipodal_check(const WeightEnumerator& w) {
    uint32_t n = w.n();
    for (uint32_t i = 0; i <= n / 2; ++i)
        if (w.coeffs[i] != w.coeffs[n - i]) return false;
    return true;
}

}  // namespace amtk
