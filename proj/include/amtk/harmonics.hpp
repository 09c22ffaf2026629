#ifndef AMTK_HARMONICS_HPP
#define AMTK_HARMONICS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "amtk/enumerators.hpp"
#include "amtk/exact.hpp"
#include "amtk/gf2.hpp"

namespace amtk {

// Rational-valued function on the h-subsets of {1..n} lying in the kernel of
// the down-shift operator (the sum over (h-1)-subsets of each h-subset).
// Entries are sparse (mask, value) pairs with masks ascending; coordinates
// are bitmask positions 0..n-1 for points 1..n. Construction validates the
// kernel condition exactly, so every HarmonicFunction in circulation is
// genuinely harmonic.
struct HarmonicFunction {
    uint32_t n = 0;
    uint32_t h = 0;
    std::vector<std::pair<uint64_t, Rat>> entries;

    static HarmonicFunction create(uint32_t n, uint32_t h,
                                   std::vector<std::pair<uint64_t, Rat>> entries);
};

struct HarmBudget {
    uint32_t max_n = 24;
    uint32_t max_h = 6;
};

/// Basis of the degree-h harmonic space, dimension C(n,h) - C(n,h-1)
/// (clamped at zero, which the inclusion-matrix rank forces when
/// C(n,h) < C(n,h-1)). Ordering is deterministic: elements are indexed by
/// their leading h-subset in colexicographic order.
std::vector<HarmonicFunction> harm_basis(uint32_t n, uint32_t h, const HarmBudget& budget = {});

/// Cumulative extension: sum of f over the h-subsets of the given set.
/// Zero whenever the set has fewer than h points.
Rat tilde_evaluate(const HarmonicFunction& f, uint64_t subset_mask);
Rat tilde_evaluate(const HarmonicFunction& f, const BitVec& subset);

struct HarmonicEnumerator {
    BivariatePoly w_poly;  // degree n, coefficient at y^wt accumulates f-tilde
    BivariatePoly z_poly;  // degree n-2h, with w_poly == (xy)^h z_poly
    uint32_t h = 0;
    Int code_size;
};

/// Weighted weight enumerator of C under f, together with its (xy)^h
/// cofactor. Requires f.n == c.n.
HarmonicEnumerator harmonic_weight_enumerator(const BinaryCode& c, const HarmonicFunction& f,
                                              const EnumerationLimits& lim = {});

/// Dual-side cofactor: (-1)^h (2^h / |C|) Z(x+y, x-y), in exact rationals.
///
/// The textbook transform reads (-1)^h (2^(n/2) / |C|) Z((x+y)/sqrt2, (x-y)/sqrt2).
/// Z is homogeneous of degree n-2h, so Z((x+y)/s, (x-y)/s) = s^-(n-2h) Z(x+y, x-y),
/// and the prefactor collapses to 2^(n/2) * 2^-((n-2h)/2) = 2^h: no radicals
/// survive and the whole computation stays rational.
BivariatePoly bachoc_transform(const BivariatePoly& z, uint32_t h, const Int& code_size);

}  // namespace amtk

#endif
