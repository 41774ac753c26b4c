#pragma once

#include <cstdint>
#include <random>

#include "pcp/algebra.hpp"
#include "pcp/groupoid.hpp"

namespace pcp {

// Deterministic random source: mt19937_64 has a standardized sequence and
// the derived draws below avoid std::uniform_int_distribution, whose output
// is implementation-defined. Same seed => same stream on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-ish in [lo, hi] (modulo bias is irrelevant for test data).
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1) != 0; }

  private:
    std::mt19937_64 engine_;
};

// FNV-1a, used to derive independent deterministic streams per check label
// (std::hash is implementation-defined, this is not).
inline std::uint64_t stable_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Bounds for randomly generated test data.
struct GenBounds {
    long max_num = 1024;      // |numerator| of group offsets
    unsigned max_exp = 6;     // offset exponent
    long max_abs_k = 6;       // |k| of group elements
    unsigned max_depth = 4;   // clopen endpoint exponent
    std::size_t max_word = 6; // digit word length
};

NAdic random_nadic(Rng& rng, int base, const GenBounds& b);
GElem random_gelem(Rng& rng, int base, const GenBounds& b);
HElem random_helem(Rng& rng, int base, int slots, const GenBounds& b);
// Value in [0,1] at depth <= max_depth.
NAdic random_unit_nadic(Rng& rng, int base, const GenBounds& b);
// Value in [-1,1] at depth <= max_depth.
NAdic random_signed_unit_nadic(Rng& rng, int base, const GenBounds& b);
ClopenSet random_clopen(Rng& rng, int base, const GenBounds& b);
Scalar random_scalar(Rng& rng);
StepFunction random_step(Rng& rng, int base, const GenBounds& b);
Word random_word(Rng& rng, int base, std::size_t max_len);
// Group element with a nonempty domain (rejection-sampled).
GElem random_acting_gelem(Rng& rng, int base, const GenBounds& b);
PartialMap random_opat(Rng& rng, int base, const GenBounds& b);
// Random monomial f U^h with the coefficient clipped into ran beta_h; may be
// zero when the clip empties the support.
AlgebraElement random_monomial(Rng& rng, Session s, const GenBounds& b);
AlgebraElement random_element(Rng& rng, Session s, std::size_t max_terms, const GenBounds& b);
// Composable pair sharing a middle word.
std::pair<GroupoidElement, GroupoidElement> random_composable_pair(Rng& rng, int base,
                                                                   std::size_t max_len);

}  // namespace pcp
