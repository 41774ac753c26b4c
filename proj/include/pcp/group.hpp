#pragma once

#include <string>

#include "pcp/nadic.hpp"

namespace pcp {

// Element (r, k) of G = Q_n x_delta Z, with delta_k(r) = r / n^k.
// r ranges over all of Q_n (the inverse formula escapes [0,1]); only the
// partial action constrains domains.
struct GElem {
    NAdic r;
    long k = 0;

    static GElem identity(int base) { return GElem{NAdic::zero(base), 0}; }
    int base() const { return r.base(); }

    bool operator==(const GElem& o) const { return k == o.k && r == o.r; }
    // Deterministic term order: lexicographic on (k, r).
    bool operator<(const GElem& o) const {
        if (k != o.k) return k < o.k;
        return r < o.r;
    }

    std::string str() const { return "(" + r.str() + "," + std::to_string(k) + ")"; }
};

// delta_j(r) = r / n^j
inline NAdic g_delta(long j, const NAdic& r) { return r.mul_pow(-j); }

// (s,j)(r,k) = (r/n^j + s, j+k)
inline GElem g_mul(const GElem& a, const GElem& b) {
    return GElem{g_delta(a.k, b.r) + a.r, a.k + b.k};
}

// (r,k)^{-1} = (-n^k r, -k)
inline GElem g_inv(const GElem& a) { return GElem{-a.r.mul_pow(a.k), -a.k}; }

// Element (g, p) of H = G x Z.
struct HElem {
    GElem g;
    long p = 0;

    static HElem identity(int base) { return HElem{GElem::identity(base), 0}; }
    int base() const { return g.base(); }

    bool operator==(const HElem& o) const { return g == o.g && p == o.p; }
    bool operator<(const HElem& o) const {
        if (!(g == o.g)) return g < o.g;
        return p < o.p;
    }

    std::string str() const {
        return "(" + g.r.str() + "," + std::to_string(g.k) + "," + std::to_string(p) + ")";
    }
};

inline HElem h_mul(const HElem& a, const HElem& b) { return HElem{g_mul(a.g, b.g), a.p + b.p}; }
inline HElem h_inv(const HElem& a) { return HElem{g_inv(a.g), -a.p}; }

}  // namespace pcp
