#pragma once

#include <vector>

#include "pcp/nadic.hpp"

namespace pcp {

// Component (lo, hi) with n-adic endpoints 0 <= lo < hi <= 1, denoting the
// clopen interval [lo^+, hi^-] of X (lo = 0 from the literal endpoint 0,
// hi = 1 up to the literal endpoint 1).
struct Interval {
    NAdic lo;
    NAdic hi;

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
    NAdic width() const { return hi - lo; }
};

// Canonical finite union of components: sorted, pairwise disjoint and
// strictly separated (touching components merge, since nothing of X lies
// between hi^- and hi^+). The empty list is the empty set; (0,1) is X.
class ClopenSet {
  public:
    explicit ClopenSet(int base) : base_(base) {}
    ClopenSet(int base, std::vector<Interval> comps);

    static ClopenSet empty(int base) { return ClopenSet(base); }
    static ClopenSet full(int base);
    // Degenerate input (a >= b) yields the empty set.
    static ClopenSet interval(const NAdic& a, const NAdic& b);

    int base() const { return base_; }
    const std::vector<Interval>& components() const { return comps_; }
    bool is_empty() const { return comps_.empty(); }
    bool is_full() const;

    bool contains(const Point& p) const;
    bool contains_set(const ClopenSet& other) const;

    ClopenSet set_union(const ClopenSet& o) const;
    ClopenSet set_intersect(const ClopenSet& o) const;
    ClopenSet set_minus(const ClopenSet& o) const;
    ClopenSet set_complement() const;

    // {t in this : t >= cut} rsp. {t <= cut}, as a clopen set. An n-adic cut
    // lands exactly on a doubled pair (the plus point starts / the minus
    // point ends the result); a non-n-adic cut in the interior of a
    // component is rounded to the coarsest n-adic strictly inside the gap.
    ClopenSet cut_ge(const BigRat& cut) const;
    ClopenSet cut_le(const BigRat& cut) const;

    BigRat measure() const;

    bool operator==(const ClopenSet& o) const { return base_ == o.base_ && comps_ == o.comps_; }

    std::string str() const;

  private:
    int base_;
    std::vector<Interval> comps_;

    static void check_same_base(const ClopenSet& a, const ClopenSet& b);
};

inline ClopenSet operator|(const ClopenSet& a, const ClopenSet& b) { return a.set_union(b); }
inline ClopenSet operator&(const ClopenSet& a, const ClopenSet& b) { return a.set_intersect(b); }
inline ClopenSet operator-(const ClopenSet& a, const ClopenSet& b) { return a.set_minus(b); }
inline ClopenSet operator~(const ClopenSet& a) { return a.set_complement(); }

// Cylinder of a digit word: the clopen set of points with that prefix,
// component (s(w), s(w) + n^-|w|); the empty word gives X.
ClopenSet cylinder(const Word& w);

// Coarsest n-adic strictly between lo and hi: minimal exponent, then the
// smallest such numerator. Precondition: lo < hi.
NAdic coarsest_nadic_between(int base, const BigRat& lo, const BigRat& hi);

}  // namespace pcp
