#include "pcp/clopen.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcp {

ClopenSet::ClopenSet(int base, std::vector<Interval> comps) : base_(base) {
    NAdic zero = NAdic::zero(base);
    NAdic one = NAdic::one(base);
    std::vector<Interval> kept;
    for (auto& c : comps) {
        if (c.lo.base() != base || c.hi.base() != base)
            throw std::invalid_argument("ClopenSet: component base mismatch");
        if (c.lo < zero || c.hi > one) throw std::invalid_argument("ClopenSet: component outside [0,1]");
        if (c.lo >= c.hi) continue;  // degenerate = empty
        kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (auto& c : kept) {
        if (!comps_.empty() && c.lo <= comps_.back().hi) {
            // overlap or touch: merge
            if (c.hi > comps_.back().hi) comps_.back().hi = c.hi;
        } else {
            comps_.push_back(std::move(c));
        }
    }
}

ClopenSet ClopenSet::full(int base) {
    return ClopenSet(base, {Interval{NAdic::zero(base), NAdic::one(base)}});
}

ClopenSet ClopenSet::interval(const NAdic& a, const NAdic& b) {
    if (a >= b) return ClopenSet(a.base());
    return ClopenSet(a.base(), {Interval{a, b}});
}

bool ClopenSet::is_full() const {
    return comps_.size() == 1 && comps_[0].lo.is_zero() && comps_[0].hi == NAdic::one(base_);
}

void ClopenSet::check_same_base(const ClopenSet& a, const ClopenSet& b) {
    if (a.base_ != b.base_) throw std::invalid_argument("ClopenSet: mixed bases");
}

bool ClopenSet::contains(const Point& p) const {
    if (p.value().base() != base_) throw std::invalid_argument("ClopenSet: point base mismatch");
    Side s = p.effective_side();
    for (const auto& c : comps_) {
        bool above = p.value() > c.lo || (p.value() == c.lo && s == Side::plus);
        bool below = p.value() < c.hi || (p.value() == c.hi && s == Side::minus);
        if (above && below) return true;
    }
    return false;
}

bool ClopenSet::contains_set(const ClopenSet& other) const {
    return other.set_minus(*this).is_empty();
}

ClopenSet ClopenSet::set_union(const ClopenSet& o) const {
    check_same_base(*this, o);
    std::vector<Interval> all = comps_;
    all.insert(all.end(), o.comps_.begin(), o.comps_.end());
    return ClopenSet(base_, std::move(all));
}

ClopenSet ClopenSet::set_intersect(const ClopenSet& o) const {
    check_same_base(*this, o);
    std::vector<Interval> out;
    auto i = comps_.begin();
    auto j = o.comps_.begin();
    while (i != comps_.end() && j != o.comps_.end()) {
        NAdic lo = std::max(i->lo, j->lo);
        NAdic hi = std::min(i->hi, j->hi);
        if (lo < hi) out.push_back(Interval{lo, hi});
        if (i->hi < j->hi)
            ++i;
        else
            ++j;
    }
    return ClopenSet(base_, std::move(out));
}

ClopenSet ClopenSet::set_complement() const {
    NAdic prev = NAdic::zero(base_);
    std::vector<Interval> out;
    for (const auto& c : comps_) {
        if (prev < c.lo) out.push_back(Interval{prev, c.lo});
        prev = c.hi;
    }
    NAdic one = NAdic::one(base_);
    if (prev < one) out.push_back(Interval{prev, one});
    return ClopenSet(base_, std::move(out));
}

ClopenSet ClopenSet::set_minus(const ClopenSet& o) const {
    check_same_base(*this, o);
    return set_intersect(o.set_complement());
}

ClopenSet ClopenSet::cut_ge(const BigRat& cut) const {
    std::vector<Interval> out;
    for (const auto& c : comps_) {
        if (c.lo.to_rational() >= cut) {
            out.push_back(c);
        } else if (c.hi.to_rational() > cut) {
            auto exact = NAdic::from_rational(base_, cut);
            NAdic lo = exact ? *exact : coarsest_nadic_between(base_, cut, c.hi.to_rational());
            if (lo < c.hi) out.push_back(Interval{lo, c.hi});
        }
    }
    return ClopenSet(base_, std::move(out));
}

ClopenSet ClopenSet::cut_le(const BigRat& cut) const {
    std::vector<Interval> out;
    for (const auto& c : comps_) {
        if (c.hi.to_rational() <= cut) {
            out.push_back(c);
        } else if (c.lo.to_rational() < cut) {
            auto exact = NAdic::from_rational(base_, cut);
            NAdic hi = exact ? *exact : coarsest_nadic_between(base_, c.lo.to_rational(), cut);
            if (c.lo < hi) out.push_back(Interval{c.lo, hi});
        }
    }
    return ClopenSet(base_, std::move(out));
}

BigRat ClopenSet::measure() const {
    BigRat m = 0;
    for (const auto& c : comps_) m += c.width().to_rational();
    return m;
}

std::string ClopenSet::str() const {
    if (comps_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += " u ";
        s += "(" + comps_[i].lo.str() + "," + comps_[i].hi.str() + ")";
    }
    return s;
}

ClopenSet cylinder(const Word& w) {
    NAdic lo = w.value();
    NAdic hi = lo + NAdic::one(w.base()).mul_pow(-static_cast<long>(w.size()));
    return ClopenSet::interval(lo, hi);
}

NAdic coarsest_nadic_between(int base, const BigRat& lo, const BigRat& hi) {
    if (lo >= hi) throw std::invalid_argument("coarsest_nadic_between: empty gap");
    BigInt scale = 1;
    for (unsigned e = 0;; ++e) {
        // smallest multiple of base^-e strictly above lo
        BigInt num = floor_rat(lo * BigRat(scale)) + 1;
        if (BigRat(num, scale) < hi) return NAdic(base, num, e);
        scale *= base;
    }
}

}  // namespace pcp
