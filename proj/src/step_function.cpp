#include "pcp/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcp {

StepFunction::StepFunction(int base, std::vector<Piece> pieces) : base_(base) {
    NAdic zero = NAdic::zero(base);
    NAdic one = NAdic::one(base);
    std::vector<Piece> kept;
    for (auto& p : pieces) {
        if (p.comp.lo.base() != base || p.comp.hi.base() != base)
            throw std::invalid_argument("StepFunction: piece base mismatch");
        if (p.comp.lo < zero || p.comp.hi > one)
            throw std::invalid_argument("StepFunction: piece outside [0,1]");
        if (p.comp.lo >= p.comp.hi || p.val.is_zero()) continue;
        kept.push_back(std::move(p));
    }
    std::sort(kept.begin(), kept.end(),
              [](const Piece& a, const Piece& b) { return a.comp.lo < b.comp.lo; });
    for (std::size_t i = 1; i < kept.size(); ++i) {
        if (kept[i].comp.lo < kept[i - 1].comp.hi)
            throw std::invalid_argument("StepFunction: overlapping pieces");
    }
    for (auto& p : kept) {
        if (!pieces_.empty() && pieces_.back().comp.hi == p.comp.lo && pieces_.back().val == p.val) {
            pieces_.back().comp.hi = p.comp.hi;
        } else {
            pieces_.push_back(std::move(p));
        }
    }
}

StepFunction StepFunction::indicator(const ClopenSet& s) {
    std::vector<Piece> ps;
    for (const auto& c : s.components()) ps.push_back(Piece{c, Scalar::one()});
    return StepFunction(s.base(), std::move(ps));
}

StepFunction StepFunction::constant(int base, const Scalar& v) {
    return indicator(ClopenSet::full(base)).scale(v);
}

ClopenSet StepFunction::support() const {
    std::vector<Interval> comps;
    for (const auto& p : pieces_) comps.push_back(p.comp);
    return ClopenSet(base_, std::move(comps));
}

Scalar StepFunction::eval(const Point& pt) const {
    Side s = pt.effective_side();
    for (const auto& p : pieces_) {
        bool above = pt.value() > p.comp.lo || (pt.value() == p.comp.lo && s == Side::plus);
        bool below = pt.value() < p.comp.hi || (pt.value() == p.comp.hi && s == Side::minus);
        if (above && below) return p.val;
    }
    return Scalar::zero();
}

StepFunction StepFunction::combine(const StepFunction& o,
                                   const std::function<Scalar(const Scalar&, const Scalar&)>& op) const {
    if (base_ != o.base_) throw std::invalid_argument("StepFunction: mixed bases");
    // Refine both piece lists against the union of all endpoints, then apply
    // op on each elementary interval (value 0 off-support).
    std::vector<NAdic> cuts;
    for (const auto& p : pieces_) {
        cuts.push_back(p.comp.lo);
        cuts.push_back(p.comp.hi);
    }
    for (const auto& p : o.pieces_) {
        cuts.push_back(p.comp.lo);
        cuts.push_back(p.comp.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto value_on = [](const StepFunction& f, const NAdic& lo, const NAdic& hi) {
        for (const auto& p : f.pieces_) {
            if (p.comp.lo <= lo && hi <= p.comp.hi) return p.val;
        }
        return Scalar::zero();
    };

    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Scalar v = op(value_on(*this, cuts[i], cuts[i + 1]), value_on(o, cuts[i], cuts[i + 1]));
        if (!v.is_zero()) out.push_back(Piece{Interval{cuts[i], cuts[i + 1]}, v});
    }
    return StepFunction(base_, std::move(out));
}

StepFunction StepFunction::add(const StepFunction& o) const {
    return combine(o, [](const Scalar& a, const Scalar& b) { return a + b; });
}

StepFunction StepFunction::mul(const StepFunction& o) const {
    return combine(o, [](const Scalar& a, const Scalar& b) { return a * b; });
}

StepFunction StepFunction::conjugate() const {
    std::vector<Piece> ps;
    for (const auto& p : pieces_) ps.push_back(Piece{p.comp, p.val.conj()});
    return StepFunction(base_, std::move(ps));
}

StepFunction StepFunction::scale(const Scalar& c) const {
    std::vector<Piece> ps;
    for (const auto& p : pieces_) ps.push_back(Piece{p.comp, c * p.val});
    return StepFunction(base_, std::move(ps));
}

StepFunction StepFunction::restrict(const ClopenSet& s) const {
    return mul(indicator(s));
}

std::string StepFunction::str() const {
    if (pieces_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) out += " + ";
        out += pieces_[i].val.str() + "*chi(" + pieces_[i].comp.lo.str() + "," +
               pieces_[i].comp.hi.str() + ")";
    }
    return out;
}

}  // namespace pcp
