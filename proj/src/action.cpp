#include "pcp/action.hpp"

#include <stdexcept>

namespace pcp {

ClopenSet beta_domain(const GElem& g) {
    // x/n^k + r in [0,1]  <=>  x in [-r n^k, (1-r) n^k]
    int base = g.base();
    NAdic zero = NAdic::zero(base);
    NAdic one = NAdic::one(base);
    NAdic lo = std::max(zero, (-g.r).mul_pow(g.k));
    NAdic hi = std::min(one, (one - g.r).mul_pow(g.k));
    return ClopenSet::interval(lo, hi);
}

ClopenSet beta_range(const GElem& g) { return beta_domain(g_inv(g)); }

static NAdic beta_apply_value(const GElem& g, const NAdic& x) {
    return x.mul_pow(-g.k) + g.r;
}

ClopenSet beta_image(const GElem& g, const ClopenSet& E) {
    ClopenSet dom = E.set_intersect(beta_domain(g));
    std::vector<Interval> out;
    for (const auto& c : dom.components()) {
        out.push_back(Interval{beta_apply_value(g, c.lo), beta_apply_value(g, c.hi)});
    }
    return ClopenSet(E.base(), std::move(out));
}

ClopenSet beta_preimage(const GElem& g, const ClopenSet& E) { return beta_image(g_inv(g), E); }

Point beta_apply_point(const GElem& g, const Point& x) {
    if (!beta_domain(g).contains(x))
        throw std::domain_error("beta_apply_point: " + x.str() + " outside dom beta_" + g.str());
    NAdic v = beta_apply_value(g, x.value());
    NAdic zero = NAdic::zero(g.base());
    NAdic one = NAdic::one(g.base());
    if (v == zero || v == one) return Point(v, Side::endpoint);
    return Point(v, x.effective_side());
}

StepFunction act_pullback(const StepFunction& f, const GElem& g) {
    GElem ginv = g_inv(g);
    std::vector<StepFunction::Piece> out;
    for (const auto& p : f.pieces()) {
        ClopenSet pre = beta_image(ginv, ClopenSet(f.base(), {p.comp}));
        for (const auto& c : pre.components()) out.push_back(StepFunction::Piece{c, p.val});
    }
    return StepFunction(f.base(), std::move(out));
}

PartialMap::PartialMap(GElem g, ClopenSet domain) : g_(std::move(g)), domain_(std::move(domain)) {
    if (!beta_domain(g_).contains_set(domain_))
        throw std::invalid_argument("PartialMap: domain not contained in dom beta_" + g_.str());
}

Point PartialMap::apply(const Point& x) const {
    if (!domain_.contains(x))
        throw std::domain_error("PartialMap: " + x.str() + " outside the restricted domain");
    return beta_apply_point(g_, x);
}

PartialMap opat_compose(const PartialMap& phi, const PartialMap& psi) {
    ClopenSet reachable = phi.domain().set_intersect(psi.range());
    ClopenSet dom = psi.domain().set_intersect(beta_preimage(psi.group(), reachable));
    return PartialMap(g_mul(phi.group(), psi.group()), std::move(dom));
}

ClopenSet descending_interval(const GElem& g) {
    ClopenSet dom = beta_domain(g);
    if (g.k == 0) {
        // beta(t) = t + r descends everywhere iff r <= 0
        return g.r.sign() <= 0 ? dom : ClopenSet::empty(g.base());
    }
    // beta(t) <= t  <=>  r <= t (n^k - 1)/n^k; the cut is the fixed point.
    BigRat nk(pow_int(g.base(), static_cast<unsigned long>(g.k < 0 ? -g.k : g.k)), 1);
    if (g.k < 0) nk = 1 / nk;
    BigRat fixed = g.r.to_rational() * nk / (nk - 1);
    return g.k > 0 ? dom.cut_ge(fixed) : dom.cut_le(fixed);
}

bool descending_is_full(const GElem& g) {
    NAdic one = NAdic::one(g.base());
    if (g.r >= one) return true;  // dom and I are both empty
    if (g.k >= 0) return g.r.sign() <= 0;
    // k < 0: r <= 1 - 1/n^k = 1 - n^{|k|}
    return g.r <= one - one.mul_pow(-g.k);
}

SlotSet::SlotSet(int base, int slots) : base_(base) {
    if (slots < 1) throw std::invalid_argument("SlotSet: slot count must be >= 1");
    per_slot_.assign(static_cast<std::size_t>(slots), ClopenSet::empty(base));
}

SlotSet::SlotSet(std::vector<ClopenSet> per_slot) : base_(0), per_slot_(std::move(per_slot)) {
    if (per_slot_.empty()) throw std::invalid_argument("SlotSet: slot count must be >= 1");
    base_ = per_slot_[0].base();
    for (const auto& s : per_slot_)
        if (s.base() != base_) throw std::invalid_argument("SlotSet: mixed bases");
}

SlotSet SlotSet::full(int base, int slots) {
    SlotSet s(base, slots);
    for (int t = 0; t < slots; ++t) s.slot(t) = ClopenSet::full(base);
    return s;
}

bool SlotSet::is_empty() const {
    for (const auto& s : per_slot_)
        if (!s.is_empty()) return false;
    return true;
}

std::string SlotSet::str() const {
    std::string out;
    for (int t = 0; t < slots(); ++t) {
        if (t) out += "; ";
        out += std::to_string(t) + ": " + per_slot_[static_cast<std::size_t>(t)].str();
    }
    return out;
}

SlotSet y_beta(const HElem& h, const SlotSet& F, YBetaMode mode) {
    int k = F.slots();
    SlotSet out(F.base(), k);
    if (mode == YBetaMode::domain) {
        ClopenSet dom = beta_domain(h.g);
        for (int t = 0; t < k; ++t) {
            if (t + h.p >= 0 && t + h.p < k) out.slot(t) = dom;
        }
        return out;
    }
    for (int t = 0; t < k; ++t) {
        long dst = t + h.p;
        if (dst >= 0 && dst < k) out.slot(static_cast<int>(dst)) = beta_image(h.g, F.slot(t));
    }
    return out;
}

SlotSet y_beta_range(const HElem& h, int slots) {
    return y_beta(h, SlotSet::full(h.base(), slots), YBetaMode::image);
}

}  // namespace pcp
