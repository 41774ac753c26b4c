#pragma once

#include <vector>

#include "pcp/group.hpp"
#include "pcp/step_function.hpp"

namespace pcp {

// The partial homeomorphism beta_{(r,k)}(x) = x/n^k + r of X, defined on the
// largest clopen set it maps back into X.
ClopenSet beta_domain(const GElem& g);
ClopenSet beta_range(const GElem& g);

// Affine image of E (first intersected with dom beta_g), component-wise.
ClopenSet beta_image(const GElem& g, const ClopenSet& E);
// beta_g^{-1}(E intersect ran beta_g).
ClopenSet beta_preimage(const GElem& g, const ClopenSet& E);

// Sides travel with the point (minus -> minus, plus -> plus); the literal
// endpoint 0 acts as a plus-side point and 1 as a minus-side point, and a
// result landing on 0 or 1 renormalizes to an endpoint. Throws
// std::domain_error when x is outside dom beta_g.
Point beta_apply_point(const GElem& g, const Point& x);

// f composed with beta_g: supported in beta_g^{-1}(supp f), i.e. in dom beta_g.
StepFunction act_pullback(const StepFunction& f, const GElem& g);

// Restriction of beta_g to a clopen subset of its domain (an opat).
class PartialMap {
  public:
    PartialMap(GElem g, ClopenSet domain);

    static PartialMap full(const GElem& g) { return PartialMap(g, beta_domain(g)); }
    static PartialMap identity(int base) {
        return PartialMap(GElem::identity(base), ClopenSet::full(base));
    }

    const GElem& group() const { return g_; }
    const ClopenSet& domain() const { return domain_; }
    ClopenSet range() const { return beta_image(g_, domain_); }

    Point apply(const Point& x) const;

    bool operator==(const PartialMap& o) const { return g_ == o.g_ && domain_ == o.domain_; }

  private:
    GElem g_;
    ClopenSet domain_;
};

// phi . psi on {x in dom psi : psi(x) in dom phi}; a restriction of
// beta_{phi.g * psi.g}. The empty composite is allowed.
PartialMap opat_compose(const PartialMap& phi, const PartialMap& psi);

// Maximal clopen interval I_{(r,k)} inside dom beta_g on which beta_g(t) <= t.
// For k != 0 the cut sits at the fixed point x* = r n^k / (n^k - 1); a
// non-n-adic x* is rounded into the descending side (see ClopenSet::cut_ge).
ClopenSet descending_interval(const GElem& g);

// Closed form for descending_interval(g) == beta_domain(g):
// k >= 0 and r <= 0, or k < 0 and r <= 1 - 1/n^k; vacuously true when r >= 1.
bool descending_is_full(const GElem& g);

// Clopen subset of Y = X x S_k, one clopen set per slot.
class SlotSet {
  public:
    SlotSet(int base, int slots);
    SlotSet(std::vector<ClopenSet> per_slot);

    static SlotSet empty(int base, int slots) { return SlotSet(base, slots); }
    static SlotSet full(int base, int slots);

    int base() const { return base_; }
    int slots() const { return static_cast<int>(per_slot_.size()); }
    const ClopenSet& slot(int t) const { return per_slot_.at(static_cast<std::size_t>(t)); }
    ClopenSet& slot(int t) { return per_slot_.at(static_cast<std::size_t>(t)); }
    const std::vector<ClopenSet>& all() const { return per_slot_; }

    bool is_empty() const;
    bool operator==(const SlotSet& o) const { return base_ == o.base_ && per_slot_ == o.per_slot_; }

    std::string str() const;

  private:
    int base_;
    std::vector<ClopenSet> per_slot_;
};

enum class YBetaMode { domain, image };

// The product action beta_{(r,j,p)}(x,t) = (x/n^j + r, t+p) on Y.
// mode == domain ignores F and returns dom beta_h; mode == image carries
// slot t of F to slot t+p through beta_{(r,j)}, dropping slots leaving S_k.
SlotSet y_beta(const HElem& h, const SlotSet& F, YBetaMode mode);

// ran beta_h as a SlotSet (slot t carries ran beta_g iff t-p is a slot).
SlotSet y_beta_range(const HElem& h, int slots);

}  // namespace pcp
