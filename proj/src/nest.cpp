#include "pcp/nest.hpp"

#include <stdexcept>

namespace pcp {

GroupPredicate GroupPredicate::custom(std::optional<NAdic> r_min, KSign k_sign) {
    GroupPredicate p(Kind::custom);
    p.r_min_ = std::move(r_min);
    p.k_sign_ = k_sign;
    return p;
}

bool GroupPredicate::contains(const GElem& g) const {
    switch (kind_) {
        case Kind::uhf:
            return g.k == 0;
        case Kind::refinement_taf:
            return g.k == 0 && g.r.sign() >= 0;
        case Kind::triangular:
            return g.k > 0 || (g.k == 0 && g.r.sign() >= 0);
        case Kind::custom: {
            if (r_min_ && g.r < *r_min_) return false;
            switch (k_sign_) {
                case KSign::any: return true;
                case KSign::zero: return g.k == 0;
                case KSign::positive: return g.k > 0;
                case KSign::negative: return g.k < 0;
                case KSign::nonnegative: return g.k >= 0;
                case KSign::nonpositive: return g.k <= 0;
            }
        }
    }
    return false;
}

std::string GroupPredicate::name() const {
    switch (kind_) {
        case Kind::uhf: return "UHF";
        case Kind::refinement_taf: return "RefinementTAF";
        case Kind::triangular: return "Triangular";
        default: return "custom";
    }
}

AlgebraElement volterra_projection(Session s, const NAdic& r) {
    if (!s.is_cuntz()) throw std::invalid_argument("volterra_projection: requires a k=1 session");
    if (r.sign() <= 0 || r > NAdic::one(s.n))
        throw std::invalid_argument("volterra_projection: level must satisfy 0 < r <= 1, got " +
                                    r.str());
    StepFunction f = StepFunction::indicator(ClopenSet::interval(NAdic::zero(s.n), r));
    return AlgebraElement::monomial(s, GElem::identity(s.n), std::move(f));
}

AlgebraElement nest_generator(Session s, const GElem& g) {
    if (!s.is_cuntz()) throw std::invalid_argument("nest_generator: requires a k=1 session");
    ClopenSet image = beta_image(g, descending_interval(g));
    if (image.is_empty()) return AlgebraElement::zero(s);
    return AlgebraElement::monomial(s, g, StepFunction::indicator(image));
}

bool nest_invariant(const AlgebraElement& A, const NAdic& r) {
    Session s = A.session();
    AlgebraElement p = volterra_projection(s, r);
    AlgebraElement p_perp = AlgebraElement::identity(s) - p;
    return p_perp.mul(A).mul(p).is_zero();
}

bool bp_membership(const AlgebraElement& A, const GroupPredicate& P) {
    if (!A.session().is_cuntz())
        throw std::invalid_argument("bp_membership: requires a k=1 session");
    for (const auto& [h, f] : A.terms()) {
        if (!P.contains(h.g)) return false;
    }
    return true;
}

std::vector<GElem> group_grid(int base, const GridBounds& bounds) {
    BigInt max_num = pow_int(base, bounds.max_exp);
    // Offsets coarse-to-fine, small before large, positive before negative;
    // within each offset, k by |k| with the positive sign first. Closure
    // witnesses then come out minimal (and deterministic).
    std::vector<NAdic> offsets;
    for (unsigned e = 0; e <= bounds.max_exp; ++e) {
        for (BigInt p = 0; p <= max_num; ++p) {
            if (e > 0 && (p == 0 || p % base == 0)) continue;  // duplicate of a coarser level
            offsets.push_back(NAdic(base, p, e));
            if (p != 0) offsets.push_back(NAdic(base, -p, e));
        }
    }
    std::vector<GElem> out;
    for (const auto& r : offsets) {
        out.push_back(GElem{r, 0});
        for (long k = 1; k <= bounds.max_abs_k; ++k) {
            out.push_back(GElem{r, k});
            out.push_back(GElem{r, -k});
        }
    }
    return out;
}

RelationReport predicate_closure_check(int base, const GroupPredicate& P,
                                       const GridBounds& bounds) {
    RelationReport rep;
    rep.suite = "closure[" + P.name() + "]";
    std::vector<GElem> members;
    for (const auto& g : group_grid(base, bounds)) {
        if (P.contains(g)) members.push_back(g);
    }

    bool mul_closed = true;
    std::string mul_witness;
    for (const auto& a : members) {
        if (!mul_closed) break;
        for (const auto& b : members) {
            GElem ab = g_mul(a, b);
            if (!P.contains(ab)) {
                mul_closed = false;
                mul_witness = a.str() + " * " + b.str() + " = " + ab.str() + " not in " + P.name();
                break;
            }
        }
    }
    rep.add("mul_closed", mul_closed, mul_witness);

    bool inv_closed = true;
    std::string inv_witness;
    for (const auto& a : members) {
        GElem ai = g_inv(a);
        if (!P.contains(ai)) {
            inv_closed = false;
            inv_witness = a.str() + "^-1 = " + ai.str() + " not in " + P.name();
            break;
        }
    }
    rep.add("inv_closed", inv_closed, inv_witness);
    return rep;
}

}  // namespace pcp
