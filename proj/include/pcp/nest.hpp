#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcp/algebra.hpp"

namespace pcp {

// Decidable subset P of G, selecting the monomials whose polynomials span
// B(P). Named predicates cover the standard examples; custom predicates are
// sign/threshold conditions on r and k so closure checks stay exhaustive.
class GroupPredicate {
  public:
    enum class Kind { uhf, refinement_taf, triangular, custom };
    enum class KSign { any, zero, positive, negative, nonnegative, nonpositive };

    static GroupPredicate uhf() { return GroupPredicate(Kind::uhf); }
    static GroupPredicate refinement_taf() { return GroupPredicate(Kind::refinement_taf); }
    static GroupPredicate triangular() { return GroupPredicate(Kind::triangular); }
    static GroupPredicate custom(std::optional<NAdic> r_min, KSign k_sign);

    Kind kind() const { return kind_; }
    const std::optional<NAdic>& r_min() const { return r_min_; }
    KSign k_sign() const { return k_sign_; }

    bool contains(const GElem& g) const;

    std::string name() const;

  private:
    explicit GroupPredicate(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::optional<NAdic> r_min_;
    KSign k_sign_ = KSign::any;
};

// p_r = chi_{[0, r^-]} U^{(0,0)}, 0 < r <= 1; r = 1 gives the identity.
AlgebraElement volterra_projection(Session s, const NAdic& r);

// T_{(r,k)} = chi_{beta_g(I_g)} U^{(r,k)}; the zero element when I_g is empty.
AlgebraElement nest_generator(Session s, const GElem& g);

// (I - p_r) A p_r == 0, i.e. A maps ran p_r into itself.
bool nest_invariant(const AlgebraElement& A, const NAdic& r);

// Every term's group element satisfies P (polynomial part of B(P) only).
bool bp_membership(const AlgebraElement& A, const GroupPredicate& P);

// Grid bounds for exhaustive predicate/nest checks: r = p/n^e with
// |p| <= n^max_exp scaled per exponent, e <= max_exp, |k| <= max_abs_k.
struct GridBounds {
    unsigned max_exp = 4;
    long max_abs_k = 3;
};

// All grid elements of G with r = p/n^e, |p| <= n^max_exp, e <= max_exp,
// deduplicated, in deterministic coarse-to-fine order.
std::vector<GElem> group_grid(int base, const GridBounds& bounds);

// Enumerates P over the grid and reports mul-closure (so B(P) is an
// algebra) and inv-closure (so B(P) is self-adjoint), with counterexamples.
RelationReport predicate_closure_check(int base, const GroupPredicate& P, const GridBounds& bounds);

}  // namespace pcp
