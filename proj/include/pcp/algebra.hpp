#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcp/action.hpp"
#include "pcp/report.hpp"

namespace pcp {

// A session fixes the base n >= 2 and the slot count k >= 1 of
// Y = X x S_k. The Cuntz case is k == 1, where Y collapses to X, H-elements
// carry p == 0 and coefficients are single step functions.
struct Session {
    int n;
    int k = 1;

    bool operator==(const Session& o) const { return n == o.n && k == o.k; }
    bool is_cuntz() const { return k == 1; }
};

// Slot-indexed coefficient: one step function on X per slot of S_k.
class SlotCoeff {
  public:
    SlotCoeff(int base, int slots);
    explicit SlotCoeff(std::vector<StepFunction> slots);
    static SlotCoeff single(StepFunction f) { return SlotCoeff({std::move(f)}); }

    int base() const { return base_; }
    int slots() const { return static_cast<int>(slots_.size()); }
    const StepFunction& slot(int t) const { return slots_.at(static_cast<std::size_t>(t)); }
    StepFunction& slot(int t) { return slots_.at(static_cast<std::size_t>(t)); }

    bool is_zero() const;
    SlotSet support() const;

    SlotCoeff add(const SlotCoeff& o) const;
    SlotCoeff mul(const SlotCoeff& o) const;
    SlotCoeff conjugate() const;
    SlotCoeff scale(const Scalar& c) const;
    // (f . beta_h) slot by slot: result slot t is f[t+p] pulled back along
    // the X-part, zero when t+p leaves S_k.
    SlotCoeff pullback(const HElem& h) const;

    bool operator==(const SlotCoeff& o) const { return base_ == o.base_ && slots_ == o.slots_; }

  private:
    int base_;
    std::vector<StepFunction> slots_;
};

// Finite formal sum  sum_h f_h U^h  in the dense *-subalgebra of the partial
// crossed product, with supp f_h mandatorily inside ran beta_h. Terms are
// kept canonical: no zero coefficients, deterministic (k, r, p) key order.
class AlgebraElement {
  public:
    explicit AlgebraElement(Session s) : session_(s) {}

    static AlgebraElement zero(Session s) { return AlgebraElement(s); }
    static AlgebraElement identity(Session s);
    // Single monomial f U^h; throws std::invalid_argument unless
    // supp f is contained in ran beta_h (checked slot by slot).
    static AlgebraElement monomial(Session s, const HElem& h, SlotCoeff f);
    // X-session convenience: f U^g with g in G.
    static AlgebraElement monomial(Session s, const GElem& g, StepFunction f);
    static AlgebraElement scalar(Session s, const Scalar& c);

    Session session() const { return session_; }
    const std::map<HElem, SlotCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    AlgebraElement mul(const AlgebraElement& o) const;
    AlgebraElement adjoint() const;
    AlgebraElement add(const AlgebraElement& o) const;
    AlgebraElement scale(const Scalar& c) const;

    bool operator==(const AlgebraElement& o) const {
        return session_ == o.session_ && terms_ == o.terms_;
    }

    // Every term satisfies supp f_h <= ran beta_h; ops preserve this, the
    // test suites re-check it after each product and adjoint.
    bool coefficient_invariant_holds() const;

  private:
    Session session_;
    std::map<HElem, SlotCoeff> terms_;

    void add_term(const HElem& h, const SlotCoeff& f);
    static void check_same_session(const AlgebraElement& a, const AlgebraElement& b);
};

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return a.mul(b);
}
inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return a.add(b);
}
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return a.add(b.scale(Scalar(BigRat(-1))));
}

// c1 A + c2 B
AlgebraElement elem_linear(const Scalar& c1, const AlgebraElement& A, const Scalar& c2,
                           const AlgebraElement& B);

// S_i = chi_{[(i-1)/n, i/n]} U^{((i-1)/n, 1)}, 1 <= i <= n. Cuntz sessions only.
AlgebraElement cuntz_generator(Session s, int i);

// S(phi) = chi_{ran phi} U^{phi.g}; S(phi . psi) = S(phi) S(psi).
AlgebraElement s_of_opat(Session s, const PartialMap& phi);

// chi_{ran beta_h} U^h, the substitute unit for U^h.
AlgebraElement substitute_unit(Session s, const HElem& h);
AlgebraElement substitute_unit(Session s, const GElem& g);

// Generator family of the k-vertex, n-loop graph presentation:
// edges T_1..T_n and R_1..R_{k-1}, vertex projections P_{v_1}..P_{v_k}.
// With k == 1 the family degenerates to the Cuntz generators (no R's).
struct MatrixGenerators {
    std::vector<AlgebraElement> T;  // size n
    std::vector<AlgebraElement> R;  // size k-1
    std::vector<AlgebraElement> P;  // size k
};
MatrixGenerators matrix_generators(Session s);

enum class RelationKind { cuntz, cuntz_krieger };

// kind == cuntz:  S_i* S_j = delta_ij I and sum_i S_i S_i* = I.
// kind == cuntz_krieger: for the k-vertex n-loop graph, s_e* s_e = P_source(e),
// sum_{range(e)=v} s_e s_e* = P_v, vertex projections orthogonal, sum P_v = I.
// All checks are exact canonical-form equalities; failures are reported.
RelationReport verify_relations(Session s, RelationKind kind);

// Canonical expression-syntax form, e.g. "chi[0,1] U(0,0)"; "0" for zero.
std::string to_text(const AlgebraElement& a);

}  // namespace pcp
