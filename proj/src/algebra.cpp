#include "pcp/algebra.hpp"

#include <stdexcept>

namespace pcp {

SlotCoeff::SlotCoeff(int base, int slots) : base_(base) {
    if (slots < 1) throw std::invalid_argument("SlotCoeff: slot count must be >= 1");
    slots_.assign(static_cast<std::size_t>(slots), StepFunction::zero(base));
}

SlotCoeff::SlotCoeff(std::vector<StepFunction> slots) : base_(0), slots_(std::move(slots)) {
    if (slots_.empty()) throw std::invalid_argument("SlotCoeff: slot count must be >= 1");
    base_ = slots_[0].base();
    for (const auto& f : slots_)
        if (f.base() != base_) throw std::invalid_argument("SlotCoeff: mixed bases");
}

bool SlotCoeff::is_zero() const {
    for (const auto& f : slots_)
        if (!f.is_zero()) return false;
    return true;
}

SlotSet SlotCoeff::support() const {
    std::vector<ClopenSet> per;
    per.reserve(slots_.size());
    for (const auto& f : slots_) per.push_back(f.support());
    return SlotSet(std::move(per));
}

SlotCoeff SlotCoeff::add(const SlotCoeff& o) const {
    if (slots() != o.slots()) throw std::invalid_argument("SlotCoeff: slot count mismatch");
    SlotCoeff out(base_, slots());
    for (int t = 0; t < slots(); ++t) out.slot(t) = slot(t).add(o.slot(t));
    return out;
}

SlotCoeff SlotCoeff::mul(const SlotCoeff& o) const {
    if (slots() != o.slots()) throw std::invalid_argument("SlotCoeff: slot count mismatch");
    SlotCoeff out(base_, slots());
    for (int t = 0; t < slots(); ++t) out.slot(t) = slot(t).mul(o.slot(t));
    return out;
}

SlotCoeff SlotCoeff::conjugate() const {
    SlotCoeff out(base_, slots());
    for (int t = 0; t < slots(); ++t) out.slot(t) = slot(t).conjugate();
    return out;
}

SlotCoeff SlotCoeff::scale(const Scalar& c) const {
    SlotCoeff out(base_, slots());
    for (int t = 0; t < slots(); ++t) out.slot(t) = slot(t).scale(c);
    return out;
}

SlotCoeff SlotCoeff::pullback(const HElem& h) const {
    SlotCoeff out(base_, slots());
    for (int t = 0; t < slots(); ++t) {
        long src = t + h.p;
        if (src >= 0 && src < slots()) out.slot(t) = act_pullback(slot(static_cast<int>(src)), h.g);
    }
    return out;
}

AlgebraElement AlgebraElement::identity(Session s) {
    SlotCoeff one(s.n, s.k);
    for (int t = 0; t < s.k; ++t) one.slot(t) = StepFunction::indicator(ClopenSet::full(s.n));
    AlgebraElement out(s);
    out.add_term(HElem::identity(s.n), one);
    return out;
}

static bool supported_in_range(Session s, const HElem& h, const SlotCoeff& f) {
    SlotSet ran = y_beta_range(h, s.k);
    for (int t = 0; t < s.k; ++t) {
        if (!ran.slot(t).contains_set(f.slot(t).support())) return false;
    }
    return true;
}

AlgebraElement AlgebraElement::monomial(Session s, const HElem& h, SlotCoeff f) {
    if (h.base() != s.n) throw std::invalid_argument("monomial: base mismatch with session");
    if (f.slots() != s.k) throw std::invalid_argument("monomial: slot count mismatch with session");
    if (!supported_in_range(s, h, f))
        throw std::invalid_argument("monomial: coefficient not supported in ran beta_" + h.str());
    AlgebraElement out(s);
    out.add_term(h, f);
    return out;
}

AlgebraElement AlgebraElement::monomial(Session s, const GElem& g, StepFunction f) {
    if (!s.is_cuntz())
        throw std::invalid_argument("monomial: G-element form requires a k=1 session");
    return monomial(s, HElem{g, 0}, SlotCoeff::single(std::move(f)));
}

AlgebraElement AlgebraElement::scalar(Session s, const Scalar& c) {
    return identity(s).scale(c);
}

void AlgebraElement::add_term(const HElem& h, const SlotCoeff& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(h);
    if (it == terms_.end()) {
        terms_.emplace(h, f);
        return;
    }
    SlotCoeff sum = it->second.add(f);
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

void AlgebraElement::check_same_session(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.session_ == b.session_))
        throw std::invalid_argument("AlgebraElement: mixed sessions");
}

AlgebraElement AlgebraElement::mul(const AlgebraElement& o) const {
    check_same_session(*this, o);
    AlgebraElement out(session_);
    // e U^g . f U^h = e (f . beta_{g^-1}) U^{gh}
    for (const auto& [g, e] : terms_) {
        HElem ginv = h_inv(g);
        for (const auto& [h, f] : o.terms_) {
            out.add_term(h_mul(g, h), e.mul(f.pullback(ginv)));
        }
    }
    return out;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement out(session_);
    // (f U^g)* = conj(f . beta_g) U^{g^-1}
    for (const auto& [g, f] : terms_) {
        out.add_term(h_inv(g), f.pullback(g).conjugate());
    }
    return out;
}

AlgebraElement AlgebraElement::add(const AlgebraElement& o) const {
    check_same_session(*this, o);
    AlgebraElement out = *this;
    for (const auto& [h, f] : o.terms_) out.add_term(h, f);
    return out;
}

AlgebraElement AlgebraElement::scale(const Scalar& c) const {
    AlgebraElement out(session_);
    if (c.is_zero()) return out;
    for (const auto& [h, f] : terms_) out.add_term(h, f.scale(c));
    return out;
}

bool AlgebraElement::coefficient_invariant_holds() const {
    for (const auto& [h, f] : terms_) {
        if (!supported_in_range(session_, h, f)) return false;
    }
    return true;
}

AlgebraElement elem_linear(const Scalar& c1, const AlgebraElement& A, const Scalar& c2,
                           const AlgebraElement& B) {
    return A.scale(c1).add(B.scale(c2));
}

AlgebraElement cuntz_generator(Session s, int i) {
    if (!s.is_cuntz()) throw std::invalid_argument("cuntz_generator: requires a k=1 session");
    if (i < 1 || i > s.n)
        throw std::invalid_argument("cuntz_generator: index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(s.n));
    NAdic lo(s.n, i - 1, 1);
    NAdic hi(s.n, i, 1);
    StepFunction coeff = StepFunction::indicator(ClopenSet::interval(lo, hi));
    return AlgebraElement::monomial(s, GElem{lo, 1}, std::move(coeff));
}

AlgebraElement s_of_opat(Session s, const PartialMap& phi) {
    return AlgebraElement::monomial(s, phi.group(), StepFunction::indicator(phi.range()));
}

AlgebraElement substitute_unit(Session s, const HElem& h) {
    SlotSet ran = y_beta_range(h, s.k);
    SlotCoeff f(s.n, s.k);
    for (int t = 0; t < s.k; ++t) f.slot(t) = StepFunction::indicator(ran.slot(t));
    return AlgebraElement::monomial(s, h, std::move(f));
}

AlgebraElement substitute_unit(Session s, const GElem& g) {
    return substitute_unit(s, HElem{g, 0});
}

MatrixGenerators matrix_generators(Session s) {
    if (s.n < 2 || s.k < 1) throw std::invalid_argument("matrix_generators: bad session");
    MatrixGenerators out;
    for (int i = 1; i <= s.n; ++i) {
        NAdic lo(s.n, i - 1, 1);
        NAdic hi(s.n, i, 1);
        SlotCoeff f(s.n, s.k);
        f.slot(0) = StepFunction::indicator(ClopenSet::interval(lo, hi));
        long p = (i == s.n) ? 1 - s.k : 0;
        out.T.push_back(AlgebraElement::monomial(s, HElem{GElem{lo, 1}, p}, std::move(f)));
    }
    for (int i = 1; i <= s.k - 1; ++i) {
        SlotCoeff f(s.n, s.k);
        f.slot(i) = StepFunction::indicator(ClopenSet::full(s.n));
        out.R.push_back(AlgebraElement::monomial(s, HElem{GElem::identity(s.n), 1}, std::move(f)));
    }
    for (int i = 1; i <= s.k; ++i) {
        SlotCoeff f(s.n, s.k);
        f.slot(i - 1) = StepFunction::indicator(ClopenSet::full(s.n));
        out.P.push_back(
            AlgebraElement::monomial(s, HElem::identity(s.n), std::move(f)));
    }
    return out;
}

RelationReport verify_relations(Session s, RelationKind kind) {
    RelationReport rep;
    if (kind == RelationKind::cuntz) {
        rep.suite = "cuntz";
        AlgebraElement I = AlgebraElement::identity(s);
        std::vector<AlgebraElement> S;
        for (int i = 1; i <= s.n; ++i) S.push_back(cuntz_generator(s, i));
        for (int i = 1; i <= s.n; ++i) {
            for (int j = 1; j <= s.n; ++j) {
                AlgebraElement want = (i == j) ? I : AlgebraElement::zero(s);
                AlgebraElement got = S[static_cast<std::size_t>(i - 1)].adjoint().mul(
                    S[static_cast<std::size_t>(j - 1)]);
                AlgebraElement diff = got - want;
                rep.add("S*S[" + std::to_string(i) + "," + std::to_string(j) + "]", diff.is_zero(),
                        to_text(diff));
            }
        }
        AlgebraElement sum = AlgebraElement::zero(s);
        for (const auto& Si : S) sum = sum + Si.mul(Si.adjoint());
        AlgebraElement diff = sum - I;
        rep.add("sum_SS*", diff.is_zero(), to_text(diff));
        return rep;
    }

    rep.suite = "cuntz_krieger";
    AlgebraElement I = AlgebraElement::identity(s);
    MatrixGenerators gen = matrix_generators(s);
    // Edge list with source/range vertices (1-based): the n-1 self-loops
    // T_1..T_{n-1} at v_1, and the k-cycle R_1,..,R_{k-1},T_n through
    // v_1 -> v_2 -> ... -> v_k -> v_1.
    struct Edge {
        std::string name;
        const AlgebraElement* op;
        int source;
        int range;
    };
    std::vector<Edge> edges;
    for (int i = 1; i <= s.n; ++i) {
        edges.push_back(Edge{"T" + std::to_string(i), &gen.T[static_cast<std::size_t>(i - 1)],
                             i == s.n ? s.k : 1, 1});
    }
    for (int i = 1; i <= s.k - 1; ++i) {
        edges.push_back(
            Edge{"R" + std::to_string(i), &gen.R[static_cast<std::size_t>(i - 1)], i, i + 1});
    }
    for (const auto& e : edges) {
        AlgebraElement diff =
            e.op->adjoint().mul(*e.op) - gen.P[static_cast<std::size_t>(e.source - 1)];
        rep.add("CK_source[" + e.name + "]", diff.is_zero(), to_text(diff));
    }
    for (int v = 1; v <= s.k; ++v) {
        AlgebraElement sum = AlgebraElement::zero(s);
        for (const auto& e : edges) {
            if (e.range == v) sum = sum + e.op->mul(e.op->adjoint());
        }
        AlgebraElement diff = sum - gen.P[static_cast<std::size_t>(v - 1)];
        rep.add("CK_range[v" + std::to_string(v) + "]", diff.is_zero(), to_text(diff));
    }
    for (int i = 1; i <= s.k; ++i) {
        for (int j = i + 1; j <= s.k; ++j) {
            AlgebraElement prod = gen.P[static_cast<std::size_t>(i - 1)].mul(
                gen.P[static_cast<std::size_t>(j - 1)]);
            rep.add("P_orth[v" + std::to_string(i) + ",v" + std::to_string(j) + "]", prod.is_zero(),
                    to_text(prod));
        }
    }
    AlgebraElement psum = AlgebraElement::zero(s);
    for (const auto& P : gen.P) psum = psum + P;
    AlgebraElement diff = psum - I;
    rep.add("sum_P", diff.is_zero(), to_text(diff));
    return rep;
}

namespace {

// One printed fragment per step-function piece, with the sign pulled out so
// fragments join with " + " / " - ".
struct Fragment {
    int sign = 1;
    std::string body;
};

std::string scalar_prefix(const Scalar& v, int& sign) {
    sign = 1;
    if (v.im == 0) {
        BigRat a = v.re;
        if (a < 0) {
            sign = -1;
            a = -a;
        }
        if (a == 1) return "";
        return rat_string(a) + " * ";
    }
    if (v.re == 0) {
        BigRat b = v.im;
        if (b < 0) {
            sign = -1;
            b = -b;
        }
        if (b == 1) return "i * ";
        return rat_string(b) + " * i * ";
    }
    std::string re = rat_string(v.re);
    BigRat b = v.im;
    std::string op = b > 0 ? " + " : " - ";
    if (b < 0) b = -b;
    std::string im = (b == 1) ? "i" : rat_string(b) + " * i";
    return "(" + re + op + im + ") * ";
}

}  // namespace

std::string to_text(const AlgebraElement& a) {
    if (a.is_zero()) return "0";
    bool y_session = !a.session().is_cuntz();
    std::vector<Fragment> frags;
    for (const auto& [h, f] : a.terms()) {
        std::string u = "U(" + h.g.r.rat_str() + "," + std::to_string(h.g.k);
        if (y_session) u += "," + std::to_string(h.p);
        u += ")";
        for (int t = 0; t < f.slots(); ++t) {
            for (const auto& piece : f.slot(t).pieces()) {
                Fragment frag;
                std::string prefix = scalar_prefix(piece.val, frag.sign);
                frag.body = prefix + "chi[" + piece.comp.lo.rat_str() + "," +
                            piece.comp.hi.rat_str();
                if (y_session) frag.body += ";" + std::to_string(t);
                frag.body += "] " + u;
                frags.push_back(std::move(frag));
            }
        }
    }
    std::string out;
    for (std::size_t i = 0; i < frags.size(); ++i) {
        if (i == 0) {
            if (frags[i].sign < 0) out += "-";
        } else {
            out += frags[i].sign < 0 ? " - " : " + ";
        }
        out += frags[i].body;
    }
    return out;
}

}  // namespace pcp
