#include "pcp/rng.hpp"

namespace pcp {

NAdic random_nadic(Rng& rng, int base, const GenBounds& b) {
    long num = rng.range(-b.max_num, b.max_num);
    unsigned exp = static_cast<unsigned>(rng.range(0, static_cast<long>(b.max_exp)));
    return NAdic(base, num, exp);
}

GElem random_gelem(Rng& rng, int base, const GenBounds& b) {
    return GElem{random_nadic(rng, base, b), rng.range(-b.max_abs_k, b.max_abs_k)};
}

HElem random_helem(Rng& rng, int base, int slots, const GenBounds& b) {
    return HElem{random_gelem(rng, base, b), rng.range(-(slots - 1), slots - 1)};
}

NAdic random_unit_nadic(Rng& rng, int base, const GenBounds& b) {
    unsigned depth = b.max_depth;
    long scale = 1;
    for (unsigned i = 0; i < depth; ++i) scale *= base;
    return NAdic(base, rng.range(0, scale), depth);
}

NAdic random_signed_unit_nadic(Rng& rng, int base, const GenBounds& b) {
    unsigned depth = b.max_depth;
    long scale = 1;
    for (unsigned i = 0; i < depth; ++i) scale *= base;
    return NAdic(base, rng.range(-scale, scale), depth);
}

ClopenSet random_clopen(Rng& rng, int base, const GenBounds& b) {
    std::vector<Interval> comps;
    long pieces = rng.range(0, 3);
    for (long i = 0; i < pieces; ++i) {
        NAdic a = random_unit_nadic(rng, base, b);
        NAdic c = random_unit_nadic(rng, base, b);
        if (c < a) std::swap(a, c);
        if (a < c) comps.push_back(Interval{a, c});
    }
    return ClopenSet(base, std::move(comps));
}

Scalar random_scalar(Rng& rng) {
    BigRat re(rng.range(-4, 4), rng.range(1, 4));
    BigRat im = rng.coin() ? BigRat(rng.range(-4, 4), rng.range(1, 4)) : BigRat(0);
    return Scalar(re, im);
}

StepFunction random_step(Rng& rng, int base, const GenBounds& b) {
    std::vector<StepFunction::Piece> pieces;
    for (const auto& comp : random_clopen(rng, base, b).components()) {
        pieces.push_back(StepFunction::Piece{comp, random_scalar(rng)});
    }
    return StepFunction(base, std::move(pieces));
}

Word random_word(Rng& rng, int base, std::size_t max_len) {
    std::size_t len = static_cast<std::size_t>(rng.range(0, static_cast<long>(max_len)));
    std::vector<int> digits;
    digits.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        digits.push_back(static_cast<int>(rng.range(0, base - 1)));
    return Word(base, std::move(digits));
}

GElem random_acting_gelem(Rng& rng, int base, const GenBounds& b) {
    // Offsets in [-1,1] keep the acceptance rate high; far-out offsets have
    // empty domains and make vacuous monomials.
    for (;;) {
        GElem g{random_signed_unit_nadic(rng, base, b), rng.range(-b.max_abs_k, b.max_abs_k)};
        if (!beta_domain(g).is_empty()) return g;
    }
}

PartialMap random_opat(Rng& rng, int base, const GenBounds& b) {
    GElem g = random_acting_gelem(rng, base, b);
    ClopenSet dom = beta_domain(g);
    if (rng.coin()) dom = dom.set_intersect(random_clopen(rng, base, b));
    return PartialMap(g, std::move(dom));
}

AlgebraElement random_monomial(Rng& rng, Session s, const GenBounds& b) {
    HElem h = s.is_cuntz() ? HElem{random_acting_gelem(rng, s.n, b), 0}
                           : random_helem(rng, s.n, s.k, b);
    SlotSet ran = y_beta_range(h, s.k);
    SlotCoeff f(s.n, s.k);
    for (int t = 0; t < s.k; ++t) {
        f.slot(t) = random_step(rng, s.n, b).restrict(ran.slot(t));
    }
    return AlgebraElement::monomial(s, h, std::move(f));
}

AlgebraElement random_element(Rng& rng, Session s, std::size_t max_terms, const GenBounds& b) {
    AlgebraElement out = AlgebraElement::zero(s);
    std::size_t terms = static_cast<std::size_t>(rng.range(0, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i) out = out + random_monomial(rng, s, b);
    return out;
}

std::pair<GroupoidElement, GroupoidElement> random_composable_pair(Rng& rng, int base,
                                                                   std::size_t max_len) {
    Word lambda1 = random_word(rng, base, max_len);
    Word mu1 = random_word(rng, base, max_len);
    Word mu2 = random_word(rng, base, max_len);
    // gamma2.lambda extends gamma1.mu (or, half the time, the reverse).
    Word ext = random_word(rng, base, max_len);
    if (rng.coin()) {
        return {GroupoidElement(lambda1, mu1, "z1"), GroupoidElement(mu1.concat(ext), mu2, "z2")};
    }
    return {GroupoidElement(lambda1, mu1.concat(ext), "z1"), GroupoidElement(mu1, mu2, "z2")};
}

}  // namespace pcp
