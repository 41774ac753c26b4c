#include "pcp/groupoid.hpp"

#include <stdexcept>

#include "pcp/action.hpp"

namespace pcp {

GroupoidElement::GroupoidElement(Word lambda, Word mu, std::string tail)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), tail_(std::move(tail)) {
    if (lambda_.base() != mu_.base())
        throw std::invalid_argument("GroupoidElement: mixed bases");
}

std::string GroupoidElement::str() const {
    return "(" + lambda_.str() + "." + tail_ + ", " + std::to_string(k()) + ", " + mu_.str() +
           "." + tail_ + ")";
}

NAdic r_offset(const Word& lambda, const Word& mu) {
    long k = static_cast<long>(lambda.size()) - static_cast<long>(mu.size());
    return lambda.value() - mu.value().mul_pow(-k);
}

GElem cocycle(const GroupoidElement& gamma) {
    return GElem{r_offset(gamma.lambda(), gamma.mu()), gamma.k()};
}

GroupoidElement groupoid_compose(const GroupoidElement& g1, const GroupoidElement& g2) {
    const Word& mu1 = g1.mu();
    const Word& la2 = g2.lambda();
    if (mu1.is_prefix_of(la2)) {
        // mu1 . t1 = la2 . t2 forces t1 = w t2 with la2 = mu1 . w
        Word w = la2.suffix_from(mu1.size());
        return GroupoidElement(g1.lambda().concat(w), g2.mu(), g2.tail());
    }
    if (la2.is_prefix_of(mu1)) {
        Word w = mu1.suffix_from(la2.size());
        return GroupoidElement(g1.lambda(), g2.mu().concat(w), g1.tail());
    }
    throw std::domain_error("groupoid_compose: " + mu1.str() + " and " + la2.str() +
                            " are prefix-incompatible");
}

bool graph_consistency(const GroupoidElement& gamma) {
    GElem c = cocycle(gamma);
    return beta_image(c, cylinder(gamma.mu())) == cylinder(gamma.lambda());
}

YGroupoidElement::YGroupoidElement(GroupoidElement base, int i, int q, int slots)
    : base_(std::move(base)), i_(i), q_(q), slots_(slots) {
    if (slots < 1) throw std::invalid_argument("YGroupoidElement: slot count must be >= 1");
    if (i < 0 || i >= slots || q < 0 || q >= slots)
        throw std::invalid_argument("YGroupoidElement: slot index out of range");
}

HElem y_cocycle(const YGroupoidElement& gamma) {
    return HElem{cocycle(gamma.base()), static_cast<long>(gamma.q()) - gamma.i()};
}

}  // namespace pcp
