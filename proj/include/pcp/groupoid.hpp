#pragma once

#include <string>

#include "pcp/clopen.hpp"
#include "pcp/group.hpp"

namespace pcp {

// Triple (lambda z, |lambda|-|mu|, mu z) with a shared symbolic tail z.
// Tails are free variables: every identity used here is affine in the tail,
// so cylinder-level data (lambda, mu) determines everything checkable.
class GroupoidElement {
  public:
    GroupoidElement(Word lambda, Word mu, std::string tail = "z");

    static GroupoidElement unit(const Word& w, std::string tail = "z") {
        return GroupoidElement(w, w, std::move(tail));
    }

    const Word& lambda() const { return lambda_; }
    const Word& mu() const { return mu_; }
    const std::string& tail() const { return tail_; }
    int base() const { return lambda_.base(); }

    long k() const { return static_cast<long>(lambda_.size()) - static_cast<long>(mu_.size()); }

    bool operator==(const GroupoidElement& o) const {
        return lambda_ == o.lambda_ && mu_ == o.mu_ && tail_ == o.tail_;
    }

    std::string str() const;

  private:
    Word lambda_;
    Word mu_;
    std::string tail_;
};

// r(lambda, mu) = s(lambda) - s(mu)/n^k with k = |lambda| - |mu|.
NAdic r_offset(const Word& lambda, const Word& mu);

// c(x, k, y) = (r(lambda, mu), k); constant on the cylinder Z(lambda, mu).
GElem cocycle(const GroupoidElement& gamma);

// (x,k,y)(y,l,z) = (x,k+l,z): requires gamma1.mu and gamma2.lambda to be
// prefix-compatible; the finer tail survives. Throws std::domain_error on a
// digit clash.
GroupoidElement groupoid_compose(const GroupoidElement& g1, const GroupoidElement& g2);

// Whether beta_{c(gamma)} carries cylinder(mu) onto cylinder(lambda) -- the
// decidable clopen restatement of beta_{(r,k)}(mu z) = lambda z for all z.
bool graph_consistency(const GroupoidElement& gamma);

// Element ((lambda z, q), q - i, (mu z, i)) of the Y-level groupoid.
class YGroupoidElement {
  public:
    YGroupoidElement(GroupoidElement base, int i, int q, int slots);

    const GroupoidElement& base() const { return base_; }
    int i() const { return i_; }
    int q() const { return q_; }
    int slots() const { return slots_; }

    bool operator==(const YGroupoidElement& o) const {
        return base_ == o.base_ && i_ == o.i_ && q_ == o.q_ && slots_ == o.slots_;
    }

  private:
    GroupoidElement base_;
    int i_;
    int q_;
    int slots_;
};

// (r, j, p) with j = |lambda| - |mu|, p = q - i and r = r(lambda, mu); the
// G-part agrees with cocycle(base).
HElem y_cocycle(const YGroupoidElement& gamma);

}  // namespace pcp
