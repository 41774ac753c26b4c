#pragma once

#include <functional>
#include <vector>

#include "pcp/clopen.hpp"
#include "pcp/scalar.hpp"

namespace pcp {

// Finitely-piecewise-constant function on X with Gaussian-rational values.
// Canonical form: pieces sorted, pairwise disjoint, no zero values, and
// touching pieces with equal values merged. Pieces with distinct values may
// touch (the function jumps across a doubled pair).
class StepFunction {
  public:
    struct Piece {
        Interval comp;
        Scalar val;
        bool operator==(const Piece& o) const { return comp == o.comp && val == o.val; }
    };

    explicit StepFunction(int base) : base_(base) {}
    StepFunction(int base, std::vector<Piece> pieces);

    static StepFunction zero(int base) { return StepFunction(base); }
    static StepFunction indicator(const ClopenSet& s);
    static StepFunction constant(int base, const Scalar& v);

    int base() const { return base_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    ClopenSet support() const;
    Scalar eval(const Point& p) const;

    StepFunction add(const StepFunction& o) const;
    StepFunction mul(const StepFunction& o) const;
    StepFunction conjugate() const;
    StepFunction scale(const Scalar& c) const;
    // Restriction to a clopen set (multiplication by its indicator).
    StepFunction restrict(const ClopenSet& s) const;

    bool operator==(const StepFunction& o) const { return base_ == o.base_ && pieces_ == o.pieces_; }

    std::string str() const;

  private:
    int base_;
    std::vector<Piece> pieces_;

    StepFunction combine(const StepFunction& o,
                         const std::function<Scalar(const Scalar&, const Scalar&)>& op) const;
};

inline StepFunction operator+(const StepFunction& a, const StepFunction& b) { return a.add(b); }
inline StepFunction operator*(const StepFunction& a, const StepFunction& b) { return a.mul(b); }
inline StepFunction operator*(const Scalar& c, const StepFunction& f) { return f.scale(c); }

}  // namespace pcp
