#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcp/bigint.hpp"

namespace pcp {

// Rational of the form num / base^exp, canonical: exp == 0 or num not
// divisible by base. The base n >= 2 is fixed per session; mixing bases in
// one operation throws std::invalid_argument.
class NAdic {
  public:
    NAdic() : base_(2), num_(0), exp_(0) {}
    NAdic(int base, BigInt num, unsigned exp = 0);

    static NAdic zero(int base) { return NAdic(base, 0); }
    static NAdic one(int base) { return NAdic(base, 1); }

    // Exact conversion from a general rational; nullopt when the reduced
    // denominator has a prime factor not dividing base.
    static std::optional<NAdic> from_rational(int base, const BigRat& q);

    int base() const { return base_; }
    const BigInt& num() const { return num_; }
    unsigned exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    NAdic operator-() const { return NAdic(base_, -num_, exp_); }
    NAdic operator+(const NAdic& o) const;
    NAdic operator-(const NAdic& o) const { return *this + (-o); }

    // Multiply by base^j, j of either sign. Exact and closed.
    NAdic mul_pow(long j) const;

    BigRat to_rational() const { return BigRat(num_, pow_int(base_, exp_)); }

    bool operator==(const NAdic& o) const;
    std::strong_ordering operator<=>(const NAdic& o) const;

    // Canonical "p/n^e" form, e.g. "3/2^2"; "p" when exp == 0, "p/n" when 1.
    std::string str() const;
    // Reduced "a/b" form for the expression syntax (4-adic 2/4 prints 1/2).
    std::string rat_str() const { return rat_string(to_rational()); }

  private:
    int base_;
    BigInt num_;
    unsigned exp_;

    void canonicalize();
    static void check_same_base(const NAdic& a, const NAdic& b);
};

// Finite digit word over {0, ..., n-1}; empty word allowed.
class Word {
  public:
    explicit Word(int base) : base_(base), digits_() {}
    Word(int base, std::vector<int> digits);

    int base() const { return base_; }
    const std::vector<int>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    Word concat(const Word& tail) const;
    bool is_prefix_of(const Word& w) const;
    // Suffix w such that *this . w == longer; precondition: prefix holds.
    Word suffix_from(std::size_t pos) const;

    // s(w) = sum_i w_i / n^i, in [0, 1).
    NAdic value() const;

    bool operator==(const Word& o) const { return base_ == o.base_ && digits_ == o.digits_; }

    std::string str() const;  // comma-free digit string, "()" when empty

  private:
    int base_;
    std::vector<int> digits_;
};

enum class Side : std::uint8_t { minus, plus, endpoint };

// A point of the doubled Cantor set X: value in [0,1], with interior n-adic
// values split into a minus/plus pair, and 0, 1 literal endpoints.
class Point {
  public:
    Point(NAdic value, Side side);

    const NAdic& value() const { return value_; }
    Side side() const { return side_; }

    // The doubled order collapses the literal endpoints: 0 compares as a
    // plus-side point and 1 as a minus-side point.
    Side effective_side() const;

    bool operator==(const Point& o) const { return value_ == o.value_ && side_ == o.side_; }

    std::string str() const;

  private:
    NAdic value_;
    Side side_;
};

}  // namespace pcp
