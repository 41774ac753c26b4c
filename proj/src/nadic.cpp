#include "pcp/nadic.hpp"

#include <stdexcept>

namespace pcp {

NAdic::NAdic(int base, BigInt num, unsigned exp) : base_(base), num_(std::move(num)), exp_(exp) {
    if (base < 2) throw std::invalid_argument("NAdic: base must be >= 2");
    canonicalize();
}

void NAdic::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && num_ % base_ == 0) {
        num_ /= base_;
        --exp_;
    }
}

void NAdic::check_same_base(const NAdic& a, const NAdic& b) {
    if (a.base_ != b.base_)
        throw std::invalid_argument("NAdic: mixed bases " + std::to_string(a.base_) + " and " +
                                    std::to_string(b.base_));
}

std::optional<NAdic> NAdic::from_rational(int base, const BigRat& q) {
    BigInt num = rat_num(q);
    BigInt den = rat_den(q);
    unsigned exp = 0;
    while (den != 1) {
        BigInt g = boost::multiprecision::gcd(den, BigInt(base));
        if (g == 1) return std::nullopt;
        num *= base / g;
        den /= g;
        ++exp;
    }
    return NAdic(base, num, exp);
}

NAdic NAdic::operator+(const NAdic& o) const {
    check_same_base(*this, o);
    unsigned e = std::max(exp_, o.exp_);
    BigInt a = num_ * pow_int(base_, e - exp_);
    BigInt b = o.num_ * pow_int(base_, e - o.exp_);
    return NAdic(base_, a + b, e);
}

NAdic NAdic::mul_pow(long j) const {
    if (num_ == 0) return *this;
    if (j >= 0) {
        unsigned long up = static_cast<unsigned long>(j);
        unsigned long cancel = std::min<unsigned long>(up, exp_);
        return NAdic(base_, num_ * pow_int(base_, up - cancel),
                     exp_ - static_cast<unsigned>(cancel));
    }
    return NAdic(base_, num_, exp_ + static_cast<unsigned>(-j));
}

bool NAdic::operator==(const NAdic& o) const {
    check_same_base(*this, o);
    return num_ == o.num_ && exp_ == o.exp_;
}

std::strong_ordering NAdic::operator<=>(const NAdic& o) const {
    check_same_base(*this, o);
    unsigned e = std::max(exp_, o.exp_);
    BigInt a = num_ * pow_int(base_, e - exp_);
    BigInt b = o.num_ * pow_int(base_, e - o.exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string NAdic::str() const {
    std::string s = num_.str();
    if (exp_ == 1) {
        s += "/" + std::to_string(base_);
    } else if (exp_ > 1) {
        s += "/" + std::to_string(base_) + "^" + std::to_string(exp_);
    }
    return s;
}

Word::Word(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
    if (base < 2) throw std::invalid_argument("Word: base must be >= 2");
    for (int d : digits_) {
        if (d < 0 || d >= base)
            throw std::invalid_argument("Word: digit " + std::to_string(d) + " out of range for base " +
                                        std::to_string(base));
    }
}

Word Word::concat(const Word& tail) const {
    if (base_ != tail.base_) throw std::invalid_argument("Word: mixed bases in concat");
    std::vector<int> d = digits_;
    d.insert(d.end(), tail.digits_.begin(), tail.digits_.end());
    return Word(base_, std::move(d));
}

bool Word::is_prefix_of(const Word& w) const {
    if (base_ != w.base_) throw std::invalid_argument("Word: mixed bases in prefix test");
    if (size() > w.size()) return false;
    return std::equal(digits_.begin(), digits_.end(), w.digits_.begin());
}

Word Word::suffix_from(std::size_t pos) const {
    if (pos > size()) throw std::invalid_argument("Word: suffix position out of range");
    return Word(base_, std::vector<int>(digits_.begin() + static_cast<std::ptrdiff_t>(pos), digits_.end()));
}

NAdic Word::value() const {
    NAdic v = NAdic::zero(base_);
    unsigned i = 1;
    for (int d : digits_) {
        v = v + NAdic(base_, d, i);
        ++i;
    }
    return v;
}

std::string Word::str() const {
    if (digits_.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(digits_[i]);
    }
    return s;
}

Point::Point(NAdic value, Side side) : value_(std::move(value)), side_(side) {
    NAdic zero = NAdic::zero(value_.base());
    NAdic one = NAdic::one(value_.base());
    if (value_ < zero || value_ > one) throw std::invalid_argument("Point: value outside [0,1]");
    bool boundary = value_ == zero || value_ == one;
    if (boundary) {
        side_ = Side::endpoint;
    } else if (side_ == Side::endpoint) {
        throw std::invalid_argument("Point: interior value cannot carry endpoint side");
    }
}

Side Point::effective_side() const {
    if (side_ != Side::endpoint) return side_;
    return value_.is_zero() ? Side::plus : Side::minus;
}

std::string Point::str() const {
    switch (side_) {
        case Side::minus: return value_.str() + "-";
        case Side::plus: return value_.str() + "+";
        default: return value_.str();
    }
}

}  // namespace pcp
