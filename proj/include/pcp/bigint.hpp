#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pcp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Floor division (rounds toward -inf, unlike cpp_int's operator/).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt pow_int(BigInt base, unsigned long e) {
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline BigInt floor_rat(const BigRat& q) { return floor_div(rat_num(q), rat_den(q)); }

// "p/q" in lowest terms, "p" when integral.
inline std::string rat_string(const BigRat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

}  // namespace pcp
