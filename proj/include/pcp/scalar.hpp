#pragma once

#include <string>

#include "pcp/bigint.hpp"

namespace pcp {

// Gaussian rational a + bi. All coefficient arithmetic is exact, so equality
// of algebra elements is decidable.
struct Scalar {
    BigRat re;
    BigRat im;

    Scalar() : re(0), im(0) {}
    Scalar(BigRat r) : re(std::move(r)), im(0) {}
    Scalar(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(BigRat(1)); }
    static Scalar i() { return Scalar(BigRat(0), BigRat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
    Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
    }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }

    std::string str() const {
        if (im == 0) return rat_string(re);
        std::string imag = (im == 1) ? "i" : (im == -1 ? "-i" : rat_string(im) + "i");
        if (re == 0) return imag;
        return "(" + rat_string(re) + (im > 0 ? "+" : "") + imag + ")";
    }
};

}  // namespace pcp
