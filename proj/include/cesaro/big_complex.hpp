#pragma once

#include "cesaro/big_real.hpp"

namespace cesaro {

// Complex value with BigReal components.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  static BigComplex zero(Precision bits) {
    return {BigReal::from_long(0, bits), BigReal::from_long(0, bits)};
  }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& a) {
    return {s * a.re, s * a.im};
  }

  friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
  friend BigReal abs2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
};

// exp(z) = exp(re) * (cos im + i sin im). Throws std::overflow_error if the
// real exponential overflows the MPFR exponent range.
BigComplex cexp(const BigComplex& z);

// z^k by binary powering.
BigComplex pow_ui(const BigComplex& z, unsigned long k);

}  // namespace cesaro
