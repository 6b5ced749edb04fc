#pragma once

#include <mpfr.h>

#include <span>
#include <string>

#include "cesaro/natural.hpp"

namespace cesaro {

using Precision = mpfr_prec_t;

// Precisions below IEEE double are not supported.
inline constexpr Precision kMinPrecision = 53;

// Extended-precision binary floating-point value. The precision is fixed at
// construction; binary operations between two values round to the wider of
// the two operand precisions. Rounding is to-nearest everywhere, so basic
// arithmetic has relative error <= 2^(1-p) and the elementary functions stay
// well inside the 4-ulp contract.
class BigReal {
 public:
  BigReal() { mpfr_init2(v_, kMinPrecision); }  // NaN
  explicit BigReal(Precision bits) {
    check_precision(bits);
    mpfr_init2(v_, bits);
  }
  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  static BigReal from_double(double v, Precision bits) {
    BigReal r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
  }
  static BigReal from_long(long v, Precision bits) {
    BigReal r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
  }
  static BigReal from_mpz(const mpz_class& v, Precision bits) {
    BigReal r(bits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static BigReal from_natural(const Natural& v, Precision bits) {
    return from_mpz(v.mpz(), bits);
  }
  // Parses a decimal string; throws std::invalid_argument on malformed input.
  static BigReal from_string(const std::string& s, Precision bits);
  // 2^e, exact.
  static BigReal pow2(long e, Precision bits) {
    BigReal r(bits);
    mpfr_set_ui_2exp(r.v_, 1u, e, MPFR_RNDN);
    return r;
  }

  Precision precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Exponent e with |value| in [2^(e-1), 2^e); value must be nonzero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  // Nearest integer (ties away from zero per mpfr_round).
  mpz_class round_to_mpz() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(common(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(common(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(common(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(common(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigReal operator-() const {
    BigReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigReal& operator+=(const BigReal& o) {
    *this = *this + o;
    return *this;
  }
  BigReal& operator-=(const BigReal& o) {
    *this = *this - o;
    return *this;
  }
  BigReal& operator*=(const BigReal& o) {
    *this = *this * o;
    return *this;
  }

  friend BigReal mul_ui(const BigReal& a, unsigned long u) {
    BigReal r(a.precision());
    mpfr_mul_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend BigReal div_ui(const BigReal& a, unsigned long u) {
    BigReal r(a.precision());
    mpfr_div_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend BigReal add_ui(const BigReal& a, unsigned long u) {
    BigReal r(a.precision());
    mpfr_add_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  // value * 2^e, exact.
  friend BigReal ldexp2(const BigReal& a, long e) {
    BigReal r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  friend BigReal abs(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal sqrt(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal exp(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal sin(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal cos(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  // s = sin(a), c = cos(a) in one reduction.
  friend void sin_cos(BigReal& s, BigReal& c, const BigReal& a) {
    mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
  }
  friend BigReal pow_ui(const BigReal& a, unsigned long k) {
    BigReal r(a.precision());
    mpfr_pow_ui(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigReal& a, const BigReal& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) {
    return mpfr_greater_p(a.v_, b.v_) != 0;
  }
  friend bool operator>=(const BigReal& a, const BigReal& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static void check_precision(Precision bits);
  static Precision common(const BigReal& a, const BigReal& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }

  mpfr_t v_;
};

// pi to relative error <= 2^(1-bits).
BigReal const_pi(Precision bits);

// e = exp(1) to relative error <= 2^(1-bits).
BigReal const_e(Precision bits);

// Scientific-notation decimal rendering with the given number of significant
// digits, correctly rounded.
std::string to_decimal_string(const BigReal& x, int significant_digits);

}  // namespace cesaro
