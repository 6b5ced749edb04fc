#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace cesaro {

// Raised when a computation violates an internal invariant. These indicate a
// bug in this library, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Arbitrary-size nonnegative integer. All arithmetic is exact; construction
// from a signed value checks the sign.
class Natural {
 public:
  Natural() : v_(0) {}
  explicit Natural(unsigned long v) : v_(v) {}
  explicit Natural(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0)
      throw InternalError("Natural constructed from a negative value");
  }

  static Natural factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Natural(std::move(r));
  }

  static Natural binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Natural(std::move(r));
  }

  // base^exp with 0^0 == 1.
  static Natural pow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return Natural(std::move(r));
  }

  const mpz_class& mpz() const { return v_; }
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return sgn(v_) == 0; }

  // ceil(log2(value)); requires value >= 1.
  long ceil_log2() const {
    if (sgn(v_) <= 0) throw InternalError("ceil_log2 of a non-positive value");
    const long bits = static_cast<long>(mpz_sizeinbase(v_.get_mpz_t(), 2));
    const bool pow2 = mpz_popcount(v_.get_mpz_t()) == 1;
    return bits - 1 + (pow2 ? 0 : 1);
  }

  friend Natural operator+(const Natural& a, const Natural& b) {
    return Natural(mpz_class(a.v_ + b.v_));
  }
  friend Natural operator*(const Natural& a, const Natural& b) {
    return Natural(mpz_class(a.v_ * b.v_));
  }
  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Natural& a, const Natural& b) { return a.v_ != b.v_; }
  friend bool operator<(const Natural& a, const Natural& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Natural& a, const Natural& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Natural& a, const Natural& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Natural& a, const Natural& b) { return a.v_ >= b.v_; }

 private:
  mpz_class v_;
};

}  // namespace cesaro
