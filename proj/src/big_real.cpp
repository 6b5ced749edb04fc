#include "cesaro/big_real.hpp"

#include <cstdio>
#include <stdexcept>

namespace cesaro {

void BigReal::check_precision(Precision bits) {
  if (bits < kMinPrecision)
    throw std::invalid_argument("precision below 53 bits: " +
                                std::to_string(bits));
}

BigReal BigReal::from_string(const std::string& s, Precision bits) {
  BigReal r(bits);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  return r;
}

BigReal const_pi(Precision bits) {
  BigReal r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigReal const_e(Precision bits) {
  BigReal r(bits);
  mpfr_set_ui(r.raw(), 1u, MPFR_RNDN);
  mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

std::string to_decimal_string(const BigReal& x, int significant_digits) {
  if (significant_digits < 1)
    throw std::invalid_argument("need at least one significant digit");
  char* buf = nullptr;
  int rc = mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, x.raw());
  if (rc < 0) throw InternalError("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace cesaro
