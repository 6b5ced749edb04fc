#include "cesaro/big_complex.hpp"

#include <stdexcept>

namespace cesaro {

BigComplex cexp(const BigComplex& z) {
  Precision p = std::max(z.re.precision(), z.im.precision());
  BigReal m = exp(z.re);
  if (m.is_inf())
    throw std::overflow_error("cexp: real part too large for exponent range");
  BigReal s(p), c(p);
  sin_cos(s, c, z.im);
  return {m * c, m * s};
}

BigComplex pow_ui(const BigComplex& z, unsigned long k) {
  Precision p = std::max(z.re.precision(), z.im.precision());
  BigComplex acc{BigReal::from_long(1, p), BigReal::from_long(0, p)};
  BigComplex base = z;
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace cesaro
