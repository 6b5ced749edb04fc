#include "cesaro/integrand.hpp"

#include <algorithm>
#include <stdexcept>

namespace cesaro {

namespace {

void need_nonneg(long v, const char* what) {
  if (v < 0)
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " +
                                std::to_string(v));
}

BigReal sin_multiple(const BigReal& theta, long n) {
  return sin(mul_ui(theta, static_cast<unsigned long>(n)));
}

}  // namespace

void validate(const IntegrandKind& kind) {
  std::visit(
      [](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CesaroReal> ||
                      std::is_same_v<T, CesaroComplex>) {
          if (k.n < 1)
            throw std::invalid_argument(
                "cesaro integrand needs n >= 1, got " + std::to_string(k.n));
        } else if constexpr (std::is_same_v<T, PowerKernel>) {
          need_nonneg(k.j, "j");
          need_nonneg(k.n, "n");
        } else if constexpr (std::is_same_v<T, BlockKernel>) {
          need_nonneg(k.k, "k");
          need_nonneg(k.n, "n");
        } else {
          need_nonneg(k.m, "m");
          need_nonneg(k.n, "n");
        }
      },
      kind);
}

std::string describe(const IntegrandKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CesaroReal>)
          return "cesaro-real(n=" + std::to_string(k.n) + ")";
        else if constexpr (std::is_same_v<T, CesaroComplex>)
          return "cesaro(n=" + std::to_string(k.n) + ")";
        else if constexpr (std::is_same_v<T, PowerKernel>)
          return "power(j=" + std::to_string(k.j) + ",n=" + std::to_string(k.n) +
                 ")";
        else if constexpr (std::is_same_v<T, BlockKernel>)
          return "block(k=" + std::to_string(k.k) + ",n=" + std::to_string(k.n) +
                 ")";
        else
          return "sines(m=" + std::to_string(k.m) + ",n=" + std::to_string(k.n) +
                 ")";
      },
      kind);
}

long oscillation_index(const IntegrandKind& kind) {
  return std::visit(
      [](const auto& k) -> long {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CesaroReal> ||
                      std::is_same_v<T, CesaroComplex>)
          return k.n + 4;
        else if constexpr (std::is_same_v<T, PowerKernel>)
          return k.n + k.j;
        else if constexpr (std::is_same_v<T, BlockKernel>)
          return k.n + k.k;
        else
          return k.m + k.n;
      },
      kind);
}

BigReal eval(const IntegrandKind& kind, const BigReal& theta, Precision p) {
  if (p < kMinPrecision)
    throw std::invalid_argument("eval precision below 53 bits: " +
                                std::to_string(p));
  validate(kind);
  const Precision q = std::max(p, theta.precision());
  BigReal t(q);
  mpfr_set(t.raw(), theta.raw(), MPFR_RNDN);

  BigReal out = std::visit(
      [&](const auto& k) -> BigReal {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CesaroReal>) {
          // All-real route, kept free of complex helpers on purpose.
          BigReal st(q), ct(q);
          sin_cos(st, ct, t);
          BigReal ec = exp(ct);
          BigReal ss(q), cs(q);
          sin_cos(ss, cs, st);
          BigReal amp = exp(ec * cs);
          BigReal osc = sin(ec * ss);
          return amp * osc * sin_multiple(t, k.n);
        } else if constexpr (std::is_same_v<T, CesaroComplex>) {
          BigComplex z{BigReal::from_long(0, q), t};
          BigComplex u = cexp(cexp(cexp(z)));
          return u.im * sin_multiple(t, k.n);
        } else if constexpr (std::is_same_v<T, PowerKernel>) {
          BigComplex z{BigReal::from_long(0, q), t};
          BigComplex e = cexp(z);
          BigComplex je{mul_ui(e.re, static_cast<unsigned long>(k.j)),
                        mul_ui(e.im, static_cast<unsigned long>(k.j))};
          return cexp(je).im * sin_multiple(t, k.n);
        } else if constexpr (std::is_same_v<T, BlockKernel>) {
          BigComplex z{BigReal::from_long(0, q), t};
          BigComplex w = cexp(cexp(z));
          BigComplex base{w.re - BigReal::from_long(1, q), w.im};
          BigComplex pw = pow_ui(base, static_cast<unsigned long>(k.k));
          BigReal kf = BigReal::from_natural(
              Natural::factorial(static_cast<unsigned long>(k.k)), q);
          return (pw.im / kf) * sin_multiple(t, k.n);
        } else {
          return sin_multiple(t, k.m) * sin_multiple(t, k.n);
        }
      },
      kind);

  BigReal r(p);
  mpfr_set(r.raw(), out.raw(), MPFR_RNDN);
  return r;
}

BigReal magnitude_bound(const IntegrandKind& kind, Precision p) {
  validate(kind);
  return std::visit(
      [&](const auto& k) -> BigReal {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CesaroReal> ||
                      std::is_same_v<T, CesaroComplex>) {
          return exp(const_e(p));
        } else if constexpr (std::is_same_v<T, PowerKernel>) {
          return pow_ui(const_e(p), static_cast<unsigned long>(k.j));
        } else if constexpr (std::is_same_v<T, BlockKernel>) {
          BigReal base = add_ui(const_e(p), 1u);
          BigReal kf = BigReal::from_natural(
              Natural::factorial(static_cast<unsigned long>(k.k)), p);
          return pow_ui(base, static_cast<unsigned long>(k.k)) / kf;
        } else {
          return BigReal::from_long(1, p);
        }
      },
      kind);
}

}  // namespace cesaro
