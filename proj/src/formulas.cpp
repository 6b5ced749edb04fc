#include "cesaro/formulas.hpp"

#include <stdexcept>

namespace cesaro {

namespace {

BigReal natural_at(const Natural& v, Precision p) {
  return BigReal::from_natural(v, p);
}

// rhs and residual bookkeeping shared by the identity checks.
IdentityResidual finish(const QuadratureResult& qr, BigReal rhs,
                        const PrecisionPlan& plan) {
  IdentityResidual r;
  r.lhs = qr.value;
  r.rhs = std::move(rhs);
  r.abs_residual = abs(r.lhs - r.rhs);
  r.tolerance = mul_ui(plan.target_abs_error, 2);
  r.pass = r.abs_residual <= r.tolerance;
  r.nodes_used = qr.nodes_used;
  r.working_bits = qr.working_bits;
  return r;
}

}  // namespace

BellCesaroResult bell_cesaro(long n, long guard_bits, bool use_real_form) {
  PrecisionPlan plan = plan_for_bell(n, guard_bits);
  IntegrandKind kind;
  if (use_real_form)
    kind = CesaroReal{n};
  else
    kind = CesaroComplex{n};
  QuadratureResult qr = integrate(kind, plan);

  const Precision p = plan.working_bits;
  BigReal factor =
      mul_ui(natural_at(Natural::factorial(static_cast<unsigned long>(n)), p),
             2) /
      (const_pi(p) * const_e(p));
  BellCesaroResult out;
  out.estimate = qr.value * factor;
  out.error_estimate = qr.error_estimate * factor;
  out.nodes_used = qr.nodes_used;
  out.working_bits = p;
  mpz_class z = out.estimate.round_to_mpz();
  if (z < 0) z = 0;
  out.rounded = Natural(z);
  BigReal gap = abs(out.estimate - natural_at(out.rounded, p));
  out.certified =
      qr.converged && gap < BigReal::from_double(0.25, kMinPrecision);
  return out;
}

UncorrectedDetail bell_cesaro_uncorrected_detail(long n) {
  PrecisionPlan plan = plan_for_bell(n);
  const Precision p = plan.working_bits;
  // The per-n budget pins B_n to 1/4, which scales here to a sloppy 1/(4 n!).
  // Tighten so the uncorrected value itself is good to ~1e-8 absolute and the
  // n = 1 coincidence with B_1 is visible at 1e-6.
  BigReal alt = div_ui(const_pi(p) * const_e(p), 2) *
                BigReal::from_double(1e-8, kMinPrecision);
  if (alt < plan.target_abs_error) plan.target_abs_error = alt;

  QuadratureResult qr = integrate(CesaroComplex{n}, plan);
  BigReal factor =
      BigReal::from_long(2, p) / (const_pi(p) * const_e(p));
  UncorrectedDetail out;
  out.value = qr.value * factor;
  out.error_estimate = qr.error_estimate * factor;
  out.nodes_used = qr.nodes_used;
  out.working_bits = p;
  return out;
}

BigReal bell_cesaro_uncorrected(long n) {
  return bell_cesaro_uncorrected_detail(n).value;
}

IdentityResidual eq3_residual(long j, long n, Precision p) {
  if (j < 0 || n < 1)
    throw std::invalid_argument("eq3 needs j >= 0 and n >= 1");
  IntegrandKind kind = PowerKernel{j, n};
  PrecisionPlan plan = plan_for_identity(kind, p);
  QuadratureResult qr = integrate(kind, plan);
  const Precision wb = plan.working_bits;
  BigReal rhs = natural_at(Natural::pow(static_cast<unsigned long>(j),
                                        static_cast<unsigned long>(n)),
                           wb) *
                const_pi(wb) /
                mul_ui(natural_at(Natural::factorial(
                                      static_cast<unsigned long>(n)),
                                  wb),
                       2);
  return finish(qr, std::move(rhs), plan);
}

IdentityResidual eq4_residual(long k, long n, Precision p) {
  if (k < 0 || n < 1)
    throw std::invalid_argument("eq4 needs k >= 0 and n >= 1");
  IntegrandKind kind = BlockKernel{k, n};
  PrecisionPlan plan = plan_for_identity(kind, p);
  QuadratureResult qr = integrate(kind, plan);
  const Precision wb = plan.working_bits;
  Natural snk =
      k <= n ? stirling_row(n).entries[static_cast<size_t>(k)] : Natural();
  BigReal rhs = natural_at(snk, wb) * const_pi(wb) /
                mul_ui(natural_at(Natural::factorial(
                                      static_cast<unsigned long>(n)),
                                  wb),
                       2);
  return finish(qr, std::move(rhs), plan);
}

IdentityResidual orthogonality_check(long m, long n, Precision p) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("orthogonality needs m, n >= 0");
  IntegrandKind kind = SineProduct{m, n};
  PrecisionPlan plan = plan_for_identity(kind, p);
  QuadratureResult qr = integrate(kind, plan);
  const Precision wb = plan.working_bits;
  BigReal rhs = (m == n && m >= 1) ? div_ui(const_pi(wb), 2)
                                   : BigReal::from_long(0, wb);
  return finish(qr, std::move(rhs), plan);
}

DobinskiResult bell_dobinski(long n, const BigReal& rel_tol, Precision p) {
  if (n < 0) throw std::invalid_argument("dobinski needs n >= 0");
  if (rel_tol.is_nan() || rel_tol.sign() <= 0)
    throw std::invalid_argument("dobinski needs rel_tol > 0");
  const Precision wb = std::max(p, kMinPrecision);

  auto term = [&](long k) {
    return natural_at(Natural::pow(static_cast<unsigned long>(k),
                                   static_cast<unsigned long>(n)),
                      wb) /
           natural_at(Natural::factorial(static_cast<unsigned long>(k)), wb);
  };

  const long tail_start = std::max<long>(2 * n, 4);
  BigReal partial = BigReal::from_long(0, wb);
  long k = 0;
  while (true) {
    partial += term(k);
    if (k >= tail_start) {
      // For k >= max(2n, 4): t_{k+1}/t_k = (1+1/k)^n/(k+1) <= e^{1/2}/(k+1)
      // <= 1/2, so the tail past K is at most 2 t_{K+1}.
      BigReal tail_bound = mul_ui(term(k + 1), 2);
      if (tail_bound < rel_tol * partial) break;
    }
    ++k;
    if (k > 1000000) throw InternalError("dobinski failed to truncate");
  }

  DobinskiResult out;
  out.estimate = partial / const_e(wb);
  out.terms_used = k + 1;
  return out;
}

}  // namespace cesaro
