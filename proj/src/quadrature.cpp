#include "cesaro/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "cesaro/exact.hpp"

namespace cesaro {

namespace {

// Master node tables are built at the next multiple of 256 bits and rounded
// down to the plan precision on use, so integrate calls with nearby
// precisions share one Newton solve per node count.
Precision rule_bucket(Precision bits) {
  return ((bits + 255) / 256) * 256;
}

long next_pow2(long v) {
  long p = 1;
  while (p < v) p <<= 1;
  return p;
}

// pn = P_N(x), pnm1 = P_{N-1}(x) by the three-term recurrence; t1, t2 scratch.
void legendre_pair(mpfr_ptr pn, mpfr_ptr pnm1, mpfr_srcptr x, long N,
                   mpfr_ptr t1, mpfr_ptr t2) {
  mpfr_set(pn, x, MPFR_RNDN);
  mpfr_set_ui(pnm1, 1u, MPFR_RNDN);
  for (long j = 2; j <= N; ++j) {
    mpfr_mul(t1, x, pn, MPFR_RNDN);
    mpfr_mul_ui(t1, t1, static_cast<unsigned long>(2 * j - 1), MPFR_RNDN);
    mpfr_mul_ui(t2, pnm1, static_cast<unsigned long>(j - 1), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_div_ui(t1, t1, static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_set(pnm1, pn, MPFR_RNDN);
    mpfr_set(pn, t1, MPFR_RNDN);
  }
}

// pp = P_N'(x) = N (x P_N - P_{N-1}) / (x^2 - 1).
void legendre_deriv(mpfr_ptr pp, mpfr_srcptr x, mpfr_srcptr pn,
                    mpfr_srcptr pnm1, long N, mpfr_ptr t) {
  mpfr_mul(pp, x, pn, MPFR_RNDN);
  mpfr_sub(pp, pp, pnm1, MPFR_RNDN);
  mpfr_mul_si(pp, pp, N, MPFR_RNDN);
  mpfr_sqr(t, x, MPFR_RNDN);
  mpfr_sub_ui(t, t, 1u, MPFR_RNDN);
  mpfr_div(pp, pp, t, MPFR_RNDN);
}

GaussLegendreRule build_rule(long N, Precision pb) {
  GaussLegendreRule rule;
  rule.nodes.assign(N, BigReal(pb));
  rule.weights.assign(N, BigReal(pb));
  const long half = (N + 1) / 2;
  const double pi_d = 3.14159265358979323846;

  mpfr_t x, dx, pn, pnm1, pp, t1, t2, tol;
  mpfr_inits2(pb, x, dx, pn, pnm1, pp, t1, t2, tol,
              static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui_2exp(tol, 1u, 8 - static_cast<mpfr_exp_t>(pb), MPFR_RNDN);

  for (long i = 0; i < half; ++i) {
    double xd = std::cos(pi_d * (static_cast<double>(i) + 0.75) /
                         (static_cast<double>(N) + 0.5));
    for (int it = 0; it < 4; ++it) {
      double a = xd, b = 1.0;
      for (long j = 2; j <= N; ++j) {
        double c = ((2.0 * j - 1.0) * xd * a - (j - 1.0) * b) / j;
        b = a;
        a = c;
      }
      double ppd = N * (xd * a - b) / (xd * xd - 1.0);
      xd -= a / ppd;
    }

    mpfr_set_d(x, xd, MPFR_RNDN);
    for (int it = 0; it < 80; ++it) {
      legendre_pair(pn, pnm1, x, N, t1, t2);
      legendre_deriv(pp, x, pn, pnm1, N, t1);
      mpfr_div(dx, pn, pp, MPFR_RNDN);
      mpfr_sub(x, x, dx, MPFR_RNDN);
      mpfr_abs(dx, dx, MPFR_RNDN);
      if (mpfr_cmp(dx, tol) < 0) break;
    }

    legendre_pair(pn, pnm1, x, N, t1, t2);
    legendre_deriv(pp, x, pn, pnm1, N, t1);
    mpfr_sqr(t1, x, MPFR_RNDN);
    mpfr_ui_sub(t1, 1u, t1, MPFR_RNDN);
    mpfr_sqr(t2, pp, MPFR_RNDN);
    mpfr_mul(t1, t1, t2, MPFR_RNDN);
    mpfr_ui_div(t1, 2u, t1, MPFR_RNDN);

    long hi = N - 1 - i;
    mpfr_set(rule.nodes[hi].raw(), x, MPFR_RNDN);
    mpfr_set(rule.weights[hi].raw(), t1, MPFR_RNDN);
    mpfr_neg(x, x, MPFR_RNDN);
    mpfr_set(rule.nodes[i].raw(), x, MPFR_RNDN);
    mpfr_set(rule.weights[i].raw(), t1, MPFR_RNDN);
  }

  mpfr_clears(x, dx, pn, pnm1, pp, t1, t2, tol,
              static_cast<mpfr_ptr>(nullptr));
  return rule;
}

const GaussLegendreRule& master_rule(long N, Precision pb) {
  static std::mutex mu;
  static std::map<std::pair<long, Precision>, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, pb);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_rule(N, pb)).first;
  return it->second;
}

// Rule rounded to the working precision, so every arithmetic step of the
// estimate happens at exactly plan.working_bits.
GaussLegendreRule rule_at(long N, Precision p) {
  const GaussLegendreRule& m = master_rule(N, rule_bucket(p));
  GaussLegendreRule r;
  r.nodes.assign(N, BigReal(p));
  r.weights.assign(N, BigReal(p));
  for (long i = 0; i < N; ++i) {
    mpfr_set(r.nodes[i].raw(), m.nodes[i].raw(), MPFR_RNDN);
    mpfr_set(r.weights[i].raw(), m.weights[i].raw(), MPFR_RNDN);
  }
  return r;
}

BigReal gl_estimate(const IntegrandKind& kind, long N, Precision p) {
  GaussLegendreRule rule = rule_at(N, p);
  BigReal half_pi = div_ui(const_pi(p), 2);
  BigReal one = BigReal::from_long(1, p);
  std::vector<BigReal> terms;
  terms.reserve(static_cast<size_t>(N));
  for (long i = 0; i < N; ++i) {
    BigReal theta = (rule.nodes[static_cast<size_t>(i)] + one) * half_pi;
    terms.push_back(rule.weights[static_cast<size_t>(i)] *
                    eval(kind, theta, p));
  }
  return pairwise_sum(terms) * half_pi;
}

BigReal trapezoid_estimate(const IntegrandKind& kind, long M, Precision p) {
  BigReal pi = const_pi(p);
  std::vector<BigReal> terms;
  terms.reserve(static_cast<size_t>(M) + 1);
  for (long i = 0; i <= M; ++i) {
    BigReal theta = div_ui(mul_ui(pi, static_cast<unsigned long>(i)),
                           static_cast<unsigned long>(M));
    BigReal v = eval(kind, theta, p);
    if (i == 0 || i == M) v = div_ui(v, 2);
    terms.push_back(std::move(v));
  }
  return pairwise_sum(terms) * div_ui(pi, static_cast<unsigned long>(M));
}

void check_plan(const PrecisionPlan& plan) {
  if (plan.target_abs_error.is_nan() || plan.target_abs_error.sign() <= 0)
    throw std::invalid_argument("plan needs a positive target_abs_error");
  if (plan.initial_nodes < 1)
    throw std::invalid_argument("plan needs initial_nodes >= 1");
  if (plan.max_doublings < 1)
    throw std::invalid_argument("plan needs max_doublings >= 1");
}

template <typename Estimator>
QuadratureResult run_doubling(const IntegrandKind& kind,
                              const PrecisionPlan& plan, long start_nodes,
                              Estimator estimate) {
  validate(kind);
  check_plan(plan);
  const Precision p = std::max(plan.working_bits, kMinPrecision);
  const BigReal half_target = div_ui(plan.target_abs_error, 2);

  QuadratureResult qr;
  qr.working_bits = p;
  long N = start_nodes;
  BigReal prev;
  for (int level = 0; level <= plan.max_doublings; ++level) {
    BigReal cur = estimate(N, p);
    qr.refinements.push_back(cur);
    if (level > 0) {
      BigReal gap = abs(cur - prev);
      if (gap <= half_target) {
        qr.value = std::move(cur);
        qr.error_estimate = std::move(gap);
        qr.nodes_used = N;
        qr.converged = true;
        return qr;
      }
    }
    prev = std::move(cur);
    if (N > (1L << 40)) break;
    N *= 2;
  }
  BigReal second_last = qr.refinements.size() >= 2
                            ? qr.refinements[qr.refinements.size() - 2]
                            : BigReal();
  throw QuadratureError(
      "no convergence after " + std::to_string(plan.max_doublings) +
          " doublings for " + describe(kind) + "; last two estimates " +
          std::to_string(second_last.to_double()) + ", " +
          std::to_string(prev.to_double()),
      std::move(second_last), std::move(prev));
}

}  // namespace

PrecisionPlan plan_for_bell(long n, long guard_bits) {
  if (n < 1)
    throw std::invalid_argument("bell plan needs n >= 1, got " +
                                std::to_string(n));
  if (guard_bits < 0)
    throw std::invalid_argument("guard_bits must be nonnegative");
  long mant = ceil_log2_factorial(n);
  long bound_bits = magnitude_bound(CesaroComplex{n}, 64).exponent();
  PrecisionPlan plan;
  plan.n = n;
  plan.working_bits = std::max<Precision>(
      kMinPrecision, static_cast<Precision>(mant + guard_bits + bound_bits));
  BigReal nfact = BigReal::from_natural(
      Natural::factorial(static_cast<unsigned long>(n)), plan.working_bits);
  plan.target_abs_error = div_ui(
      const_pi(plan.working_bits) * const_e(plan.working_bits) / nfact, 8);
  plan.initial_nodes = std::max<long>(32, 2 * n);
  return plan;
}

PrecisionPlan plan_for_identity(const IntegrandKind& kind, Precision bits) {
  validate(kind);
  PrecisionPlan plan;
  plan.working_bits = std::max(bits, kMinPrecision);
  plan.n = oscillation_index(kind);
  plan.target_abs_error =
      BigReal::pow2(32 - static_cast<long>(plan.working_bits),
                    plan.working_bits);
  plan.initial_nodes = std::max<long>(32, 2 * plan.n);
  return plan;
}

QuadratureResult integrate(const IntegrandKind& kind,
                           const PrecisionPlan& plan) {
  long start = next_pow2(std::max<long>(2, plan.initial_nodes));
  return run_doubling(kind, plan, start, [&kind](long N, Precision p) {
    return gl_estimate(kind, N, p);
  });
}

QuadratureResult integrate_periodic_check(const IntegrandKind& kind,
                                          const PrecisionPlan& plan) {
  long start = std::max<long>(2, plan.initial_nodes);
  if (start % 2 != 0) ++start;
  return run_doubling(kind, plan, start, [&kind](long M, Precision p) {
    return trapezoid_estimate(kind, M, p);
  });
}

BigReal pairwise_sum(std::span<const BigReal> terms) {
  if (terms.empty()) return BigReal::from_long(0, kMinPrecision);
  if (terms.size() == 1) return terms[0];
  size_t mid = terms.size() / 2;
  return pairwise_sum(terms.first(mid)) + pairwise_sum(terms.subspan(mid));
}

GaussLegendreRule gauss_legendre_rule(long point_count, Precision bits) {
  if (point_count < 1)
    throw std::invalid_argument("need at least one node");
  if (bits < kMinPrecision)
    throw std::invalid_argument("rule precision below 53 bits");
  return master_rule(point_count, rule_bucket(bits));
}

}  // namespace cesaro
