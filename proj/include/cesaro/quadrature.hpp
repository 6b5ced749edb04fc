#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "cesaro/integrand.hpp"

namespace cesaro {

// Sizing for one integral: how many bits and nodes to start with and how
// small the absolute error on the integral itself must become.
struct PrecisionPlan {
  long n = 0;  // index the plan was derived from
  BigReal target_abs_error;
  Precision working_bits = kMinPrecision;
  long initial_nodes = 32;
  int max_doublings = 20;
};

struct QuadratureResult {
  BigReal value;
  BigReal error_estimate;  // |last - previous| refinement gap
  long nodes_used = 0;
  Precision working_bits = kMinPrecision;
  bool converged = false;
  std::vector<BigReal> refinements;  // successive estimates, last == value
};

// Raised when the doubling cap is reached without two successive estimates
// agreeing; carries those estimates for diagnosis.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, BigReal previous, BigReal last)
      : std::runtime_error(msg),
        previous_(std::move(previous)),
        last_(std::move(last)) {}
  const BigReal& previous_estimate() const { return previous_; }
  const BigReal& last_estimate() const { return last_; }

 private:
  BigReal previous_;
  BigReal last_;
};

// Plan sized so that after scaling by 2 n!/(pi e) the Bell number is pinned
// to within 1/4: working_bits = ceil(log2 n!) + guard_bits + ceil(log2 e^e),
// clamped to 53; target_abs_error = pi e / (8 n!); initial_nodes = max(32, 2n).
PrecisionPlan plan_for_bell(long n, long guard_bits = 32);

// Plan for an identity check at a requested precision: target_abs_error =
// 2^(32 - bits), nodes sized from the integrand's oscillation index.
PrecisionPlan plan_for_identity(const IntegrandKind& kind, Precision bits);

// Gauss-Legendre rule on [0, pi], doubling the node count until two
// successive estimates differ by at most target_abs_error / 2. Throws
// QuadratureError after plan.max_doublings unsuccessful doublings.
QuadratureResult integrate(const IntegrandKind& kind,
                           const PrecisionPlan& plan);

// Independent check engine: uniform trapezoidal rule over the full period
// [-pi, pi], halved (the integrands are even), which reduces to the [0, pi]
// trapezoid with half-weight endpoints. Spectrally accurate here because
// every family is periodic and entire. Same doubling contract as integrate.
QuadratureResult integrate_periodic_check(const IntegrandKind& kind,
                                          const PrecisionPlan& plan);

// Sum with a fixed balanced-tree association, so the result is identical
// regardless of how callers parallelize around it.
BigReal pairwise_sum(std::span<const BigReal> terms);

// Nodes (ascending, in (-1,1)) and weights of the N-point Gauss-Legendre
// rule on [-1,1], computed by Newton iteration at >= bits precision and
// cached. Exposed for tests.
struct GaussLegendreRule {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};
GaussLegendreRule gauss_legendre_rule(long point_count, Precision bits);

}  // namespace cesaro
