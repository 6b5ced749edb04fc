#pragma once

#include "cesaro/exact.hpp"
#include "cesaro/quadrature.hpp"

namespace cesaro {

// Outcome of checking one integral identity: lhs from quadrature, rhs from
// exact integers.
struct IdentityResidual {
  BigReal lhs;
  BigReal rhs;
  BigReal abs_residual;
  BigReal tolerance;
  bool pass = false;
  long nodes_used = 0;
  Precision working_bits = kMinPrecision;
};

struct BellCesaroResult {
  BigReal estimate;       // 2 n!/(pi e) times the integral
  Natural rounded;        // nearest integer
  bool certified = false; // converged and within 1/4 of the integer
  BigReal error_estimate; // on the scaled estimate
  long nodes_used = 0;
  Precision working_bits = kMinPrecision;
};

// Bell number from the corrected integral formula
//   B_n = 2 n!/(pi e) * Im Int_0^pi e^{e^{e^{it}}} sin nt dt.
// use_real_form switches the integrand to the equivalent all-real expression.
// Throws std::invalid_argument for n < 1, QuadratureError on non-convergence.
BellCesaroResult bell_cesaro(long n, long guard_bits = 32,
                             bool use_real_form = false);

// The 1885 printed form of the prefactor, 2/(pi e) with the n! dropped;
// approximates B_n/n!, not B_n. Kept to demonstrate the misprint.
BigReal bell_cesaro_uncorrected(long n);

struct UncorrectedDetail {
  BigReal value;
  BigReal error_estimate;
  long nodes_used = 0;
  Precision working_bits = kMinPrecision;
};
UncorrectedDetail bell_cesaro_uncorrected_detail(long n);

// Im Int_0^pi e^{j e^{it}} sin nt dt  ==  j^n pi/(2 n!).
IdentityResidual eq3_residual(long j, long n, Precision p);

// Im Int_0^pi (e^{e^{it}}-1)^k/k! sin nt dt  ==  S(n,k) pi/(2 n!).
IdentityResidual eq4_residual(long k, long n, Precision p);

// Int_0^pi sin mt sin nt dt  ==  pi/2 if m == n >= 1, else 0.
IdentityResidual orthogonality_check(long m, long n, Precision p);

struct DobinskiResult {
  BigReal estimate;
  long terms_used = 0;
};

// B_n = (1/e) sum_{k>=0} k^n/k!, truncated once the proven tail bound
// (tail <= 2 t_{K+1} for K >= max(2n, 4)) drops below rel_tol * partial sum.
DobinskiResult bell_dobinski(long n, const BigReal& rel_tol, Precision p);

inline DobinskiResult bell_dobinski(long n, double rel_tol, Precision p) {
  return bell_dobinski(n, BigReal::from_double(rel_tol, kMinPrecision), p);
}

}  // namespace cesaro
