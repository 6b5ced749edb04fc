#pragma once

#include <vector>

#include "cesaro/natural.hpp"

namespace cesaro {

// Soft cap on the index accepted by the exact routines. Exact values grow
// super-exponentially and indexes beyond this have no practical use here.
inline constexpr long kMaxExactIndex = 10000;

// Row n of the Stirling partition numbers: entries[k] = S(n,k) for k = 0..n.
struct StirlingRow {
  long n = 0;
  std::vector<Natural> entries;
};

// Bell number B_n via the Bell/Aitken triangle (O(n^2) exact additions).
// B_0 = 1. Throws std::invalid_argument for n < 0 or n > kMaxExactIndex.
Natural bell_exact(long n);

// Stirling partition numbers S(n,k) for k = 0..n, by the standard recurrence
// S(n,k) = k*S(n-1,k) + S(n-1,k-1). Rows are memoized.
StirlingRow stirling_row(long n);

// Number of surjections [n] -> [k] by inclusion-exclusion:
//   sum_{j=0}^{k} (-1)^{k-j} C(k,j) j^n,   with 0^0 = 1.
// The alternating sum is accumulated as a signed exact integer; a negative
// final value raises InternalError.
Natural surjections_incl_excl(long n, long k);

// S(n,k) = surjections_incl_excl(n,k) / k!; the division must be exact.
Natural stirling_incl_excl(long n, long k);

// ceil(log2(n!)), computed from the exact factorial.
long ceil_log2_factorial(long n);

}  // namespace cesaro
