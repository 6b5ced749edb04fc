#pragma once

#include <string>
#include <vector>

#include "cesaro/formulas.hpp"

namespace cesaro {

// Fixed precision every identity check in the harness runs at.
inline constexpr Precision kVerifyBits = 128;

// Significant digits used when rendering report values.
inline constexpr int kReportDigits = 25;

// One identity instance: what was compared, how close it came, verdict.
// Numeric fields are decimal strings so reports survive serialization
// without precision games. wall_time is informational only and is excluded
// from machine-readable output (it would break byte-for-byte determinism).
struct VerificationReport {
  std::string identity;
  std::vector<long> parameters;
  std::string lhs;
  std::string rhs;
  std::string abs_residual;
  std::string tolerance;
  bool pass = false;
  Precision working_bits = kMinPrecision;
  long nodes_used = 0;
  double wall_time = 0.0;  // seconds
  std::string note;
};

// Identity families in the order verify_all reports them.
const std::vector<std::string>& identity_names();

// Runs the whole suite up to max_n: the sine orthogonality matrix, the
// inclusion-exclusion vs recurrence Stirling cross-check, the power-kernel
// and block-kernel integral identities, the proof-chain mirror, the k-sum
// collapse, Bell via the corrected integral vs exact, the Dobinski series,
// and the misprint demonstration. `only` filters to one identity name.
// Instance failures and engine errors become failed reports; the call only
// throws on invalid arguments. Report order is fixed regardless of jobs.
std::vector<VerificationReport> verify_all(long max_n, int jobs = 1,
                                           const std::string& only = "");

// Checks the binomial-expansion proof of the block-kernel identity: the
// block integral (route a) against the alternating binomial combination of
// power-kernel integrals (route b), and both against the exact value.
VerificationReport proof_of_eq4_mirror(long k, long n, Precision p);

// Checks that the block-kernel integrals summed over k equal the full
// nested-exponential integral divided by e, with the k > n terms
// individually negligible.
VerificationReport sum_eq4_equals_cesaro(long n, Precision p);

// Shows the 1885 misprint: without the n! the integral formula returns
// about B_n/n!, so the gap to B_n is large for every n >= 2 and invisible
// only at n = 1.
std::vector<VerificationReport> typo_demonstration(long n_max);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace cesaro
