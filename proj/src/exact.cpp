#include "cesaro/exact.hpp"

#include <mutex>
#include <string>

namespace cesaro {

namespace {

void check_index(long v, const char* what) {
  if (v < 0)
    throw std::invalid_argument(std::string(what) + " must be nonnegative");
  if (v > kMaxExactIndex)
    throw std::invalid_argument(std::string(what) + " exceeds the soft cap " +
                                std::to_string(kMaxExactIndex));
}

// Bell triangle rows, grown on demand. Row i holds i+1 entries; row 0 is [1],
// row i starts with the last entry of row i-1 and each entry adds the one
// above. B_i is the first entry of row i.
class BellTable {
 public:
  Natural get(long n) {
    std::scoped_lock lock(mu_);
    while (static_cast<long>(bell_.size()) <= n) {
      const std::vector<Natural>& prev = row_;
      std::vector<Natural> next;
      next.reserve(prev.size() + 1);
      next.push_back(prev.back());
      for (const Natural& above : prev) next.push_back(next.back() + above);
      bell_.push_back(next.front());
      row_ = std::move(next);
    }
    return bell_[static_cast<size_t>(n)];
  }

 private:
  std::mutex mu_;
  std::vector<Natural> bell_{Natural(1ul)};  // bell_[i] = B_i
  std::vector<Natural> row_{Natural(1ul)};   // last computed triangle row
};

class StirlingTable {
 public:
  std::vector<Natural> get_row(long n) {
    std::scoped_lock lock(mu_);
    while (static_cast<long>(rows_.size()) <= n) {
      const std::vector<Natural>& prev = rows_.back();
      const size_t m = rows_.size();  // index of the row being built
      std::vector<Natural> next(m + 1);
      next[0] = Natural(0ul);  // S(n,0) = 0 for n > 0
      for (size_t k = 1; k <= m; ++k) {
        mpz_class t = 0;
        if (k < prev.size()) t = prev[k].mpz() * static_cast<unsigned long>(k);
        t += prev[k - 1].mpz();
        next[k] = Natural(std::move(t));
      }
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<size_t>(n)];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Natural>> rows_{{Natural(1ul)}};  // S(0,0) = 1
};

BellTable& bell_table() {
  static BellTable t;
  return t;
}

StirlingTable& stirling_table() {
  static StirlingTable t;
  return t;
}

}  // namespace

Natural bell_exact(long n) {
  check_index(n, "n");
  return bell_table().get(n);
}

StirlingRow stirling_row(long n) {
  check_index(n, "n");
  return StirlingRow{n, stirling_table().get_row(n)};
}

Natural surjections_incl_excl(long n, long k) {
  check_index(n, "n");
  check_index(k, "k");
  mpz_class acc = 0;
  mpz_class binom, power;
  for (long j = 0; j <= k; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(j));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j),
                  static_cast<unsigned long>(n));  // 0^0 = 1
    binom *= power;
    if ((k - j) % 2 == 0)
      acc += binom;
    else
      acc -= binom;
  }
  if (sgn(acc) < 0)
    throw InternalError("inclusion-exclusion surjection sum came out negative");
  return Natural(std::move(acc));
}

Natural stirling_incl_excl(long n, long k) {
  const Natural s = surjections_incl_excl(n, k);
  const Natural f = Natural::factorial(static_cast<unsigned long>(k));
  if (!mpz_divisible_p(s.mpz().get_mpz_t(), f.mpz().get_mpz_t()))
    throw InternalError("surjection count is not divisible by k!");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), s.mpz().get_mpz_t(), f.mpz().get_mpz_t());
  return Natural(std::move(q));
}

long ceil_log2_factorial(long n) {
  check_index(n, "n");
  return Natural::factorial(static_cast<unsigned long>(n)).ceil_log2();
}

}  // namespace cesaro
