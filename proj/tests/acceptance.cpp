// Acceptance harness: one line per criterion, nonzero exit on any failure.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cesaro/verify.hpp"
#include "oracles.hpp"

namespace {

using cesaro::BigReal;
using cesaro::Natural;
using cesaro::Precision;
using Clock = std::chrono::steady_clock;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + CESARO_CLI_PATH + "\" " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r;
  if (!pipe) return r;
  char buf[8192];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool criterion1(std::string& note) {
  const char* expected[] = {"1", "2", "5", "15", "52", "203"};
  auto start = Clock::now();
  for (long n = 1; n <= 6; ++n) {
    CliResult r = run_cli("bell --n " + std::to_string(n) +
                          " --method cesaro --format json");
    if (r.exit_code != 0) {
      note = "exit code " + std::to_string(r.exit_code) + " at n=" +
             std::to_string(n);
      return false;
    }
    nlohmann::json doc = nlohmann::json::parse(r.out, nullptr, false);
    if (doc.is_discarded() ||
        doc["results"][0]["rounded"] != expected[n - 1] ||
        doc["results"][0]["certified"] != true) {
      note = "wrong or uncertified value at n=" + std::to_string(n);
      return false;
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream os;
  os << "6 cli runs, " << secs << "s";
  note = os.str();
  return secs < 5.0;
}

bool criterion2(std::string& note) {
  auto start = Clock::now();
  long max_nodes = 0;
  Precision max_bits = 0;
  for (long n = 1; n <= 100; ++n) {
    cesaro::BellCesaroResult r = cesaro::bell_cesaro(n);
    if (!r.certified || !(r.rounded == cesaro::bell_exact(n))) {
      note = "mismatch or uncertified at n=" + std::to_string(n);
      return false;
    }
    max_nodes = std::max(max_nodes, r.nodes_used);
    max_bits = std::max(max_bits, r.working_bits);
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream os;
  os << "n<=100 certified, max nodes " << max_nodes << ", max bits "
     << max_bits << ", " << secs << "s";
  note = os.str();
  return secs < 600.0;
}

bool criterion3(std::string& note) {
  for (long n = 1; n <= 20; ++n) {
    BigReal u = cesaro::bell_cesaro_uncorrected(n);
    BigReal exact = BigReal::from_natural(cesaro::bell_exact(n), 128);
    double gap = abs(u - exact).to_double();
    if (n == 1 && gap > 1e-6) {
      note = "n=1 gap " + std::to_string(gap) + " > 1e-6";
      return false;
    }
    if (n >= 2 && gap < 0.4) {
      note = "n=" + std::to_string(n) + " gap " + std::to_string(gap) +
             " < 0.4";
      return false;
    }
  }
  note = "n=1 coincides, n=2..20 visibly wrong without the n! factor";
  return true;
}

bool criterion4(std::string& note) {
  auto start = Clock::now();
  long count = 0;
  for (long m = 0; m <= 16; ++m)
    for (long n = 0; n <= 16; ++n) {
      cesaro::IdentityResidual r =
          cesaro::orthogonality_check(m, n, cesaro::kVerifyBits);
      ++count;
      if (!r.pass) {
        note = "fail at m=" + std::to_string(m) + " n=" + std::to_string(n);
        return false;
      }
    }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream os;
  os << count << " instances, " << secs << "s";
  note = os.str();
  return count == 289 && secs < 30.0;
}

bool criterion5(std::string& note) {
  for (long j = 0; j <= 6; ++j)
    for (long n = 1; n <= 12; ++n)
      if (!cesaro::eq3_residual(j, n, cesaro::kVerifyBits).pass) {
        note = "fail at j=" + std::to_string(j) + " n=" + std::to_string(n);
        return false;
      }
  note = "all j<=6, n<=12";
  return true;
}

bool criterion6(std::string& note) {
  for (long n = 1; n <= 10; ++n)
    for (long k = 0; k <= n + 2; ++k)
      if (!cesaro::eq4_residual(k, n, cesaro::kVerifyBits).pass) {
        note = "fail at k=" + std::to_string(k) + " n=" + std::to_string(n);
        return false;
      }
  note = "all k<=n+2, n<=10, zero cases included";
  return true;
}

bool criterion7(std::string& note) {
  for (long n = 1; n <= 8; ++n)
    for (long k = 0; k <= n; ++k)
      if (!cesaro::proof_of_eq4_mirror(k, n, cesaro::kVerifyBits).pass) {
        note = "fail at k=" + std::to_string(k) + " n=" + std::to_string(n);
        return false;
      }
  note = "both routes agree for all k<=n<=8";
  return true;
}

bool criterion8(std::string& note) {
  for (long n = 1; n <= 10; ++n)
    if (!cesaro::sum_eq4_equals_cesaro(n, cesaro::kVerifyBits).pass) {
      note = "fail at n=" + std::to_string(n);
      return false;
    }
  note = "k-sum collapses to the nested integral for n<=10";
  return true;
}

bool criterion9(std::string& note) {
  long max_terms = 0;
  for (long n = 0; n <= 30; ++n) {
    cesaro::DobinskiResult d = cesaro::bell_dobinski(n, 1e-10, 192);
    BigReal exact = BigReal::from_natural(cesaro::bell_exact(n), 192);
    BigReal rel = abs(d.estimate - exact) / exact;
    if (!(rel.to_double() <= 1e-10)) {
      note = "rel error " + std::to_string(rel.to_double()) + " at n=" +
             std::to_string(n);
      return false;
    }
    max_terms = std::max(max_terms, d.terms_used);
  }
  note = "n<=30 within 1e-10, max terms_used " + std::to_string(max_terms);
  return true;
}

bool criterion10(std::string& note) {
  for (int n = 0; n <= 8; ++n) {
    if (!(cesaro::bell_exact(n) == Natural(oracle::rgs_partition_count(n)))) {
      note = "bell mismatch at n=" + std::to_string(n);
      return false;
    }
    std::vector<unsigned long> hist = oracle::rgs_block_histogram(n);
    cesaro::StirlingRow row = cesaro::stirling_row(n);
    for (int k = 0; k <= n; ++k)
      if (!(row.entries[static_cast<size_t>(k)] == Natural(hist[k]))) {
        note = "stirling mismatch at n=" + std::to_string(n) +
               " k=" + std::to_string(k);
        return false;
      }
    for (int k = 0; k <= n; ++k)
      if (!(cesaro::surjections_incl_excl(n, k) ==
            Natural(oracle::count_surjections(n, k)))) {
        note = "surjection mismatch at n=" + std::to_string(n) +
               " k=" + std::to_string(k);
        return false;
      }
  }
  // A few above-diagonal zero cases, kept small since the oracle enumerates
  // all k^n functions.
  for (int n = 1; n <= 5; ++n)
    if (!(cesaro::surjections_incl_excl(n, n + 1) ==
          Natural(oracle::count_surjections(n, n + 1)))) {
      note = "surjection zero-case mismatch at n=" + std::to_string(n);
      return false;
    }
  note = "exhaustive enumeration matches for n<=8";
  return true;
}

bool criterion11(std::string& note) {
  const Precision p = cesaro::kVerifyBits;
  // Two correctly rounded results can still differ by accumulated rounding
  // even when both error estimates are ~0, so allow that floor on top.
  BigReal floor = BigReal::pow2(-static_cast<long>(p) + 26, 53);
  long checked = 0;
  for (long n = 1; n <= 30; ++n) {
    std::vector<cesaro::IntegrandKind> kinds = {
        cesaro::CesaroReal{n}, cesaro::CesaroComplex{n},
        cesaro::PowerKernel{3, n}, cesaro::BlockKernel{3, n},
        cesaro::SineProduct{n, n}};
    for (const auto& kind : kinds) {
      cesaro::PrecisionPlan plan = cesaro::plan_for_identity(kind, p);
      cesaro::QuadratureResult a = cesaro::integrate(kind, plan);
      cesaro::QuadratureResult b = cesaro::integrate_periodic_check(kind, plan);
      ++checked;
      if (!(abs(a.value - b.value) <=
            a.error_estimate + b.error_estimate + floor)) {
        note = "engines disagree on " + cesaro::describe(kind);
        return false;
      }
    }
  }
  note = std::to_string(checked) + " integrals, both engines agree";
  return true;
}

bool criterion12(std::string& note) {
  std::vector<std::string> outputs;
  for (const char* jobs : {"1", "1", "4", "2"}) {
    CliResult r = run_cli(std::string("verify --max-n 20 --format json "
                                      "--jobs ") +
                          jobs);
    if (r.exit_code != 0) {
      note = std::string("verify exited ") + std::to_string(r.exit_code) +
             " with --jobs " + jobs;
      return false;
    }
    outputs.push_back(r.out);
  }
  for (size_t i = 1; i < outputs.size(); ++i)
    if (outputs[i] != outputs[0]) {
      note = "output differs between runs (run " + std::to_string(i) + ")";
      return false;
    }
  note = "4 runs byte-identical across --jobs 1/1/4/2";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "bell --method cesaro rounds to 1,2,5,15,52,203 certified, <5s",
       criterion1},
      {2, "bell_cesaro certified and exact for all n <= 100, <10min",
       criterion2},
      {3, "missing n! factor: gap >= 0.4 for n=2..20, <= 1e-6 at n=1",
       criterion3},
      {4, "sine orthogonality matrix m,n <= 16, <30s", criterion4},
      {5, "power-kernel identity grid j <= 6, n <= 12", criterion5},
      {6, "block-kernel identity grid k <= n+2, n <= 10", criterion6},
      {7, "binomial proof mirror k <= n <= 8", criterion7},
      {8, "k-sum of block identities equals nested integral, n <= 10",
       criterion8},
      {9, "series vs exact within 1e-10 for n <= 30, terms logged",
       criterion9},
      {10, "exhaustive partition/surjection oracles match for n <= 8",
       criterion10},
      {11, "gauss-legendre vs trapezoid within summed estimates, n <= 30",
       criterion11},
      {12, "verify --max-n 20 json byte-identical across --jobs", criterion12},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s [%s] (%.2fs)\n", ok ? "PASS" : "FAIL",
                c.id, c.label, note.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
