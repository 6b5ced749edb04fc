#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "cesaro/exact.hpp"
#include "cesaro/formulas.hpp"
#include "cesaro/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 1;
constexpr int kExitUncertified = 2;
constexpr int kExitVerifyFailed = 3;

std::string join_params(const std::vector<long>& params) {
  std::string s;
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(params[i]);
  }
  return s;
}

// wall_time is deliberately absent: machine output must be byte-identical
// across runs and job counts.
ordered_json report_json(const cesaro::VerificationReport& r) {
  return ordered_json{{"identity", r.identity},
                      {"parameters", r.parameters},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"abs_residual", r.abs_residual},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"working_bits", static_cast<long>(r.working_bits)},
                      {"nodes_used", r.nodes_used},
                      {"note", r.note}};
}

void print_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_bell(long n, const std::string& method, long bits, long guard,
             double tol, bool real_form, const std::string& format) {
  using namespace cesaro;
  ordered_json doc{{"command", "bell"},
                   {"params", ordered_json{{"n", n}, {"method", method}}},
                   {"results", ordered_json::array()}};

  if (method == "triangle" || method == "stirling-sum" ||
      method == "inclusion-exclusion") {
    Natural value;
    if (method == "triangle") {
      value = bell_exact(n);
    } else if (method == "stirling-sum") {
      StirlingRow row = stirling_row(n);
      for (const Natural& e : row.entries) value += e;
    } else {
      for (long k = 0; k <= n; ++k) value += stirling_incl_excl(n, k);
    }
    if (format == "json") {
      doc["results"].push_back(ordered_json{{"value", value.str()}});
      print_json(doc);
    } else if (format == "csv") {
      std::cout << "n,method,value\n"
                << n << "," << method << "," << value.str() << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
    return kExitOk;
  }

  if (method == "cesaro") {
    if (n < 1)
      throw std::invalid_argument("cesaro needs n >= 1 (the sin nt factor "
                                  "kills the integral at n = 0)");
    BellCesaroResult r = bell_cesaro(n, guard, real_form);
    std::string estimate = to_decimal_string(r.estimate, kReportDigits);
    std::string err = to_decimal_string(r.error_estimate, kReportDigits);
    if (format == "json") {
      doc["params"]["guard_bits"] = guard;
      doc["params"]["real_form"] = real_form;
      doc["results"].push_back(
          ordered_json{{"estimate", estimate},
                       {"rounded", r.rounded.str()},
                       {"certified", r.certified},
                       {"error_estimate", err},
                       {"nodes_used", r.nodes_used},
                       {"working_bits", static_cast<long>(r.working_bits)}});
      print_json(doc);
    } else if (format == "csv") {
      std::cout
          << "n,method,estimate,rounded,certified,error_estimate,nodes_used,"
             "working_bits\n"
          << n << "," << method << "," << estimate << "," << r.rounded.str()
          << "," << (r.certified ? "true" : "false") << "," << err << ","
          << r.nodes_used << "," << r.working_bits << "\n";
    } else {
      std::cout << "estimate       = " << estimate << "\n"
                << "rounded        = " << r.rounded.str() << "\n"
                << "certified      = " << (r.certified ? "true" : "false")
                << "\n"
                << "error_estimate = " << err << "\n"
                << "nodes_used     = " << r.nodes_used << "\n"
                << "working_bits   = " << r.working_bits << "\n";
    }
    return r.certified ? kExitOk : kExitUncertified;
  }

  if (method == "dobinski") {
    BigReal rel_tol = BigReal::from_double(tol, kMinPrecision);
    DobinskiResult r = bell_dobinski(n, rel_tol, bits);
    std::string estimate = to_decimal_string(r.estimate, kReportDigits);
    if (format == "json") {
      doc["params"]["bits"] = bits;
      doc["params"]["rel_tol"] = tol;
      doc["results"].push_back(ordered_json{{"estimate", estimate},
                                            {"terms_used", r.terms_used}});
      print_json(doc);
    } else if (format == "csv") {
      std::cout << "n,method,estimate,terms_used\n"
                << n << "," << method << "," << estimate << ","
                << r.terms_used << "\n";
    } else {
      std::cout << "estimate   = " << estimate << "\n"
                << "terms_used = " << r.terms_used << "\n";
    }
    return kExitOk;
  }

  throw std::invalid_argument("unknown method '" + method + "'");
}

int cmd_verify(long max_n, const std::string& only, int jobs,
               const std::string& format) {
  using namespace cesaro;
  std::vector<VerificationReport> reports = verify_all(max_n, jobs, only);
  bool ok = all_pass(reports);

  if (format == "json") {
    ordered_json doc{
        {"command", "verify"},
        {"params", ordered_json{{"max_n", max_n}, {"only", only}}},
        {"results", ordered_json::array()}};
    for (const auto& r : reports) doc["results"].push_back(report_json(r));
    doc["all_pass"] = ok;
    print_json(doc);
  } else if (format == "csv") {
    std::cout << "identity,parameters,lhs,rhs,abs_residual,tolerance,pass,"
                 "working_bits,nodes_used\n";
    for (const auto& r : reports)
      std::cout << r.identity << "," << join_params(r.parameters) << ","
                << r.lhs << "," << r.rhs << "," << r.abs_residual << ","
                << r.tolerance << "," << (r.pass ? "true" : "false") << ","
                << r.working_bits << "," << r.nodes_used << "\n";
  } else {
    size_t failed = 0;
    for (const auto& r : reports) {
      if (!r.pass) ++failed;
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << "("
                << join_params(r.parameters) << ")"
                << "  residual=" << r.abs_residual << "  tol=" << r.tolerance
                << "  bits=" << r.working_bits << "  nodes=" << r.nodes_used;
      if (!r.note.empty()) std::cout << "  [" << r.note << "]";
      std::cout << "  (" << r.wall_time << "s)\n";
    }
    std::cout << reports.size() << " checks, " << (reports.size() - failed)
              << " passed, " << failed << " failed\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_dump(const std::string& kind_name, long n, long j, long k, long m,
             bool has_j, bool has_k, bool has_m, long samples, long bits,
             const std::string& out_path) {
  using namespace cesaro;
  if (samples < 1) throw std::invalid_argument("need samples >= 1");

  IntegrandKind kind;
  if (kind_name == "cesaro") {
    if (has_j || has_k || has_m)
      throw std::invalid_argument("cesaro takes only --n");
    kind = CesaroReal{n};
  } else if (kind_name == "power") {
    if (!has_j || has_k || has_m)
      throw std::invalid_argument("power takes --j and --n");
    kind = PowerKernel{j, n};
  } else if (kind_name == "block") {
    if (!has_k || has_j || has_m)
      throw std::invalid_argument("block takes --k and --n");
    kind = BlockKernel{k, n};
  } else if (kind_name == "sines") {
    if (!has_m || has_j || has_k)
      throw std::invalid_argument("sines takes --m and --n");
    kind = SineProduct{m, n};
  } else {
    throw std::invalid_argument("unknown kind '" + kind_name + "'");
  }
  validate(kind);

  const Precision p = std::max<Precision>(bits, kMinPrecision);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << "theta,value\n";
  BigReal pi = const_pi(p);
  for (long i = 0; i <= samples; ++i) {
    BigReal theta = div_ui(mul_ui(pi, static_cast<unsigned long>(i)),
                           static_cast<unsigned long>(samples));
    BigReal value = eval(kind, theta, p);
    out << to_decimal_string(theta, 17) << "," << to_decimal_string(value, 17)
        << "\n";
  }
  out.close();
  if (!out) throw std::invalid_argument("write to '" + out_path + "' failed");
  std::cout << "wrote " << out_path << " (" << (samples + 1) << " rows)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell numbers: exact combinatorics, the corrected "
               "nested-exponential integral formula, and identity checks"};
  app.require_subcommand(1);

  auto* bell = app.add_subcommand("bell", "compute one Bell number");
  long bell_n = 0;
  std::string bell_method = "triangle";
  long bell_bits = 128;
  long bell_guard = 32;
  double bell_tol = 1e-10;
  bool bell_real_form = false;
  std::string bell_format = "human";
  bell->add_option("--n", bell_n, "index n")->required();
  bell->add_option("--method", bell_method,
                   "triangle|stirling-sum|inclusion-exclusion|cesaro|dobinski");
  bell->add_option("--bits", bell_bits, "working precision for dobinski");
  bell->add_option("--guard", bell_guard, "guard bits for cesaro");
  bell->add_option("--tol", bell_tol, "relative tolerance for dobinski");
  bell->add_flag("--real-form", bell_real_form,
                 "cesaro: integrate the all-real integrand form");
  bell->add_option("--format", bell_format, "human|json|csv");

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  long verify_max_n = 6;
  std::string verify_only;
  int verify_jobs = static_cast<int>(std::thread::hardware_concurrency());
  std::string verify_format = "human";
  verify->add_option("--max-n", verify_max_n, "largest index checked");
  verify->add_option("--only", verify_only, "restrict to one identity");
  verify->add_option("--jobs", verify_jobs, "worker threads");
  verify->add_option("--format", verify_format, "human|json|csv");

  auto* dump = app.add_subcommand("dump", "sample an integrand to CSV");
  std::string dump_kind;
  long dump_n = 0, dump_j = 0, dump_k = 0, dump_m = 0;
  long dump_samples = 100, dump_bits = 64;
  std::string dump_out;
  auto* optj = dump->add_option("--j", dump_j, "power kernel index");
  auto* optk = dump->add_option("--k", dump_k, "block kernel index");
  auto* optm = dump->add_option("--m", dump_m, "first sine index");
  dump->add_option("--kind", dump_kind, "cesaro|power|block|sines")
      ->required();
  dump->add_option("--n", dump_n, "index n")->required();
  dump->add_option("--samples", dump_samples, "row count minus one");
  dump->add_option("--bits", dump_bits, "evaluation precision");
  dump->add_option("--out", dump_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    if (bell->parsed())
      return cmd_bell(bell_n, bell_method, bell_bits, bell_guard, bell_tol,
                      bell_real_form, bell_format);
    if (verify->parsed())
      return cmd_verify(verify_max_n, verify_only,
                        verify_jobs > 0 ? verify_jobs : 1, verify_format);
    if (dump->parsed())
      return cmd_dump(dump_kind, dump_n, dump_j, dump_k, dump_m,
                      optj->count() > 0, optk->count() > 0, optm->count() > 0,
                      dump_samples, dump_bits, dump_out);
  } catch (const cesaro::QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUncertified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
