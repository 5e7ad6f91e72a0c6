// psi_certify: evaluate kernels, print derived constants, run catalog checks.
//
// Exit codes: 0 success, 1 an asserted case failed, 2 usage or domain error.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psicert/ballvol.hpp"
#include "psicert/catalog.hpp"
#include "psicert/report.hpp"
#include "psicert/specfun.hpp"
#include "psicert/verifier.hpp"

namespace {

constexpr int kUsageError = 2;

struct EvalArgs {
  std::string function;
  std::optional<double> x;
  std::optional<double> n;
  std::optional<double> a;
};

struct CheckArgs {
  std::string id;
  bool all = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  std::string report;
  std::optional<unsigned> threads;
  std::string strategy = "boundary-biased";
  double boundary_fraction = 0.1;
  double fd_step = 1e-5;
};

double need(const std::optional<double>& v, const char* flag, const std::string& fn) {
  if (!v) throw CLI::ValidationError(fn + " requires " + flag);
  return *v;
}

int cmd_eval(const EvalArgs& args) {
  const std::string& fn = args.function;
  double value = 0.0;
  try {
    if (fn == "gamma") value = psicert::gamma(need(args.x, "--x", fn));
    else if (fn == "loggamma") value = psicert::log_gamma(need(args.x, "--x", fn));
    else if (fn == "psi") value = psicert::digamma(need(args.x, "--x", fn));
    else if (fn == "psi1") value = psicert::trigamma(need(args.x, "--x", fn));
    else if (fn == "psi2") value = psicert::tetragamma(need(args.x, "--x", fn));
    else if (fn == "omega") value = psicert::omega(need(args.n, "--n", fn));
    else if (fn == "logomega") value = psicert::log_omega(need(args.n, "--n", fn));
    else value = psicert::sth_ratio(need(args.a, "--a", fn), need(args.x, "--x", fn));
  } catch (const psicert::EvalError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }
  std::printf("%.17g\n", value);
  return 0;
}

int cmd_constants() {
  std::cout << psicert::format_constants(psicert::constants_table());
  return 0;
}

unsigned resolve_threads(const std::optional<unsigned>& flag) {
  if (flag) {
    if (*flag == 0) throw CLI::ValidationError("--threads must be positive");
    return *flag;
  }
  const char* env = std::getenv("PSI_CERTIFY_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  errno = 0;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0 || v > 1024) {
    throw CLI::ValidationError("PSI_CERTIFY_THREADS must be a positive integer");
  }
  return static_cast<unsigned>(v);
}

int cmd_check(const CheckArgs& args) {
  if (args.all == !args.id.empty()) {
    std::cerr << "check: give exactly one of --id or --all\n";
    return kUsageError;
  }
  const auto strategy = psicert::parse_strategy(args.strategy);
  if (!strategy) {
    std::cerr << "check: unknown strategy " << args.strategy << "\n";
    return kUsageError;
  }
  if (!(args.boundary_fraction >= 0.0 && args.boundary_fraction <= 1.0) || !(args.fd_step > 0.0)) {
    std::cerr << "check: --boundary-fraction must lie in [0,1] and --fd-step must be positive\n";
    return kUsageError;
  }
  unsigned threads = 1;
  try {
    threads = resolve_threads(args.threads);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }

  const psicert::SampleConfig config{args.seed, args.samples, *strategy, args.boundary_fraction, args.fd_step};
  std::vector<psicert::CheckResult> results;
  if (args.all) {
    results = psicert::run_all(config, threads);
  } else {
    const psicert::CatalogEntry* entry = psicert::catalog().find(args.id);
    if (entry == nullptr) {
      std::cerr << psicert::UnknownCase(args.id).what() << "\n";
      return kUsageError;
    }
    results.push_back(psicert::run_case(*entry, config, threads));
  }

  for (const auto& r : results) {
    std::printf("%-32s %-15s min_margin=%-24.17g evaluated=%zu skipped=%zu violations=%zu\n", r.id.c_str(),
                std::string(psicert::to_string(r.status)).c_str(), r.min_margin, r.n_evaluated, r.n_skipped,
                r.n_violations);
  }
  const psicert::Report report = psicert::make_report(config, std::move(results));
  const auto& s = report.summary;
  std::printf("summary: pass=%zu fail=%zu empirical-pass=%zu empirical-fail=%zu undetermined=%zu\n", s.pass,
              s.fail, s.empirical_pass, s.empirical_fail, s.undetermined);

  if (!args.report.empty()) {
    std::ofstream out(args.report, std::ios::binary);
    if (!out) {
      std::cerr << "check: cannot write " << args.report << "\n";
      return kUsageError;
    }
    out << psicert::serialize(report);
  }
  return psicert::exit_code(report.cases);
}

int cmd_list() {
  for (const auto& e : psicert::catalog().entries()) {
    std::printf("%-32s %-25s %s\n", psicert::id_of(e).c_str(),
                std::string(psicert::to_string(psicert::status_of(e))).c_str(), psicert::statement_of(e).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical certification of digamma, gamma and ball-volume inequalities"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a special function");
  eval->add_option("function", eval_args.function, "Function name")
      ->required()
      ->check(CLI::IsMember({"gamma", "loggamma", "psi", "psi1", "psi2", "omega", "logomega", "sth_ratio"}));
  eval->add_option("--x", eval_args.x, "Argument");
  eval->add_option("--n", eval_args.n, "Dimension");
  eval->add_option("--a", eval_args.a, "Exponent parameter of sth_ratio");

  app.add_subcommand("constants", "Print derived constants next to their published digits");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Sample catalog cases and report margins");
  check->add_option("--id", check_args.id, "Case id");
  check->add_flag("--all", check_args.all, "Run every case");
  check->add_option("--samples", check_args.samples, "Samples per case");
  check->add_option("--seed", check_args.seed, "Seed");
  check->add_option("--report", check_args.report, "Write a JSON report to this path");
  check->add_option("--threads", check_args.threads, "Worker threads (default: PSI_CERTIFY_THREADS or 1)");
  check->add_option("--strategy", check_args.strategy, "grid | random | boundary-biased");
  check->add_option("--boundary-fraction", check_args.boundary_fraction, "Share of boundary-biased samples");
  check->add_option("--fd-step", check_args.fd_step, "Relative finite-difference step");

  app.add_subcommand("list", "List catalog cases");

  try {
    app.parse(argc, argv);
    if (*eval) return cmd_eval(eval_args);
    if (app.got_subcommand("constants")) return cmd_constants();
    if (*check) return cmd_check(check_args);
    return cmd_list();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
}
