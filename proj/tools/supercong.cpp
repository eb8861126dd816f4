// supercong: batch verification of t_n(x) supercongruences and the identities
// behind them.
//
//   supercong verify --suite suite.conf
//   supercong verify --statement theorem1 --pmin 3 --pmax 200 --x -1/3
//       --oracle spot --out results.jsonl --format jsonl --jobs 4
//   supercong identities --nmax 40

#include "supercong/harness/config.hpp"
#include "supercong/harness/report.hpp"
#include "supercong/harness/suite.hpp"
#include "supercong/identities.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// CLI11 reads "-1/3" as a short flag; glue negative values onto --x.
std::vector<std::string> normalize_args(int argc, char **argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--x" && i + 1 < argc && argv[i + 1][0] == '-') {
      args.push_back("--x=" + std::string(argv[++i]));
      continue;
    }
    args.push_back(a);
  }
  return args;
}

supercong::harness::ReportFormat parse_format(const std::string &s) {
  using supercong::harness::ReportFormat;
  if (s == "jsonl")
    return ReportFormat::jsonl;
  if (s == "tap")
    return ReportFormat::tap;
  return ReportFormat::human;
}

} // namespace

int main(int argc, char **argv) {
  namespace sh = supercong::harness;

  CLI::App app{"Exact verification of t_n(x) supercongruences"};
  app.require_subcommand(1);

  auto *verify = app.add_subcommand("verify", "check congruence statements over a prime range");
  std::string suite_file;
  std::vector<std::string> statements;
  std::optional<std::int64_t> pmin, pmax;
  std::vector<std::string> xs;
  std::string oracle;
  std::string out_path;
  std::string format = "human";
  std::optional<unsigned> jobs;
  std::vector<std::string> injections;
  verify->add_option("--suite", suite_file, "suite configuration file");
  verify->add_option("--statement", statements, "statement id or group (repeatable)");
  verify->add_option("--pmin", pmin, "smallest prime");
  verify->add_option("--pmax", pmax, "largest prime");
  verify->add_option("--x", xs, "argument a/b (repeatable)");
  verify->add_option("--oracle", oracle, "exact oracle mode")
      ->check(CLI::IsMember({"off", "spot", "full"}));
  verify->add_option("--out", out_path, "JSON Lines output file");
  verify->add_option("--format", format, "stdout report format")
      ->check(CLI::IsMember({"jsonl", "tap", "human"}));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--inject", injections, "negative control: add p to rhs at <statement>@<p>");

  auto *identities = app.add_subcommand("identities", "check the exact binomial identities");
  std::int64_t nmax = 40;
  std::int64_t grid = 15;
  identities->add_option("--nmax", nmax, "largest n for the closed-form double sums")
      ->check(CLI::NonNegativeNumber);
  identities->add_option("--grid", grid, "largest k, l for the single-sum identities")
      ->check(CLI::NonNegativeNumber);

  auto args = normalize_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*identities) {
    supercong::IdentitySuiteOptions opt;
    opt.double_sum_nmax = nmax;
    opt.kl_max = grid;
    bool ok = true;
    for (const auto &r : supercong::run_identity_suite(opt)) {
      std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases;
      if (!r.pass())
        std::cout << " failures=" << r.failures << " first=" << r.first_failure;
      std::cout << "\n";
      ok = ok && r.pass();
    }
    return ok ? 0 : kExitFailure;
  }

  sh::SuiteConfig cfg;
  try {
    if (!suite_file.empty()) {
      std::ifstream in(suite_file);
      if (!in)
        throw supercong::parse_error("cannot read suite file '" + suite_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      cfg = sh::parse_config(buf.str());
    } else {
      cfg.x_values = sh::special_arguments();
      cfg.output_path = sh::default_output_path();
    }
    if (!statements.empty()) {
      cfg.statements.clear();
      for (const auto &s : statements)
        for (auto id : sh::parse_statement(s))
          cfg.statements.push_back(id);
    }
    if (pmin)
      cfg.prime_min = *pmin;
    if (pmax)
      cfg.prime_max = *pmax;
    if (!xs.empty()) {
      cfg.x_values.clear();
      for (const auto &x : xs)
        cfg.x_values.push_back(supercong::parse_rational(x));
    }
    if (!oracle.empty())
      cfg.oracle_mode = sh::parse_oracle_mode(oracle);
    if (!out_path.empty())
      cfg.output_path = out_path;
    if (jobs)
      cfg.parallelism = *jobs;
    for (const auto &inj : injections)
      cfg.injections.push_back(sh::parse_injection(inj));
    sh::validate(cfg);
  } catch (const supercong::parse_error &e) {
    std::cerr << "supercong: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto summary = sh::run_suite(cfg);
    std::cout << sh::emit_report(summary, parse_format(format));
    return summary.failed == 0 ? 0 : kExitFailure;
  } catch (const supercong::io_error &e) {
    std::cerr << "supercong: " << e.what() << "\n";
    return kExitUsage;
  }
}
