#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phik/averaging.hpp"
#include "phik/errors.hpp"
#include "phik/menon.hpp"
#include "phik/phi.hpp"
#include "phik/rho.hpp"
#include "phik/verify.hpp"
#include "report_table.hpp"

namespace phik::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOptions {
  std::string format = "plain";
  std::string out_path;
  unsigned threads = 1;
  bool no_meta = false;
};

struct PhiOptions {
  std::uint32_t k = 1;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> range;
};

struct RhoOptions {
  std::uint32_t k = 1;
  std::uint64_t lambda = 0;
  std::uint64_t n = 1;
  std::uint64_t max_enum = kDefaultEnumerationGuard;
};

struct VerifyOptions {
  std::string suite;
  std::uint64_t limit = 100;
  std::uint64_t max_enum = kDefaultEnumerationGuard;
};

struct ReportOptions {
  std::string kind;
  std::uint32_t k = 1;
  double tol = 1e-9;
  std::vector<std::uint64_t> xs{1000, 10000, 100000};
  std::uint64_t nmax = 40;
  std::uint32_t primes = 9;
  bool experimental = false;
  std::optional<std::uint64_t> scan;
  std::optional<std::uint64_t> prime_bound;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Table phi_table(const PhiOptions& o, unsigned threads) {
  Table t{"phi", {"k", "n", "phi"}, {}};
  if (o.n) {
    t.rows.push_back({Cell::of_integer(o.k), Cell::of_integer(*o.n),
                      Cell::of_exact(phi_k(o.k, *o.n))});
    return t;
  }
  const auto values = phi_k_table(o.k, *o.range, threads);
  for (std::uint64_t n = 1; n <= values.size(); ++n) {
    t.rows.push_back({Cell::of_integer(o.k), Cell::of_integer(n),
                      Cell::of_exact(values[n - 1])});
  }
  return t;
}

Table averaging_table(const ReportOptions& o, unsigned threads) {
  const EulerConstant constant = euler_constant(o.k, o.tol, o.prime_bound);
  Table t{"average", {"x", "partial_sum", "main_term", "rel_error", "error_ratio"}, {}};
  for (const auto& row : averaging_report(o.k, o.xs, constant, threads)) {
    t.rows.push_back({Cell::of_integer(row.x), Cell::of_exact(row.partial_sum),
                      Cell::of_real(row.main_term), Cell::of_real(row.rel_error),
                      Cell::of_real(row.error_ratio)});
  }
  return t;
}

Table constants_table(const ReportOptions& o) {
  Table t{"constants",
          {"k", "method", "c_k", "leading_coefficient", "prime_bound", "tail_bound"},
          {}};
  const long double order = o.k + 1;
  const EulerConstant c = euler_constant(o.k, o.tol, o.prime_bound);
  t.rows.push_back({Cell::of_integer(o.k),
                    Cell::of_text(o.k % 2 == 1 ? "closed_form" : "euler_product"),
                    Cell::of_real(c.value), Cell::of_real(c.value / order),
                    Cell::of_integer(c.prime_bound), Cell::of_real(c.tail_bound)});
  if (o.k == 2 || o.k == 4) {
    const EulerConstant cc = corollary_constant(o.k, o.tol, o.prime_bound);
    t.rows.push_back({Cell::of_integer(o.k), Cell::of_text("corollary"),
                      Cell::of_real(cc.value * order), Cell::of_real(cc.value),
                      Cell::of_integer(cc.prime_bound), Cell::of_real(cc.tail_bound * order)});
  }
  return t;
}

Table minimal_order_table(const ReportOptions& o) {
  Table t{"minimal-order", {"prime_count", "n", "ratio"}, {}};
  for (const auto& row : minimal_order_scan(o.k, o.primes, o.experimental)) {
    t.rows.push_back({Cell::of_integer(row.prime_count), Cell::of_integer(row.n),
                      Cell::of_real(row.ratio)});
  }
  return t;
}

Table menon_table(const ReportOptions& o) {
  if (o.scan) {
    Table t{"menon-scan", {"m", "n", "psi_m_psi_n", "psi_mn", "equal"}, {}};
    for (const auto& row : psi_multiplicativity_scan(o.k, *o.scan)) {
      t.rows.push_back({Cell::of_integer(row.m), Cell::of_integer(row.n),
                        Cell::of_exact(row.product), Cell::of_exact(row.joint),
                        Cell::of_bool(row.equal())});
    }
    return t;
  }
  Table t{"menon", {"k", "n", "lhs", "phi_k", "psi", "integral"}, {}};
  for (const auto& row : psi_table(o.k, o.nmax)) {
    t.rows.push_back({Cell::of_integer(row.k), Cell::of_integer(row.n),
                      Cell::of_exact(row.lhs), Cell::of_exact(row.phi_k),
                      Cell::of_exact(row.psi), Cell::of_bool(row.integral)});
  }
  return t;
}

Table report_table(const ReportOptions& o, unsigned threads) {
  if (o.kind == "average") return averaging_table(o, threads);
  if (o.kind == "constants") return constants_table(o);
  if (o.kind == "minimal-order") return minimal_order_table(o);
  return menon_table(o);
}

std::string report_meta(const ReportOptions& o) {
  return "phik " + std::string(kVersion) + " report " + o.kind + " k=" +
         std::to_string(o.k) + " generated " + utc_timestamp();
}

int emit(const std::string& text, const GlobalOptions& g, std::ostream& out,
         std::ostream& err) {
  if (g.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (file) file << text;
  if (!file) {
    err << "error: cannot write " << g.out_path << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Euler totients Phi_k(n) and sum-of-squares counts"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", g.out_path, "Write output to this file");
  app.add_option("--threads", g.threads, "Worker threads for table building")
      ->check(CLI::Range(1U, 256U));
  app.add_flag("--no-meta", g.no_meta, "Omit the timestamp header from reports");

  PhiOptions phi_opts;
  auto* phi_cmd = app.add_subcommand("phi", "Evaluate Phi_k(n) or Phi_k(1..x)");
  phi_cmd->add_option("-k", phi_opts.k, "Tuple length")->required();
  auto* n_opt = phi_cmd->add_option("-n", phi_opts.n, "Modulus");
  auto* range_opt = phi_cmd->add_option("--range", phi_opts.range, "Tabulate n = 1..x");
  n_opt->excludes(range_opt);
  range_opt->excludes(n_opt);

  RhoOptions rho_opts;
  auto* rho_cmd = app.add_subcommand("rho", "Evaluate rho_{k,lambda}(n)");
  rho_cmd->add_option("-k", rho_opts.k, "Tuple length")->required();
  rho_cmd->add_option("-l,--lambda", rho_opts.lambda, "Target residue")->required();
  rho_cmd->add_option("-n", rho_opts.n, "Modulus")->required();
  rho_cmd->add_option("--max-enum", rho_opts.max_enum,
                      "Tuple budget for the exhaustive fallback");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", verify_opts.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"rho", "phi", "identities", "convolution", "menon-classic"}));
  verify_cmd->add_option("--limit", verify_opts.limit, "Suite bound");
  verify_cmd->add_option("--max-enum", verify_opts.max_enum, "Tuple budget for oracles");

  ReportOptions report_opts;
  auto* report_cmd = app.add_subcommand("report", "Generate a verification report");
  report_cmd->add_option("kind", report_opts.kind, "Report kind")
      ->required()
      ->check(CLI::IsMember({"average", "constants", "minimal-order", "menon"}));
  report_cmd->add_option("-k", report_opts.k, "Tuple length");
  report_cmd->add_option("--tol", report_opts.tol, "Euler product tolerance");
  report_cmd->add_option("--prime-bound", report_opts.prime_bound,
                         "Fix the Euler product truncation point");
  report_cmd->add_option("--xs", report_opts.xs, "Range ends (average)")->delimiter(',');
  report_cmd->add_option("--nmax", report_opts.nmax, "Largest n (menon)");
  report_cmd->add_option("--scan", report_opts.scan,
                         "Emit the Psi multiplicativity scan up to m*n <= BOUND (menon)");
  report_cmd->add_option("--primes", report_opts.primes, "Primorial length (minimal-order)");
  report_cmd->add_flag("--experimental", report_opts.experimental,
                       "Allow even k in minimal-order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = parse_format(g.format);
  try {
    if (*phi_cmd) {
      if (!phi_opts.n && !phi_opts.range) throw DomainError("phi needs -n or --range");
      const Table t = phi_table(phi_opts, g.threads);
      if (format == OutputFormat::plain && phi_opts.n) {
        return emit(t.rows[0][2].text + "\n", g, out, err);
      }
      return emit(render(t, format), g, out, err);
    }
    if (*rho_cmd) {
      const RhoResult r = rho_evaluate(rho_opts.k, rho_opts.lambda, rho_opts.n,
                                       rho_opts.max_enum);
      Table t{"rho", {"k", "lambda", "n", "rho", "path"}, {}};
      t.rows.push_back({Cell::of_integer(rho_opts.k), Cell::of_integer(rho_opts.lambda),
                        Cell::of_integer(rho_opts.n), Cell::of_exact(r.value),
                        Cell::of_text(std::string(to_string(r.path)))});
      if (format == OutputFormat::plain) {
        return emit(to_decimal(r.value) + " (" + std::string(to_string(r.path)) + ")\n",
                    g, out, err);
      }
      return emit(render(t, format), g, out, err);
    }
    if (*verify_cmd) {
      const VerifyOutcome v = run_suite(verify_opts.suite, verify_opts.limit,
                                        verify_opts.max_enum);
      int code = kExitOk;
      if (format == OutputFormat::plain) {
        std::string text = std::string(v.passed ? "PASS" : "FAIL") + " " + v.suite +
                           " limit=" + std::to_string(v.limit) +
                           " checks=" + std::to_string(v.checks) + "\n";
        if (!v.passed) text += "first counterexample: " + v.failure + "\n";
        code = emit(text, g, out, err);
      } else {
        Table t{"verify", {"suite", "limit", "checks", "passed", "failure"}, {}};
        t.rows.push_back({Cell::of_text(v.suite), Cell::of_integer(v.limit),
                          Cell::of_integer(v.checks), Cell::of_bool(v.passed),
                          Cell::of_text(v.failure)});
        code = emit(render(t, format), g, out, err);
      }
      if (code != kExitOk) return code;
      return v.passed ? kExitOk : kExitFailure;
    }
    const Table t = report_table(report_opts, g.threads);
    std::optional<std::string> meta;
    if (!g.no_meta) meta = report_meta(report_opts);
    return emit(render(t, format, meta), g, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace phik::cli
