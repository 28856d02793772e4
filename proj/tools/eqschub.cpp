// eqschub: command-line front end for double Schur polynomials and
// equivariant Schubert structure constants.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource guard.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "eqschub/errors.hpp"
#include "eqschub/grass.hpp"
#include "eqschub/json_io.hpp"
#include "eqschub/schur.hpp"
#include "eqschub/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Options {
  std::string format = "json";
  std::string out;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string lambda;
  std::string mu;
  std::string suite;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw eqs::UsageError("cannot open output file " + opt.out);
  file << text << '\n';
}

std::string render_expansion_text(const eqs::SchurExpansion& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : e.coeffs) {
    if (!out.empty()) out += "\n";
    out += "s" + lambda.to_string() + ": " + c.to_string();
  }
  return out;
}

int run_schur(const Options& opt) {
  const eqs::Partition lambda = eqs::Partition::parse(opt.lambda);
  const eqs::Poly s = eqs::double_schur(lambda, opt.n);
  emit(opt, opt.format == "text" ? s.to_string() : eqs::to_json(s).dump());
  return 0;
}

int run_product(const Options& opt) {
  const eqs::GrassContext ctx(opt.n, opt.m);
  const eqs::Partition lambda = eqs::Partition::parse(opt.lambda);
  const eqs::Partition mu = eqs::Partition::parse(opt.mu);
  eqs::SchubertRing ring(ctx);
  const eqs::StructureEntry entry = ring.entry(lambda, mu);
  if (opt.format == "text") {
    std::string out;
    for (const auto& p : entry.products) {
      if (!out.empty()) out += "\n";
      out += "sigma" + p.nu.to_string() + ": " + p.coeff.to_string();
      out += p.certificate.positive ? "  [positive: " + p.certificate.in_differences.to_string('u') + "]"
                                    : "  [VIOLATION: " + p.certificate.violation + "]";
    }
    emit(opt, out.empty() ? "0" : out);
  } else {
    emit(opt, eqs::to_json(entry, ctx.n(), ctx.m()).dump());
  }
  bool positive = true;
  for (const auto& p : entry.products) positive = positive && p.certificate.positive;
  return positive ? 0 : kExitVerifyFailed;
}

int run_table(const Options& opt) {
  const eqs::GrassContext ctx(opt.n, opt.m);
  const eqs::StructureTable table = eqs::full_structure_table(ctx);
  const std::string json = eqs::to_json(table).dump();
  if (opt.out.empty()) {
    std::cout << json << '\n';
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw eqs::UsageError("cannot open output file " + opt.out);
    file << json << '\n';
  }
  const bool positive = table.all_positive();
  eqs::Json summary = eqs::Json::object();
  summary["n"] = ctx.n();
  summary["m"] = ctx.m();
  summary["entries"] = table.entries.size();
  summary["all_positive"] = positive;
  (opt.out.empty() ? std::cerr : std::cout) << summary.dump() << '\n';
  return positive ? 0 : kExitVerifyFailed;
}

int run_verify(const Options& opt) {
  const eqs::GrassContext ctx(opt.n, opt.m);
  const eqs::VerifyReport report = eqs::run_suite(opt.suite, ctx);
  if (opt.format == "text") {
    std::string out = report.suite + " G(" + std::to_string(report.n) + "," + std::to_string(report.m) +
                      "): " + (report.passed() ? "PASS" : "FAIL") + " (" +
                      std::to_string(report.checks) + " checks, " +
                      std::to_string(report.failures.size()) + " failures)";
    for (const auto& f : report.failures) out += "\n  " + f.check + ": " + f.detail;
    emit(opt, out);
  } else {
    emit(opt, eqs::to_json(report).dump());
  }
  return report.passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Schur polynomials and equivariant Schubert calculus on Grassmannians"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write output to this file instead of standard output");

  auto* schur = app.add_subcommand("schur", "Print the double Schur polynomial s_lambda(x|t)");
  schur->add_option("--n", opt.n, "Number of x-variables")->required()->check(CLI::PositiveNumber);
  schur->add_option("--lambda", opt.lambda, "Partition as comma-separated parts, \"\" for empty")
      ->required();

  auto* product = app.add_subcommand("product", "Structure constants of sigma_lambda * sigma_mu in G(n,m)");
  product->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
  product->add_option("--m", opt.m)->required()->check(CLI::PositiveNumber);
  product->add_option("--lambda", opt.lambda)->required();
  product->add_option("--mu", opt.mu)->required();

  auto* table = app.add_subcommand("table", "Full structure constant table of G(n,m)");
  table->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
  table->add_option("--m", opt.m)->required()->check(CLI::PositiveNumber);
  table->add_option("--out", opt.out, "Output file for the table JSON");

  auto* verify = app.add_subcommand("verify", "Run a property suite and report pass/fail");
  verify->add_option("--suite", opt.suite)->required()->check(
      CLI::IsMember({"pieri", "positivity", "specialize", "intertwine", "syt"}));
  verify->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--m", opt.m)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*schur) return run_schur(opt);
    if (*product) return run_product(opt);
    if (*table) return run_table(opt);
    if (*verify) return run_verify(opt);
  } catch (const eqs::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const eqs::ResourceGuard& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  }
  return kExitUsage;
}
