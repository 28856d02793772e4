#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eqschub/grass.hpp"
#include "eqschub/json_io.hpp"

namespace eqs {

struct VerifyFailure {
  std::string check;
  std::string detail;
};

struct VerifyReport {
  VerifyReport() = default;
  VerifyReport(std::string name, const GrassContext& ctx) : suite(std::move(name)), n(ctx.n()), m(ctx.m()) {}

  std::string suite;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t checks = 0;
  std::vector<VerifyFailure> failures;
  /// Suite-specific payload (certificates, counts).
  Json details = Json::object();

  bool passed() const { return failures.empty(); }
  void expect(bool ok, std::string check, std::string detail = {});
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Pieri rule against the independent multiply-and-expand path, for every
/// lambda in the n x (m-n) box.
VerifyReport verify_pieri(const GrassContext& ctx);
/// Graham positivity of every structure constant of G(n,m).
VerifyReport verify_positivity(const GrassContext& ctx);
/// t = 0 specialization: double Schur vs SSYT sums and structure constants
/// vs Littlewood-Richardson counts.
VerifyReport verify_specialize(const GrassContext& ctx);
/// Centralizer action through the wedge model vs multiplication by
/// f(x_1) + ... + f(x_n), for every basis f of V, plus the -e_T check.
VerifyReport verify_intertwine(const GrassContext& ctx);
/// Top coefficients of (x_1 + ... + x_n)^k equal SYT counts, k <= max_k.
VerifyReport verify_syt(const GrassContext& ctx, unsigned max_k = 6);

/// Dispatches by name; throws UsageError for an unknown suite.
VerifyReport run_suite(std::string_view suite, const GrassContext& ctx);

Json to_json(const VerifyReport& report);

}  // namespace eqs
