#include "eqschub/verify.hpp"

#include "eqschub/errors.hpp"
#include "eqschub/oracles.hpp"
#include "eqschub/rep.hpp"

namespace eqs {

namespace {

std::string show(const SchurExpansion& e) { return to_json(e).dump(); }

oracle::XPolynomial to_x_polynomial(const Poly& p) {
  oracle::XPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.t_count() != 0) throw InternalError("expected a t-free polynomial");
    out[m.x_exponents()] += c;
  }
  return out;
}

}  // namespace

void VerifyReport::expect(bool ok, std::string check, std::string detail) {
  ++checks;
  if (!ok) failures.push_back({std::move(check), std::move(detail)});
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"pieri", "positivity", "specialize", "intertwine", "syt"};
  return names;
}

VerifyReport verify_pieri(const GrassContext& ctx) {
  VerifyReport report("pieri", ctx);
  const std::size_t n = ctx.n();
  DoubleSchurBasis basis(n);
  const Poly sum_x = sum_of_x(n);
  for (const auto& lambda : ctx.basis()) {
    const SchurExpansion rule = pieri_multiply(lambda, n);
    const SchurExpansion expanded = basis.expand_in_double_schur(sum_x * basis.s(lambda));
    report.expect(rule == expanded, "pieri " + lambda.to_string(),
                  "rule " + show(rule) + " vs expansion " + show(expanded));
    for (const auto& [nu, c] : expanded.coeffs) {
      report.expect(nu.length() <= n, "vanishing " + lambda.to_string(),
                    "term " + nu.to_string() + " has more than n rows");
    }
  }
  return report;
}

VerifyReport verify_positivity(const GrassContext& ctx) {
  VerifyReport report("positivity", ctx);
  const StructureTable table = full_structure_table(ctx);
  std::set<unsigned> used;
  Json entries = Json::array();
  for (const auto& entry : table.entries) {
    for (const auto& p : entry.products) {
      report.expect(p.certificate.positive,
                    "positivity " + entry.lambda.to_string() + "*" + entry.mu.to_string() + "->" +
                        p.nu.to_string(),
                    "coefficient " + p.coeff.to_string() + ": " + p.certificate.violation);
      used.insert(p.certificate.differences_used.begin(), p.certificate.differences_used.end());
    }
    Json e = to_json(entry, table.n, table.m);
    e.erase("n");
    e.erase("m");
    entries.push_back(std::move(e));
  }
  report.details["differences_used"] = std::vector<unsigned>(used.begin(), used.end());
  report.details["entries"] = std::move(entries);
  return report;
}

VerifyReport verify_specialize(const GrassContext& ctx) {
  VerifyReport report("specialize", ctx);
  const std::size_t n = ctx.n();
  SchubertRing ring(ctx);
  const auto box = ctx.basis();

  for (const auto& lambda : box) {
    const auto oracle_poly = oracle::classical_schur_ssyt(lambda.parts(), static_cast<unsigned>(n));
    const auto specialized = to_x_polynomial(kill_t_above(ring.basis().s(lambda), 0));
    report.expect(oracle_poly == specialized, "ssyt " + lambda.to_string(),
                  "double Schur at t=0 differs from the SSYT sum");
  }

  for (const auto& lambda : box) {
    for (const auto& mu : box) {
      const SchurExpansion product = ring.product(lambda, mu);
      for (const auto& nu : box) {
        const Poly c = kill_t_above(product.at(nu), 0);
        mpz_class expected = 0;
        if (nu.size() == lambda.size() + mu.size()) {
          expected = oracle::lr_coefficient(lambda.parts(), mu.parts(), nu.parts());
        }
        const mpz_class got = c.is_zero() ? mpz_class(0) : c.leading_term().second;
        report.expect(c.is_constant() && got == expected,
                      "lr " + lambda.to_string() + "*" + mu.to_string() + "->" + nu.to_string(),
                      "t=0 coefficient " + c.to_string() + ", LR count " + expected.get_str());
      }
    }
  }
  return report;
}

VerifyReport verify_intertwine(const GrassContext& ctx) {
  VerifyReport report("intertwine", ctx);
  const std::size_t n = ctx.n(), m = ctx.m();
  SchubertRing ring(ctx);
  const auto box = ctx.basis();

  for (std::size_t k = 0; k < m; ++k) {
    const VElement f = VElement::basis(k, m);
    for (const auto& lambda : box) {
      const SchurExpansion e = SchurExpansion::basis(lambda, n);
      const SchurExpansion wedge = centralizer_action_wedge(f, e, ctx);
      const SchurExpansion poly = centralizer_action_poly(f, e, ring);
      report.expect(wedge == poly, "intertwine (x|t)^" + std::to_string(k) + " on " + lambda.to_string(),
                    "wedge " + show(wedge) + " vs polynomial " + show(poly));
    }
  }

  // -e_T = multiplication by x acts as s_(1) - (t_1 + ... + t_n).
  const Partition one{1};
  Poly shift(0);
  for (std::size_t i = 1; i <= n; ++i) shift += Poly::t(static_cast<unsigned>(i));
  const GLMatrix minus_e = mult_by_x_matrix(m);
  for (const auto& lambda : box) {
    const SchurExpansion e = SchurExpansion::basis(lambda, n);
    const SchurExpansion wedge = phi_backward(gl_action_on_wedge(minus_e, phi_forward(e, ctx)));
    SchurExpansion expected = ctx.fits(one) ? ring.product(lambda, one) : SchurExpansion(n);
    expected -= e.scale(shift);
    report.expect(wedge == expected, "res-eT " + lambda.to_string(),
                  "wedge " + show(wedge) + " vs sigma_1 - sum t " + show(expected));
  }
  return report;
}

VerifyReport verify_syt(const GrassContext& ctx, unsigned max_k) {
  VerifyReport report("syt", ctx);
  SchubertRing ring(ctx);
  Json counts = Json::array();
  for (unsigned k = 0; k <= max_k; ++k) {
    const SchurExpansion power = ring.sigma1_power(k);
    for (const auto& [lambda, c] : power.coeffs) {
      report.expect(lambda.size() <= k, "degree k=" + std::to_string(k),
                    "term " + lambda.to_string() + " exceeds degree");
    }
    for (const auto& lambda : partitions_of(k, ctx.n())) {
      if (!ctx.fits(lambda)) continue;
      const Poly c = power.at(lambda);
      const mpz_class f = oracle::syt_count(lambda.parts());
      const bool ok = c.is_constant() && !c.is_zero() && c.leading_term().second == f;
      report.expect(ok, "syt " + lambda.to_string(),
                    "top coefficient " + c.to_string() + ", SYT count " + f.get_str());
      Json item = Json::object();
      item["lambda"] = lambda.parts();
      item["coefficient"] = c.to_string();
      item["syt"] = f.get_str();
      counts.push_back(std::move(item));
    }
  }
  report.details["top_coefficients"] = std::move(counts);
  return report;
}

VerifyReport run_suite(std::string_view suite, const GrassContext& ctx) {
  if (suite == "pieri") return verify_pieri(ctx);
  if (suite == "positivity") return verify_positivity(ctx);
  if (suite == "specialize") return verify_specialize(ctx);
  if (suite == "intertwine") return verify_intertwine(ctx);
  if (suite == "syt") return verify_syt(ctx);
  throw UsageError("unknown suite \"" + std::string(suite) +
                   "\"; expected pieri, positivity, specialize, intertwine or syt");
}

Json to_json(const VerifyReport& report) {
  Json out = Json::object();
  out["suite"] = report.suite;
  out["n"] = report.n;
  out["m"] = report.m;
  out["passed"] = report.passed();
  out["checks"] = report.checks;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json item = Json::object();
    item["check"] = f.check;
    item["counterexample"] = f.detail;
    failures.push_back(std::move(item));
  }
  out["failures"] = std::move(failures);
  out["details"] = report.details;
  return out;
}

}  // namespace eqs
