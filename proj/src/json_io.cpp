#include "eqschub/json_io.hpp"

#include <string>
#include <string_view>

#include "eqschub/errors.hpp"

namespace eqs {

namespace {

Json term_list(const Poly& p, const char* t_key) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json powers = Json::object();
    for (auto [index, e] : m.t_powers()) powers[std::to_string(index)] = e;
    Json term = Json::object();
    if (std::string_view(t_key) == "t") term["x"] = m.x_exponents();
    term[t_key] = std::move(powers);
    term["c"] = c.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

Json parts_json(const std::vector<unsigned>& parts) { return Json(parts); }

}  // namespace

Json to_json(const Poly& p) { return term_list(p, "t"); }

Poly poly_from_json(const Json& j, std::size_t arity) {
  if (!j.is_array()) throw UsageError("polynomial JSON must be an array of terms");
  std::vector<Poly::Term> terms;
  for (const auto& term : j) {
    auto x = term.at("x").get<std::vector<unsigned>>();
    if (x.size() != arity) throw UsageError("term x-exponent length does not match arity");
    std::vector<Monomial::TPower> t;
    for (const auto& [key, e] : term.at("t").items()) {
      t.emplace_back(static_cast<unsigned>(std::stoul(key)), e.get<unsigned>());
    }
    Integer c;
    if (c.set_str(term.at("c").get<std::string>(), 10) != 0) {
      throw UsageError("coefficient is not a decimal integer");
    }
    terms.emplace_back(Monomial(x, t), c);
  }
  return Poly::from_terms(arity, std::move(terms));
}

Json to_json(const SchurExpansion& e) {
  Json out = Json::object();
  out["n"] = e.n;
  Json terms = Json::array();
  for (const auto& [lambda, c] : e.coeffs) {
    Json term = Json::object();
    term["lambda"] = parts_json(lambda.parts());
    term["coeff"] = to_json(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

SchurExpansion schur_expansion_from_json(const Json& j) {
  SchurExpansion e(j.at("n").get<std::size_t>());
  for (const auto& term : j.at("terms")) {
    e.accumulate(Partition(term.at("lambda").get<std::vector<unsigned>>()),
                 poly_from_json(term.at("coeff"), 0));
  }
  return e;
}

Json to_json(const WedgeVector& w) {
  Json out = Json::object();
  out["n"] = w.n;
  out["m"] = w.m;
  Json terms = Json::array();
  for (const auto& [nu, c] : w.coords) {
    Json term = Json::object();
    term["nu"] = parts_json(nu.parts());
    term["coeff"] = to_json(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json certificate_json(const PositivityCertificate& cert) {
  if (!cert.positive) return nullptr;
  return term_list(cert.in_differences, "u");
}

Json to_json(const StructureEntry& entry, std::size_t n, std::size_t m) {
  Json out = Json::object();
  out["n"] = n;
  out["m"] = m;
  out["lambda"] = parts_json(entry.lambda.parts());
  out["mu"] = parts_json(entry.mu.parts());
  Json products = Json::array();
  for (const auto& p : entry.products) {
    Json item = Json::object();
    item["nu"] = parts_json(p.nu.parts());
    item["coeff"] = to_json(p.coeff);
    item["certificate"] = certificate_json(p.certificate);
    if (!p.certificate.positive) item["violation"] = p.certificate.violation;
    products.push_back(std::move(item));
  }
  out["products"] = std::move(products);
  return out;
}

Json to_json(const StructureTable& table) {
  Json out = Json::object();
  out["n"] = table.n;
  out["m"] = table.m;
  Json entries = Json::array();
  for (const auto& entry : table.entries) {
    Json e = to_json(entry, table.n, table.m);
    e.erase("n");
    e.erase("m");
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace eqs
