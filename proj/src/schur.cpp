#include "eqschub/schur.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "eqschub/errors.hpp"

namespace eqs {

namespace {

void require_arity(std::size_t n) {
  if (n == 0) throw UsageError("the number of x-variables must be at least 1");
}

// Splits p into x-exponent groups with t-only (arity 0) coefficients.
std::map<std::vector<unsigned>, std::vector<Poly::Term>, std::greater<>> split_by_x(const Poly& p) {
  std::map<std::vector<unsigned>, std::vector<Poly::Term>, std::greater<>> raw;
  for (const auto& [m, c] : p.terms()) {
    raw[m.x_exponents()].emplace_back(m.t_part().with_arity(0), c);
  }
  return raw;
}

std::string show_exponents(const std::vector<unsigned>& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// SchurExpansion

SchurExpansion SchurExpansion::basis(const Partition& lambda, std::size_t n) {
  SchurExpansion e(n);
  e.coeffs.emplace(lambda, Poly::constant(1));
  return e;
}

Poly SchurExpansion::at(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? Poly(0) : it->second;
}

void SchurExpansion::accumulate(const Partition& lambda, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
  for (const auto& [lambda, c] : other.coeffs) accumulate(lambda, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& other) {
  for (const auto& [lambda, c] : other.coeffs) accumulate(lambda, -c);
  return *this;
}

SchurExpansion SchurExpansion::scale(const Poly& c) const {
  SchurExpansion out(n);
  for (const auto& [lambda, coeff] : coeffs) out.accumulate(lambda, coeff * c);
  return out;
}

// ---------------------------------------------------------------------------
// DoubleSchurBasis

DoubleSchurBasis::DoubleSchurBasis(std::size_t n) : n_(n), monomials_(n) { require_arity(n); }

const Poly& DoubleSchurBasis::double_monomial(unsigned k, std::size_t var) {
  auto& cache = monomials_.at(var - 1);
  if (cache.empty()) cache.push_back(Poly::constant(1, n_));
  while (cache.size() <= k) {
    const unsigned next = static_cast<unsigned>(cache.size());
    cache.push_back(cache.back() * (Poly::x(var, n_) + Poly::t(next, n_)));
  }
  return cache[k];
}

// Rewrites coordinates one variable at a time, between the monomial basis
// x^e and the product basis (x_1|t)^{e_1} ... (x_n|t)^{e_n}. Each variable is
// handled by Horner's rule, so only multiplications by a single t_i occur:
//   x (x|t)^j = (x|t)^{j+1} - t_{j+1} (x|t)^j,   (x|t)^{j+1} = (x + t_{j+1}) (x|t)^j.
DoubleSchurBasis::XGroups DoubleSchurBasis::change_basis(XGroups groups, bool to_double) {
  for (std::size_t var = 0; var < n_; ++var) {
    std::map<std::vector<unsigned>, std::vector<Poly>> columns;
    for (auto& [key, c] : groups) {
      std::vector<unsigned> rest = key;
      rest[var] = 0;
      auto& column = columns[rest];
      if (column.size() <= key[var]) column.resize(key[var] + 1, Poly(0));
      column[key[var]] = std::move(c);
    }
    XGroups next;
    for (auto& [rest, column] : columns) {
      std::vector<Poly> acc;
      for (std::size_t k = column.size(); k-- > 0;) {
        std::vector<Poly> shifted(acc.size() + 1, Poly(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
          if (acc[j].is_zero()) continue;
          shifted[j + 1] += acc[j];
          // to_double: multiply by x; otherwise multiply by (x + t_{k+1}).
          const unsigned index = static_cast<unsigned>(to_double ? j + 1 : k + 1);
          const Poly tj = acc[j] * Poly::t(index);
          if (to_double) {
            shifted[j] -= tj;
          } else {
            shifted[j] += tj;
          }
        }
        if (acc.empty()) shifted.resize(1, Poly(0));
        shifted[0] += column[k];
        acc = std::move(shifted);
      }
      std::vector<unsigned> target = rest;
      for (std::size_t j = 0; j < acc.size(); ++j) {
        if (acc[j].is_zero()) continue;
        target[var] = static_cast<unsigned>(j);
        next.emplace(target, std::move(acc[j]));
      }
    }
    groups = std::move(next);
  }
  return groups;
}

Poly DoubleSchurBasis::compute_a_nu(const StrictSequence& nu) {
  if (nu.length() != n_) {
    throw UsageError("a_nu needs a sequence of length " + std::to_string(n_) + ", got " +
                     nu.to_string());
  }
  // Leibniz expansion of det((x_i|t)^{nu_j}): in the product basis each
  // permutation contributes a single signed term.
  XGroups product;
  std::vector<std::size_t> perm(n_);
  for (std::size_t i = 0; i < n_; ++i) perm[i] = i;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) inversions += perm[i] > perm[j];
    }
    std::vector<unsigned> key(n_);
    for (std::size_t i = 0; i < n_; ++i) key[i] = nu[perm[i]];
    product.emplace(std::move(key), Poly::constant(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Poly::Term> terms;
  for (auto& [key, c] : change_basis(std::move(product), false)) {
    const Monomial x(key, {});
    for (const auto& [m, coeff] : c.terms()) terms.emplace_back(x * m.with_arity(n_), coeff);
  }
  return Poly::from_terms(n_, std::move(terms));
}

const Poly& DoubleSchurBasis::a_nu(const StrictSequence& nu) {
  auto it = a_nu_.find(nu);
  if (it == a_nu_.end()) it = a_nu_.emplace(nu, compute_a_nu(nu)).first;
  return it->second;
}

const Poly& DoubleSchurBasis::a_rho() { return a_nu(StrictSequence::rho(n_)); }

const Poly& DoubleSchurBasis::s(const Partition& lambda) {
  auto it = s_.find(lambda);
  if (it != s_.end()) return it->second;
  Poly q = exact_div(a_nu(StrictSequence::from_partition(lambda, n_)), a_rho());
  if (!is_symmetric(q)) {
    throw InternalError("double Schur polynomial for " + lambda.to_string() + " is not symmetric");
  }
  return s_.emplace(lambda, std::move(q)).first->second;
}

AnuExpansion DoubleSchurBasis::expand_in_anu(const Poly& p) {
  if (p.arity() != n_) throw UsageError("polynomial arity does not match the basis arity");
  if (!is_skew_symmetric(p)) throw UsageError("expand_in_anu: input is not skew-symmetric");

  XGroups remainder;
  for (auto& [key, terms] : split_by_x(p)) {
    remainder.emplace(key, Poly::from_sorted_terms(0, std::move(terms)));
  }
  // In the product basis a_nu is the signed orbit of (x|t)^nu, and (x|t)^nu
  // leads it in lex order; peeling off leading terms is a unitriangular solve.
  remainder = change_basis(std::move(remainder), true);

  AnuExpansion out;
  std::vector<std::size_t> perm(n_);
  while (!remainder.empty()) {
    const std::vector<unsigned> lead = remainder.begin()->first;
    const Poly c = remainder.begin()->second;
    for (std::size_t i = 1; i < lead.size(); ++i) {
      if (lead[i] >= lead[i - 1]) {
        throw InternalError("expand_in_anu: leading exponent " + show_exponents(lead) +
                            " is not strictly decreasing");
      }
    }
    for (std::size_t i = 0; i < n_; ++i) perm[i] = i;
    do {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) inversions += perm[i] > perm[j];
      }
      std::vector<unsigned> key(n_);
      for (std::size_t i = 0; i < n_; ++i) key[i] = lead[perm[i]];
      auto [slot, inserted] = remainder.try_emplace(std::move(key), 0);
      if (inversions % 2) {
        slot->second += c;
      } else {
        slot->second -= c;
      }
      if (slot->second.is_zero()) remainder.erase(slot);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.emplace(StrictSequence(lead), c);
  }
  return out;
}

SchurExpansion DoubleSchurBasis::expand_in_double_schur(const Poly& p) {
  if (p.arity() != n_) throw UsageError("polynomial arity does not match the basis arity");
  if (!is_symmetric(p)) throw UsageError("expand_in_double_schur: input is not symmetric");
  SchurExpansion out(n_);
  for (auto& [nu, c] : expand_in_anu(p * a_rho())) {
    out.coeffs.emplace(nu.to_partition(), std::move(c));
  }
  return out;
}

Poly DoubleSchurBasis::to_poly(const SchurExpansion& e) {
  if (e.n != n_) throw UsageError("expansion arity does not match the basis arity");
  Poly out(n_);
  for (const auto& [lambda, c] : e.coeffs) out += c.with_arity(n_) * s(lambda);
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

Poly double_monomial(unsigned k, std::size_t var, std::size_t arity) {
  if (var == 0 || var > arity) throw UsageError("x-variable index out of range");
  Poly out = Poly::constant(1, arity);
  for (unsigned i = 1; i <= k; ++i) out *= Poly::x(var, arity) + Poly::t(i, arity);
  return out;
}

Poly sum_of_x(std::size_t n) {
  require_arity(n);
  Poly out(n);
  for (std::size_t i = 1; i <= n; ++i) out += Poly::x(i, n);
  return out;
}

Poly a_nu(const StrictSequence& nu, std::size_t n) { return DoubleSchurBasis(n).a_nu(nu); }

Poly double_schur(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) {
    throw UsageError("partition " + lambda.to_string() + " has more than " + std::to_string(n) +
                     " parts");
  }
  return DoubleSchurBasis(n).s(lambda);
}

bool is_symmetric(const Poly& p) {
  for (std::size_t i = 1; i < p.arity(); ++i) {
    if (!p.swap_x_equals(i, i + 1, 1)) return false;
  }
  return true;
}

bool is_skew_symmetric(const Poly& p) {
  for (std::size_t i = 1; i < p.arity(); ++i) {
    if (!p.swap_x_equals(i, i + 1, -1)) return false;
  }
  return true;
}

AnuExpansion expand_in_anu(const Poly& p, std::size_t n) { return DoubleSchurBasis(n).expand_in_anu(p); }

SchurExpansion expand_in_double_schur(const Poly& p, std::size_t n) {
  return DoubleSchurBasis(n).expand_in_double_schur(p);
}

SchurExpansion pieri_multiply(const Partition& lambda, std::size_t n) {
  require_arity(n);
  if (lambda.length() > n) {
    throw UsageError("partition " + lambda.to_string() + " has more than " + std::to_string(n) +
                     " parts");
  }
  SchurExpansion out(n);
  Poly diagonal(0);
  for (std::size_t i = 1; i <= n; ++i) {
    diagonal -= Poly::t(lambda[i] + static_cast<unsigned>(n - i + 1));
  }
  out.accumulate(lambda, diagonal);
  for (const auto& grown : lambda.add_box(n)) out.accumulate(grown, Poly::constant(1));
  return out;
}

SchurExpansion pieri_multiply(const SchurExpansion& e) {
  SchurExpansion out(e.n);
  for (const auto& [lambda, c] : e.coeffs) out += pieri_multiply(lambda, e.n).scale(c);
  return out;
}

}  // namespace eqs
