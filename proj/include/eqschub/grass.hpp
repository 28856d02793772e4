#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqschub/partition.hpp"
#include "eqschub/poly.hpp"
#include "eqschub/schur.hpp"

namespace eqs {

/// The Grassmannian G(n, m) of n-planes in m-space, 1 <= n <= m.
class GrassContext {
 public:
  GrassContext(std::size_t n, std::size_t m);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  unsigned columns() const { return static_cast<unsigned>(m_ - n_); }

  bool fits(const Partition& lambda) const { return lambda.fits_box(n_, columns()); }
  /// Throws UsageError if lambda is outside the n x (m-n) box.
  void require_fits(const Partition& lambda) const;
  /// Schubert basis indices in increasing lex order.
  std::vector<Partition> basis() const { return partitions_in_box(n_, columns()); }

  bool operator==(const GrassContext&) const = default;

 private:
  std::size_t n_;
  std::size_t m_;
};

/// Outcome of a positivity check on one structure constant.
struct PositivityCertificate {
  bool positive = false;
  /// The coefficient rewritten in u_i = t_i - t_{i+1} (u_i printed as t_i).
  Poly in_differences{0};
  /// Indices i of the differences u_i that actually occur.
  std::set<unsigned> differences_used;
  /// Empty when positive; otherwise names the offending monomial.
  std::string violation;
};

struct StructureProduct {
  Partition nu;
  Poly coeff{0};
  PositivityCertificate certificate;
};

struct StructureEntry {
  Partition lambda;
  Partition mu;
  std::vector<StructureProduct> products;  // increasing nu
};

struct StructureTable {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<StructureEntry> entries;  // (lambda, mu) in increasing lex order

  bool all_positive() const;
  const StructureEntry* find(const Partition& lambda, const Partition& mu) const;
};

/// Largest binomial(m, n) for which full_structure_table agrees to run.
inline constexpr unsigned long long kMaxTableBasisSize = 256;

/// Image of an expansion in Lambda_{n,m}: drops s_lambda outside the box
/// and sets t_i = 0 for i > m in the surviving coefficients.
SchurExpansion reduce_mod_Im(const SchurExpansion& e, const GrassContext& ctx);

PositivityCertificate check_graham_positivity(const Poly& c, const GrassContext& ctx);

/// Computes products and sigma_1 powers in Lambda_{n,m}, reusing one basis
/// cache across calls.
class SchubertRing {
 public:
  explicit SchubertRing(GrassContext ctx);

  const GrassContext& context() const { return ctx_; }
  DoubleSchurBasis& basis() { return basis_; }

  /// Structure constants c_{lambda mu}^nu of sigma_lambda * sigma_mu.
  SchurExpansion product(const Partition& lambda, const Partition& mu);
  /// Product of two arbitrary elements of Lambda_{n,m}.
  SchurExpansion product(const SchurExpansion& a, const SchurExpansion& b);
  /// (x_1 + ... + x_n)^k expanded in Lambda_{n,m}.
  SchurExpansion sigma1_power(unsigned k);
  StructureEntry entry(const Partition& lambda, const Partition& mu);

 private:
  GrassContext ctx_;
  DoubleSchurBasis basis_;
};

SchurExpansion schubert_product(const Partition& lambda, const Partition& mu, const GrassContext& ctx);
SchurExpansion sigma1_power_expansion(unsigned k, const GrassContext& ctx);
/// Throws ResourceGuard if binomial(m, n) exceeds kMaxTableBasisSize.
StructureTable full_structure_table(const GrassContext& ctx);

unsigned long long binomial(unsigned long long n, unsigned long long k);

}  // namespace eqs
