#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "eqschub/partition.hpp"
#include "eqschub/poly.hpp"

namespace eqs {

/// Coordinates of a symmetric polynomial in the double Schur basis.
/// Coefficients are arity-0 (t-only) polynomials; zeros are never stored.
struct SchurExpansion {
  std::size_t n = 0;
  std::map<Partition, Poly> coeffs;

  SchurExpansion() = default;
  explicit SchurExpansion(std::size_t arity) : n(arity) {}
  static SchurExpansion basis(const Partition& lambda, std::size_t n);

  bool empty() const { return coeffs.empty(); }
  /// Coefficient of s_lambda, zero if absent.
  Poly at(const Partition& lambda) const;
  /// Adds c to the coefficient of s_lambda.
  void accumulate(const Partition& lambda, const Poly& c);

  SchurExpansion& operator+=(const SchurExpansion& other);
  SchurExpansion& operator-=(const SchurExpansion& other);
  SchurExpansion scale(const Poly& c) const;
  bool operator==(const SchurExpansion& other) const = default;
};

using AnuExpansion = std::map<StrictSequence, Poly>;

/// (x|t)^k = (x + t_1)...(x + t_k) in the variable x_var (1-based) of an
/// arity-`arity` polynomial ring.
Poly double_monomial(unsigned k, std::size_t var = 1, std::size_t arity = 1);

/// x_1 + ... + x_n.
Poly sum_of_x(std::size_t n);

/// det((x_i|t)^{nu_j}) for a strictly decreasing nu of length n.
Poly a_nu(const StrictSequence& nu, std::size_t n);

/// s_lambda(x|t) = a_{lambda+rho} / a_rho.
Poly double_schur(const Partition& lambda, std::size_t n);

bool is_symmetric(const Poly& p);
bool is_skew_symmetric(const Poly& p);

/// Unique expansion p = sum c_nu a_nu of a skew-symmetric polynomial.
AnuExpansion expand_in_anu(const Poly& p, std::size_t n);

/// Unique expansion p = sum c_lambda s_lambda of a symmetric polynomial.
SchurExpansion expand_in_double_schur(const Poly& p, std::size_t n);

/// Expansion of (x_1 + ... + x_n) * s_lambda by the Pieri rule.
SchurExpansion pieri_multiply(const Partition& lambda, std::size_t n);

/// Applies pieri_multiply linearly to every term of e.
SchurExpansion pieri_multiply(const SchurExpansion& e);

/// Memoizing evaluator for a_nu and s_lambda at a fixed arity.
///
/// Expansion against many basis elements recomputes the same determinants
/// over and over; this object keeps them. It is a plain value owned by the
/// caller and is not safe to share between threads without external locking.
class DoubleSchurBasis {
 public:
  explicit DoubleSchurBasis(std::size_t n);

  std::size_t n() const { return n_; }
  const Poly& double_monomial(unsigned k, std::size_t var);
  const Poly& a_nu(const StrictSequence& nu);
  const Poly& a_rho();
  const Poly& s(const Partition& lambda);

  AnuExpansion expand_in_anu(const Poly& p);
  SchurExpansion expand_in_double_schur(const Poly& p);
  /// sum c_lambda s_lambda as an arity-n polynomial.
  Poly to_poly(const SchurExpansion& e);

 private:
  using XGroups = std::map<std::vector<unsigned>, Poly, std::greater<>>;
  Poly compute_a_nu(const StrictSequence& nu);
  XGroups change_basis(XGroups groups, bool to_double);

  std::size_t n_;
  std::vector<std::vector<Poly>> monomials_;  // [var][k]
  std::map<StrictSequence, Poly> a_nu_;
  std::map<Partition, Poly> s_;
};

}  // namespace eqs
