#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace eqs {

using Integer = mpz_class;

/// A monomial x_1^{a_1} ... x_n^{a_n} * t_{i_1}^{b_1} ... t_{i_k}^{b_k}.
///
/// The number of x-variables (the arity) is fixed per polynomial. The
/// t-variables are indexed by positive integers without an upper bound and
/// stored sparsely as (index, exponent) pairs with increasing index and
/// nonzero exponent.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  using TPower = std::pair<unsigned, unsigned>;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::span<const unsigned> x_exponents, std::span<const TPower> t_powers);

  static Monomial x_power(std::size_t arity, std::size_t var, unsigned exponent);
  static Monomial t_power(std::size_t arity, unsigned index, unsigned exponent);

  std::size_t arity() const { return arity_; }
  unsigned x(std::size_t var) const { return data_[var]; }
  unsigned t(unsigned index) const;
  std::size_t t_count() const { return (data_.size() - arity_) / 2; }
  TPower t_power_at(std::size_t k) const {
    return {data_[arity_ + 2 * k], data_[arity_ + 2 * k + 1]};
  }
  std::vector<TPower> t_powers() const;
  std::vector<unsigned> x_exponents() const;

  unsigned x_degree() const;
  unsigned t_degree() const;
  unsigned degree() const { return degree_; }
  bool is_t_only() const { return x_degree() == 0; }
  unsigned max_t_index() const {
    return t_count() == 0 ? 0 : data_[data_.size() - 2];
  }

  Monomial operator*(const Monomial& other) const;
  /// Returns true and writes the quotient if `divisor` divides *this.
  bool divide(const Monomial& divisor, Monomial& quotient) const;

  Monomial x_part() const;
  Monomial t_part() const;
  Monomial with_arity(std::size_t arity) const;
  Monomial swap_x(std::size_t i, std::size_t j) const;

  std::size_t hash() const;
  bool operator==(const Monomial&) const = default;

  // Raw storage: x exponents followed by flattened (index, exponent) pairs.
  std::span<const Exponent> raw() const { return {data_.data(), data_.size()}; }

 private:
  friend class Poly;
  void refresh_degree() { degree_ = x_degree() + t_degree(); }

  std::uint16_t arity_ = 0;
  unsigned degree_ = 0;
  boost::container::small_vector<Exponent, 14> data_;
};

/// Graded lexicographic comparison with x_1 > ... > x_n > t_1 > t_2 > ...
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b);

struct CanonicalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse polynomial in x_1..x_n and t_1, t_2, ... with integer coefficients.
///
/// Terms are kept sorted in descending canonical order with no zero
/// coefficients, so equal polynomials compare equal term by term. A poly of
/// arity 0 has no x-variables and serves as a coefficient in Z[t_1, t_2, ...].
class Poly {
 public:
  using Term = std::pair<Monomial, Integer>;

  Poly() = default;
  explicit Poly(std::size_t arity) : arity_(arity) {}

  static Poly constant(const Integer& c, std::size_t arity = 0);
  /// x_var with var 1-based.
  static Poly x(std::size_t var, std::size_t arity);
  static Poly t(unsigned index, std::size_t arity = 0);
  static Poly monomial(const Monomial& m, const Integer& c = 1);
  /// Combines like terms, drops zeros and sorts.
  static Poly from_terms(std::size_t arity, std::vector<Term> terms);
  /// Terms must already be strictly descending with nonzero coefficients.
  static Poly from_sorted_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const& { return terms_; }
  // A span into a temporary would dangle, e.g. in a range-for.
  std::span<const Term> terms() && = delete;
  const Term& leading_term() const { return terms_.front(); }

  bool is_t_only() const;
  bool is_constant() const;
  unsigned max_t_index() const;
  unsigned total_degree() const;
  /// Coefficient of an exact monomial, zero if absent.
  Integer coefficient(const Monomial& m) const;

  Poly with_arity(std::size_t arity) const;
  Poly swap_x(std::size_t i, std::size_t j) const;
  /// True iff swap_x(i, j) == sign * (*this), without building the swap.
  bool swap_x_equals(std::size_t i, std::size_t j, int sign) const;
  Poly scale(const Integer& c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  bool operator==(const Poly& other) const;

  /// Human-readable form, e.g. "x1^2 + t1*x1 - 3*t2".
  std::string to_string(char t_name = 't') const;

 private:
  void add_scaled(const Poly& other, int sign);

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly pow(const Poly& p, unsigned k);

/// Returns q with q * d == p; throws NotDivisible if d does not divide p.
Poly exact_div(const Poly& p, const Poly& d);

/// Image of p under t_i -> 0 for all i > m.
Poly kill_t_above(const Poly& p, unsigned m);

/// Rewrites a polynomial in t_1..t_m through t_i = u_i + ... + u_{m-1} + t_m.
///
/// Succeeds iff the result has no t_m left, i.e. p is invariant under the
/// common shift t_i -> t_i + c. The returned arity-0 poly uses t_i to stand
/// for u_i = t_i - t_{i+1}. Throws NotShiftInvariant otherwise.
Poly to_difference_basis(const Poly& p, unsigned m);

/// Substitutes u_i = t_i - t_{i+1}; inverse of to_difference_basis.
Poly from_difference_basis(const Poly& u_poly);

}  // namespace eqs
