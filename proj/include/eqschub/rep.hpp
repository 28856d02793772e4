#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eqschub/grass.hpp"
#include "eqschub/partition.hpp"
#include "eqschub/poly.hpp"
#include "eqschub/schur.hpp"

namespace eqs {

/// Element of V = R_T[x] / (x|t)^m in the basis (x|t)^0, ..., (x|t)^{m-1}.
struct VElement {
  std::vector<Poly> coords;

  VElement() = default;
  explicit VElement(std::size_t m) : coords(m, Poly(0)) {}
  /// The basis vector (x|t)^k.
  static VElement basis(std::size_t k, std::size_t m);

  std::size_t dimension() const { return coords.size(); }
  bool operator==(const VElement&) const = default;
};

/// m x m matrix over R_T. Column j holds the image of (x|t)^j, so the
/// elementary matrix E_{ij} sends (x|t)^{j-1} to (x|t)^{i-1}.
class GLMatrix {
 public:
  explicit GLMatrix(std::size_t m);

  static GLMatrix identity(std::size_t m);
  /// E_{ij}, 1-based.
  static GLMatrix elementary(std::size_t i, std::size_t j, std::size_t m);
  static GLMatrix diagonal(const std::vector<Poly>& entries);

  std::size_t dimension() const { return m_; }
  Poly& operator()(std::size_t row, std::size_t col) { return entries_[row * m_ + col]; }
  const Poly& operator()(std::size_t row, std::size_t col) const { return entries_[row * m_ + col]; }

  VElement apply(const VElement& v) const;

  GLMatrix& operator+=(const GLMatrix& other);
  GLMatrix& operator-=(const GLMatrix& other);
  friend GLMatrix operator+(GLMatrix a, const GLMatrix& b) { return a += b; }
  friend GLMatrix operator-(GLMatrix a, const GLMatrix& b) { return a -= b; }
  friend GLMatrix operator*(const GLMatrix& a, const GLMatrix& b);
  GLMatrix scale(const Poly& c) const;
  bool operator==(const GLMatrix&) const = default;

 private:
  std::size_t m_;
  std::vector<Poly> entries_;
};

/// [X, Y] = XY - YX.
GLMatrix commutator(const GLMatrix& x, const GLMatrix& y);

/// Element of the n-th exterior power of V in the basis
/// (x|t)^{nu_1} ^ ... ^ (x|t)^{nu_n} with m > nu_1 > ... > nu_n >= 0.
struct WedgeVector {
  std::size_t n = 0;
  std::size_t m = 0;
  std::map<StrictSequence, Poly> coords;

  WedgeVector() = default;
  WedgeVector(std::size_t n_, std::size_t m_) : n(n_), m(m_) {}
  static WedgeVector basis(const StrictSequence& nu, std::size_t m);

  void accumulate(const StrictSequence& nu, const Poly& c);
  WedgeVector& operator+=(const WedgeVector& other);
  WedgeVector& operator-=(const WedgeVector& other);
  bool operator==(const WedgeVector&) const = default;
};

/// 0/1 vector of length m with exactly n ones.
struct Coweight01 {
  std::vector<unsigned> bits;
  bool operator==(const Coweight01&) const = default;
  auto operator<=>(const Coweight01&) const = default;
};

/// Ones exactly at positions lambda_i + n - i + 1 (1-based).
Coweight01 lambda_to_coweight(const Partition& lambda, const GrassContext& ctx);
Partition coweight_to_lambda(const Coweight01& mu, const GrassContext& ctx);

/// Multiplication by x on V: (x|t)^k -> (x|t)^{k+1} - t_{k+1} (x|t)^k, with
/// (x|t)^m = 0.
VElement mult_by_x(const VElement& v);
/// Matrix of mult_by_x; equal to -e_T.
GLMatrix mult_by_x_matrix(std::size_t m);
/// Matrix of multiplication by f on V, evaluated as f(M_x) with
/// (x|t)^k -> (M_x + t_1)...(M_x + t_k).
GLMatrix multiplication_matrix(const VElement& f);

/// Leibniz action X(v_1 ^ ... ^ v_n) = sum_i v_1 ^ ... ^ X v_i ^ ... ^ v_n.
WedgeVector gl_action_on_wedge(const GLMatrix& x, const WedgeVector& w);

/// s_lambda -> basis wedge vector lambda + rho.
WedgeVector phi_forward(const SchurExpansion& e, const GrassContext& ctx);
SchurExpansion phi_backward(const WedgeVector& w);

/// f(x_1) + ... + f(x_n) as a symmetric arity-n polynomial.
Poly symmetric_sum(const VElement& f, std::size_t n);

/// Action of the centralizer element f on Lambda_{n,m} through the wedge
/// model: multiplication matrix, Leibniz action, pulled back through Phi.
SchurExpansion centralizer_action_wedge(const VElement& f, const SchurExpansion& e, const GrassContext& ctx);
/// The same action computed as multiplication by f(x_1) + ... + f(x_n).
SchurExpansion centralizer_action_poly(const VElement& f, const SchurExpansion& e, SchubertRing& ring);

/// Runs both paths and throws InternalError if they disagree.
SchurExpansion centralizer_action(const VElement& f, const SchurExpansion& e, const GrassContext& ctx);

}  // namespace eqs
