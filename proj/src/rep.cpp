#include "eqschub/rep.hpp"

#include <algorithm>

#include "eqschub/errors.hpp"

namespace eqs {

namespace {

void require_wedge_shape(const GLMatrix& x, const WedgeVector& w) {
  if (x.dimension() != w.m) {
    throw UsageError("matrix dimension " + std::to_string(x.dimension()) +
                     " does not match wedge ambient dimension " + std::to_string(w.m));
  }
}

// Sorts `slots` into strictly decreasing order. Returns the permutation sign,
// or 0 if two slots coincide.
int sort_with_sign(std::vector<unsigned>& slots) {
  int sign = 1;
  for (std::size_t i = 1; i < slots.size(); ++i) {
    for (std::size_t j = i; j > 0 && slots[j] >= slots[j - 1]; --j) {
      if (slots[j] == slots[j - 1]) return 0;
      std::swap(slots[j], slots[j - 1]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

// ---------------------------------------------------------------------------
// VElement / GLMatrix

VElement VElement::basis(std::size_t k, std::size_t m) {
  if (k >= m) throw UsageError("(x|t)^k with k >= m is zero in V");
  VElement v(m);
  v.coords[k] = Poly::constant(1);
  return v;
}

GLMatrix::GLMatrix(std::size_t m) : m_(m), entries_(m * m, Poly(0)) {
  if (m == 0) throw UsageError("matrix dimension must be positive");
}

GLMatrix GLMatrix::identity(std::size_t m) {
  GLMatrix out(m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = Poly::constant(1);
  return out;
}

GLMatrix GLMatrix::elementary(std::size_t i, std::size_t j, std::size_t m) {
  if (i == 0 || j == 0 || i > m || j > m) throw UsageError("elementary matrix index out of range");
  GLMatrix out(m);
  out(i - 1, j - 1) = Poly::constant(1);
  return out;
}

GLMatrix GLMatrix::diagonal(const std::vector<Poly>& entries) {
  GLMatrix out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

VElement GLMatrix::apply(const VElement& v) const {
  if (v.dimension() != m_) throw UsageError("vector dimension does not match matrix");
  VElement out(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    for (std::size_t c = 0; c < m_; ++c) {
      if (!(*this)(r, c).is_zero() && !v.coords[c].is_zero()) out.coords[r] += (*this)(r, c) * v.coords[c];
    }
  }
  return out;
}

GLMatrix& GLMatrix::operator+=(const GLMatrix& other) {
  if (other.m_ != m_) throw UsageError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

GLMatrix& GLMatrix::operator-=(const GLMatrix& other) {
  if (other.m_ != m_) throw UsageError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

GLMatrix operator*(const GLMatrix& a, const GLMatrix& b) {
  if (a.m_ != b.m_) throw UsageError("matrix dimension mismatch");
  GLMatrix out(a.m_);
  for (std::size_t r = 0; r < a.m_; ++r) {
    for (std::size_t k = 0; k < a.m_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < a.m_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

GLMatrix GLMatrix::scale(const Poly& c) const {
  GLMatrix out = *this;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

GLMatrix commutator(const GLMatrix& x, const GLMatrix& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// WedgeVector

WedgeVector WedgeVector::basis(const StrictSequence& nu, std::size_t m) {
  if (nu.length() == 0 || nu[0] >= m) {
    throw UsageError("wedge index " + nu.to_string() + " must have entries below " + std::to_string(m));
  }
  WedgeVector w(nu.length(), m);
  w.coords.emplace(nu, Poly::constant(1));
  return w;
}

void WedgeVector::accumulate(const StrictSequence& nu, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.try_emplace(nu, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coords.erase(it);
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& other) {
  for (const auto& [nu, c] : other.coords) accumulate(nu, c);
  return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& other) {
  for (const auto& [nu, c] : other.coords) accumulate(nu, -c);
  return *this;
}

// ---------------------------------------------------------------------------
// Weights

Coweight01 lambda_to_coweight(const Partition& lambda, const GrassContext& ctx) {
  ctx.require_fits(lambda);
  Coweight01 mu{std::vector<unsigned>(ctx.m(), 0)};
  const std::size_t n = ctx.n();
  for (std::size_t i = 1; i <= n; ++i) {
    mu.bits[lambda[i] + n - i] = 1;  // 1-based position lambda_i + n - i + 1
  }
  return mu;
}

Partition coweight_to_lambda(const Coweight01& mu, const GrassContext& ctx) {
  if (mu.bits.size() != ctx.m()) throw UsageError("coweight length must equal m");
  std::vector<unsigned> positions;
  for (std::size_t p = mu.bits.size(); p-- > 0;) {
    if (mu.bits[p] > 1) throw UsageError("coweight entries must be 0 or 1");
    if (mu.bits[p]) positions.push_back(static_cast<unsigned>(p));
  }
  if (positions.size() != ctx.n()) throw UsageError("coweight must have exactly n ones");
  return StrictSequence(positions).to_partition();
}

// ---------------------------------------------------------------------------
// Operators on V

VElement mult_by_x(const VElement& v) {
  const std::size_t m = v.dimension();
  VElement out(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (v.coords[k].is_zero()) continue;
    out.coords[k] -= Poly::t(static_cast<unsigned>(k + 1)) * v.coords[k];
    if (k + 1 < m) out.coords[k + 1] += v.coords[k];
  }
  return out;
}

GLMatrix mult_by_x_matrix(std::size_t m) {
  GLMatrix out(m);
  for (std::size_t k = 0; k < m; ++k) {
    VElement image = mult_by_x(VElement::basis(k, m));
    for (std::size_t r = 0; r < m; ++r) out(r, k) = image.coords[r];
  }
  return out;
}

GLMatrix multiplication_matrix(const VElement& f) {
  const std::size_t m = f.dimension();
  const GLMatrix x = mult_by_x_matrix(m);
  GLMatrix power = GLMatrix::identity(m);  // (M_x | t)^k
  GLMatrix out(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (k > 0) {
      power = power * (x + GLMatrix::identity(m).scale(Poly::t(static_cast<unsigned>(k))));
    }
    if (!f.coords[k].is_zero()) out += power.scale(f.coords[k]);
  }
  return out;
}

WedgeVector gl_action_on_wedge(const GLMatrix& x, const WedgeVector& w) {
  require_wedge_shape(x, w);
  WedgeVector out(w.n, w.m);
  for (const auto& [nu, c] : w.coords) {
    for (std::size_t slot = 0; slot < nu.length(); ++slot) {
      const unsigned source = nu[slot];
      for (std::size_t target = 0; target < w.m; ++target) {
        const Poly& entry = x(target, source);
        if (entry.is_zero()) continue;
        std::vector<unsigned> slots = nu.parts();
        slots[slot] = static_cast<unsigned>(target);
        const int sign = sort_with_sign(slots);
        if (sign == 0) continue;
        Poly term = entry * c;
        out.accumulate(StrictSequence(std::move(slots)), sign > 0 ? term : -term);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Phi

WedgeVector phi_forward(const SchurExpansion& e, const GrassContext& ctx) {
  if (e.n != ctx.n()) throw UsageError("expansion arity does not match G(n,m)");
  WedgeVector w(ctx.n(), ctx.m());
  for (const auto& [lambda, c] : e.coeffs) {
    ctx.require_fits(lambda);
    w.accumulate(StrictSequence::from_partition(lambda, ctx.n()), c);
  }
  return w;
}

SchurExpansion phi_backward(const WedgeVector& w) {
  SchurExpansion e(w.n);
  for (const auto& [nu, c] : w.coords) {
    if (nu.length() != w.n || nu[0] >= w.m) {
      throw UsageError("invalid wedge index " + nu.to_string());
    }
    e.accumulate(nu.to_partition(), c);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Centralizer action

Poly symmetric_sum(const VElement& f, std::size_t n) {
  Poly out(n);
  for (std::size_t var = 1; var <= n; ++var) {
    for (std::size_t k = 0; k < f.dimension(); ++k) {
      if (f.coords[k].is_zero()) continue;
      out += f.coords[k].with_arity(n) * double_monomial(static_cast<unsigned>(k), var, n);
    }
  }
  return out;
}

SchurExpansion centralizer_action_wedge(const VElement& f, const SchurExpansion& e, const GrassContext& ctx) {
  if (f.dimension() != ctx.m()) throw UsageError("V-element dimension must equal m");
  return phi_backward(gl_action_on_wedge(multiplication_matrix(f), phi_forward(e, ctx)));
}

SchurExpansion centralizer_action_poly(const VElement& f, const SchurExpansion& e, SchubertRing& ring) {
  const GrassContext& ctx = ring.context();
  if (f.dimension() != ctx.m()) throw UsageError("V-element dimension must equal m");
  DoubleSchurBasis& basis = ring.basis();
  const Poly p = symmetric_sum(f, ctx.n()) * basis.to_poly(e);
  return reduce_mod_Im(basis.expand_in_double_schur(p), ctx);
}

SchurExpansion centralizer_action(const VElement& f, const SchurExpansion& e, const GrassContext& ctx) {
  SchubertRing ring(ctx);
  SchurExpansion wedge_side = centralizer_action_wedge(f, e, ctx);
  SchurExpansion poly_side = centralizer_action_poly(f, e, ring);
  if (!(wedge_side == poly_side)) {
    throw InternalError("centralizer action: wedge and polynomial paths disagree");
  }
  return wedge_side;
}

}  // namespace eqs
