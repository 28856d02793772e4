#include "eqschub/grass.hpp"

#include <algorithm>

#include "eqschub/errors.hpp"

namespace eqs {

GrassContext::GrassContext(std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (n == 0) throw UsageError("G(n,m) needs n >= 1");
  if (m < n) {
    throw UsageError("G(n,m) needs m >= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

void GrassContext::require_fits(const Partition& lambda) const {
  if (!fits(lambda)) {
    throw UsageError("partition " + lambda.to_string() + " does not fit in the " + std::to_string(n_) +
                     "x" + std::to_string(columns()) + " box of G(" + std::to_string(n_) + "," +
                     std::to_string(m_) + ")");
  }
}

bool StructureTable::all_positive() const {
  return std::all_of(entries.begin(), entries.end(), [](const StructureEntry& e) {
    return std::all_of(e.products.begin(), e.products.end(),
                       [](const StructureProduct& p) { return p.certificate.positive; });
  });
}

const StructureEntry* StructureTable::find(const Partition& lambda, const Partition& mu) const {
  for (const auto& e : entries) {
    if (e.lambda == lambda && e.mu == mu) return &e;
  }
  return nullptr;
}

SchurExpansion reduce_mod_Im(const SchurExpansion& e, const GrassContext& ctx) {
  if (e.n != ctx.n()) throw UsageError("expansion arity does not match G(n,m)");
  SchurExpansion out(e.n);
  for (const auto& [lambda, c] : e.coeffs) {
    if (!ctx.fits(lambda)) continue;
    out.accumulate(lambda, kill_t_above(c, static_cast<unsigned>(ctx.m())));
  }
  return out;
}

PositivityCertificate check_graham_positivity(const Poly& c, const GrassContext& ctx) {
  PositivityCertificate cert;
  const auto m = static_cast<unsigned>(ctx.m());
  try {
    cert.in_differences = to_difference_basis(c, m);
  } catch (const NotShiftInvariant& e) {
    cert.violation = e.what();
    return cert;
  }
  for (const auto& [mono, coeff] : cert.in_differences.terms()) {
    if (coeff < 0) {
      cert.violation = "negative coefficient " + coeff.get_str() + " on " +
                       Poly::monomial(mono).to_string('u');
      return cert;
    }
    for (auto [index, e] : mono.t_powers()) cert.differences_used.insert(index);
  }
  cert.positive = true;
  return cert;
}

SchubertRing::SchubertRing(GrassContext ctx) : ctx_(ctx), basis_(ctx.n()) {}

SchurExpansion SchubertRing::product(const Partition& lambda, const Partition& mu) {
  ctx_.require_fits(lambda);
  ctx_.require_fits(mu);
  Poly p = basis_.s(lambda) * basis_.s(mu);
  return reduce_mod_Im(basis_.expand_in_double_schur(p), ctx_);
}

SchurExpansion SchubertRing::product(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out(ctx_.n());
  for (const auto& [lambda, ca] : a.coeffs) {
    for (const auto& [mu, cb] : b.coeffs) out += product(lambda, mu).scale(ca * cb);
  }
  return reduce_mod_Im(out, ctx_);
}

SchurExpansion SchubertRing::sigma1_power(unsigned k) {
  SchurExpansion e = reduce_mod_Im(SchurExpansion::basis(Partition(), ctx_.n()), ctx_);
  for (unsigned i = 0; i < k; ++i) e = reduce_mod_Im(pieri_multiply(e), ctx_);
  return e;
}

StructureEntry SchubertRing::entry(const Partition& lambda, const Partition& mu) {
  StructureEntry out{lambda, mu, {}};
  for (auto& [nu, c] : product(lambda, mu).coeffs) {
    PositivityCertificate cert = check_graham_positivity(c, ctx_);
    out.products.push_back({nu, c, std::move(cert)});
  }
  return out;
}

SchurExpansion schubert_product(const Partition& lambda, const Partition& mu, const GrassContext& ctx) {
  return SchubertRing(ctx).product(lambda, mu);
}

SchurExpansion sigma1_power_expansion(unsigned k, const GrassContext& ctx) {
  return SchubertRing(ctx).sigma1_power(k);
}

unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long out = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

StructureTable full_structure_table(const GrassContext& ctx) {
  const auto size = binomial(ctx.m(), ctx.n());
  if (size > kMaxTableBasisSize) {
    throw ResourceGuard("refusing full table for G(" + std::to_string(ctx.n()) + "," +
                        std::to_string(ctx.m()) + "): binomial(m,n) = " + std::to_string(size) +
                        " exceeds " + std::to_string(kMaxTableBasisSize));
  }
  SchubertRing ring(ctx);
  StructureTable table{ctx.n(), ctx.m(), {}};
  const auto basis = ctx.basis();
  for (const auto& lambda : basis) {
    for (const auto& mu : basis) table.entries.push_back(ring.entry(lambda, mu));
  }
  return table;
}

}  // namespace eqs
