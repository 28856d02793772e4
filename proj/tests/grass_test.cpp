#include <gtest/gtest.h>

#include "eqschub/errors.hpp"
#include "eqschub/grass.hpp"
#include "eqschub/oracles.hpp"
#include "support.hpp"

using namespace eqs;
using namespace eqs::testing;

namespace {

SchurExpansion single(const Partition& lambda, const Poly& c, std::size_t n) {
  SchurExpansion e(n);
  e.accumulate(lambda, c);
  return e;
}

SchurExpansion random_in_box(std::mt19937& rng, const GrassContext& ctx, int terms) {
  const auto box = ctx.basis();
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  SchurExpansion e(ctx.n());
  for (int k = 0; k < terms; ++k) e.accumulate(box[pick(rng)], random_poly(rng, 0, ctx.m(), 2, 1));
  return e;
}

}  // namespace

TEST(GrassContext, Validation) {
  EXPECT_THROW(GrassContext(0, 3), UsageError);
  EXPECT_THROW(GrassContext(3, 2), UsageError);
  const GrassContext ctx(2, 4);
  EXPECT_EQ(ctx.columns(), 2u);
  EXPECT_EQ(ctx.basis().size(), 6u);
  EXPECT_TRUE(ctx.fits(Partition{2, 2}));
  EXPECT_FALSE(ctx.fits(Partition{3}));
  EXPECT_THROW(ctx.require_fits(Partition{1, 1, 1}), UsageError);
  EXPECT_EQ(GrassContext(3, 3).basis().size(), 1u);
}

TEST(ReduceModIm, DropsIdealGenerators) {
  const GrassContext ctx(2, 4);
  EXPECT_TRUE(reduce_mod_Im(single(Partition{3}, C(1), 2), ctx).empty());
  EXPECT_TRUE(reduce_mod_Im(single(Partition(), T(5), 2), ctx).empty());
  const SchurExpansion mixed = single(Partition{1}, T(1) + T(5) * T(2), 2);
  EXPECT_EQ(reduce_mod_Im(mixed, ctx), single(Partition{1}, T(1), 2));
}

TEST(ReduceModIm, Idempotent) {
  std::mt19937 rng(31);
  const GrassContext wide(2, 6), ctx(2, 4);
  for (int round = 0; round < 10; ++round) {
    const SchurExpansion e = random_in_box(rng, wide, 5);
    EXPECT_EQ(reduce_mod_Im(reduce_mod_Im(e, ctx), ctx), reduce_mod_Im(e, ctx));
  }
}

TEST(ReduceModIm, IdealIsCompatibleWithProducts) {
  // reduce(p q) == reduce(reduce(p) reduce(q)) with products taken in Lambda_n.
  std::mt19937 rng(37);
  const GrassContext ctx(2, 4);
  DoubleSchurBasis basis(2);
  const GrassContext source(2, 6);
  for (int round = 0; round < 6; ++round) {
    const SchurExpansion p = random_in_box(rng, source, 2);
    const SchurExpansion q = random_in_box(rng, source, 2);
    auto lambda_n_product = [&](const SchurExpansion& a, const SchurExpansion& b) {
      return basis.expand_in_double_schur(basis.to_poly(a) * basis.to_poly(b));
    };
    EXPECT_EQ(reduce_mod_Im(lambda_n_product(p, q), ctx),
              reduce_mod_Im(lambda_n_product(reduce_mod_Im(p, ctx), reduce_mod_Im(q, ctx)), ctx));
  }
}

TEST(SchubertProduct, Unit) {
  const GrassContext ctx(2, 5);
  for (const auto& lambda : ctx.basis()) {
    EXPECT_EQ(schubert_product(Partition(), lambda, ctx), SchurExpansion::basis(lambda, 2));
  }
}

TEST(SchubertProduct, ProjectiveLine) {
  // (x+t1)^2 = (x+t1)(x+t2) + (t1-t2)(x+t1) in G(1,2).
  EXPECT_EQ(schubert_product(Partition{1}, Partition{1}, GrassContext(1, 2)),
            single(Partition{1}, T(1) - T(2), 1));
}

TEST(SchubertProduct, SigmaOneSquaredInG24) {
  const GrassContext ctx(2, 4);
  SchurExpansion expected(2);
  expected.accumulate(Partition{2}, C(1));
  expected.accumulate(Partition{1, 1}, C(1));
  expected.accumulate(Partition{1}, T(2) - T(3));
  EXPECT_EQ(schubert_product(Partition{1}, Partition{1}, ctx), expected);

  SchurExpansion classical(2);
  for (const auto& [nu, c] : expected.coeffs) {
    const Poly k = kill_t_above(c, 0);
    if (!k.is_zero()) classical.accumulate(nu, k);
  }
  EXPECT_EQ(classical.coeffs.size(), 2u);
  EXPECT_EQ(classical.at(Partition{2}), C(1));
  EXPECT_EQ(classical.at(Partition{1, 1}), C(1));
}

TEST(SchubertProduct, OutOfBoxIsUsageError) {
  EXPECT_THROW(schubert_product(Partition{3}, Partition{1}, GrassContext(2, 4)), UsageError);
  EXPECT_THROW(schubert_product(Partition{1, 1, 1}, Partition{1}, GrassContext(2, 4)), UsageError);
}

TEST(SchubertProduct, CommutativeAndAssociativeInG24) {
  const GrassContext ctx(2, 4);
  SchubertRing ring(ctx);
  const auto box = ctx.basis();
  for (const auto& a : box) {
    for (const auto& b : box) EXPECT_EQ(ring.product(a, b), ring.product(b, a));
  }
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int round = 0; round < 12; ++round) {
    const auto a = SchurExpansion::basis(box[pick(rng)], 2);
    const auto b = SchurExpansion::basis(box[pick(rng)], 2);
    const auto c = SchurExpansion::basis(box[pick(rng)], 2);
    EXPECT_EQ(ring.product(ring.product(a, b), c), ring.product(a, ring.product(b, c)));
  }
}

TEST(SchubertProduct, HomogeneousOfExpectedDegree) {
  const GrassContext ctx(2, 5);
  SchubertRing ring(ctx);
  for (const auto& lambda : ctx.basis()) {
    for (const auto& mu : ctx.basis()) {
      for (const auto& [nu, c] : ring.product(lambda, mu).coeffs) {
        ASSERT_LE(nu.size(), lambda.size() + mu.size());
        const unsigned degree = lambda.size() + mu.size() - nu.size();
        for (const auto& [m, coeff] : c.terms()) EXPECT_EQ(m.degree(), degree);
        EXPECT_LE(c.max_t_index(), ctx.m());
      }
    }
  }
}

TEST(SchubertProduct, SpecializesToLittlewoodRichardson) {
  const GrassContext ctx(2, 4);
  SchubertRing ring(ctx);
  for (const auto& lambda : ctx.basis()) {
    for (const auto& mu : ctx.basis()) {
      const SchurExpansion product = ring.product(lambda, mu);
      for (const auto& nu : ctx.basis()) {
        const Poly c = kill_t_above(product.at(nu), 0);
        const mpz_class expected = oracle::lr_coefficient(lambda.parts(), mu.parts(), nu.parts());
        EXPECT_EQ(c, Poly::constant(expected)) << lambda.to_string() << mu.to_string() << nu.to_string();
      }
    }
  }
}

TEST(Positivity, Examples) {
  const GrassContext ctx(2, 4);
  const auto cert = check_graham_positivity(T(1) - T(2), ctx);
  EXPECT_TRUE(cert.positive);
  EXPECT_EQ(cert.in_differences, T(1));
  EXPECT_EQ(cert.differences_used, (std::set<unsigned>{1}));

  const auto one = check_graham_positivity(C(1), ctx);
  EXPECT_TRUE(one.positive);
  EXPECT_EQ(one.in_differences, C(1));
  EXPECT_TRUE(one.differences_used.empty());

  const auto negative = check_graham_positivity(T(2) - T(1), ctx);
  EXPECT_FALSE(negative.positive);
  EXPECT_FALSE(negative.violation.empty());

  const auto unshifted = check_graham_positivity(T(1) + T(2), ctx);
  EXPECT_FALSE(unshifted.positive);
  EXPECT_FALSE(unshifted.violation.empty());

  // t1 - t3 = u1 + u2
  const auto wide = check_graham_positivity(T(1) - T(3), ctx);
  EXPECT_TRUE(wide.positive);
  EXPECT_EQ(wide.differences_used, (std::set<unsigned>{1, 2}));
}

TEST(Positivity, SigmaOneSquaredCertificate) {
  const GrassContext ctx(2, 4);
  SchubertRing ring(ctx);
  const StructureEntry entry = ring.entry(Partition{1}, Partition{1});
  ASSERT_EQ(entry.products.size(), 3u);
  for (const auto& p : entry.products) {
    EXPECT_TRUE(p.certificate.positive);
    if (p.nu == Partition{1}) EXPECT_EQ(p.certificate.in_differences, T(2));
  }
}

TEST(SigmaOnePower, SmallCases) {
  const GrassContext ctx(2, 4);
  EXPECT_EQ(sigma1_power_expansion(0, ctx), SchurExpansion::basis(Partition(), 2));
  const SchurExpansion sq = sigma1_power_expansion(2, ctx);
  EXPECT_EQ(sq.at(Partition{2}), C(1));
  EXPECT_EQ(sq.at(Partition{1, 1}), C(1));
  EXPECT_EQ(sigma1_power_expansion(3, GrassContext(2, 5)).at(Partition{2, 1}), C(2));
  EXPECT_EQ(sigma1_power_expansion(3, GrassContext(3, 6)).at(Partition{2, 1}), C(2));
}

TEST(SigmaOnePower, MatchesRepeatedProducts) {
  // sigma_1 = (x_1 + ... + x_n) + (t_1 + ... + t_n), so powers of x-sums can
  // be rebuilt from ring products.
  const GrassContext ctx(2, 5);
  SchubertRing ring(ctx);
  SchurExpansion sum_x = SchurExpansion::basis(Partition{1}, 2);
  sum_x -= SchurExpansion::basis(Partition(), 2).scale(T(1) + T(2));
  SchurExpansion power = SchurExpansion::basis(Partition(), 2);
  for (unsigned k = 1; k <= 4; ++k) {
    power = ring.product(power, sum_x);
    EXPECT_EQ(ring.sigma1_power(k), power) << k;
  }
}

TEST(StructureTable, ProjectiveLineTable) {
  const StructureTable table = full_structure_table(GrassContext(1, 2));
  EXPECT_EQ(table.entries.size(), 4u);
  EXPECT_TRUE(table.all_positive());
  const StructureEntry* e = table.find(Partition{1}, Partition{1});
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->products.size(), 1u);
  EXPECT_EQ(e->products[0].coeff, T(1) - T(2));
}

TEST(StructureTable, SymmetricAndPositiveInG24) {
  const StructureTable table = full_structure_table(GrassContext(2, 4));
  EXPECT_EQ(table.entries.size(), 36u);
  EXPECT_TRUE(table.all_positive());
  for (const auto& entry : table.entries) {
    const StructureEntry* mirror = table.find(entry.mu, entry.lambda);
    ASSERT_NE(mirror, nullptr);
    ASSERT_EQ(mirror->products.size(), entry.products.size());
    for (std::size_t k = 0; k < entry.products.size(); ++k) {
      EXPECT_EQ(mirror->products[k].nu, entry.products[k].nu);
      EXPECT_EQ(mirror->products[k].coeff, entry.products[k].coeff);
    }
  }
}

TEST(StructureTable, SizeGuard) {
  EXPECT_EQ(binomial(10, 5), 252u);
  EXPECT_EQ(binomial(11, 5), 462u);
  EXPECT_THROW(full_structure_table(GrassContext(5, 11)), ResourceGuard);
  EXPECT_THROW(full_structure_table(GrassContext(4, 11)), ResourceGuard);
}
