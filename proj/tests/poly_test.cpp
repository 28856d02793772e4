#include <gtest/gtest.h>

#include "eqschub/errors.hpp"
#include "eqschub/poly.hpp"
#include "support.hpp"

using namespace eqs;
using namespace eqs::testing;

TEST(Poly, AddCancels) {
  EXPECT_TRUE((X(1, 2) + (-X(1, 2))).is_zero());
  EXPECT_EQ(add(X(1, 2) + T(1, 2), X(2, 2)), X(1, 2) + X(2, 2) + T(1, 2));
  const Poly p = X(1, 2) * T(3, 2) - C(4, 2);
  EXPECT_EQ(p + Poly(2), p);
}

TEST(Poly, ArityMismatchIsUsageError) {
  EXPECT_THROW(X(1, 2) + X(1, 3), UsageError);
  EXPECT_THROW(X(1, 2) * X(1, 3), UsageError);
}

TEST(Poly, MultiplyDoubleMonomial) {
  const Poly x = X(1, 1);
  const Poly expected = x * x + (T(1, 1) + T(2, 1)) * x + T(1, 1) * T(2, 1);
  EXPECT_EQ(mul(x + T(1, 1), x + T(2, 1)), expected);
  EXPECT_EQ(expected.size(), 4u);
}

TEST(Poly, MultiplyIdentityAndDifferenceOfSquares) {
  std::mt19937 rng(7);
  const Poly p = random_poly(rng, 2, 3, 6, 2);
  EXPECT_EQ(p * C(1, 2), p);
  const Poly x1 = X(1, 2), x2 = X(2, 2);
  EXPECT_EQ((x1 - x2) * (x1 + x2), x1 * x1 - x2 * x2);
}

TEST(Poly, CanonicalOrderIsGradedLex) {
  // x1 > x2 > t1 > t2 within a degree; higher degree first.
  const Poly p = T(2, 2) + T(1, 2) + X(2, 2) + X(1, 2) + X(2, 2) * X(2, 2);
  const auto terms = p.terms();
  ASSERT_EQ(terms.size(), 5u);
  EXPECT_EQ(terms[0].first.x(1), 2u);
  EXPECT_EQ(terms[1].first.x(0), 1u);
  EXPECT_EQ(terms[2].first.x(1), 1u);
  EXPECT_EQ(terms[3].first.t(1), 1u);
  EXPECT_EQ(terms[4].first.t(2), 1u);
  EXPECT_EQ(p.to_string(), "x2^2 + x1 + x2 + t1 + t2");
}

TEST(Poly, EqualPolynomialsHaveIdenticalTerms) {
  const Poly a = (X(1, 2) + T(1, 2)) * (X(2, 2) - T(4, 2));
  const Poly b = X(2, 2) * X(1, 2) - X(1, 2) * T(4, 2) + T(1, 2) * X(2, 2) - T(4, 2) * T(1, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.terms()[i].first, b.terms()[i].first);
    EXPECT_EQ(a.terms()[i].second, b.terms()[i].second);
  }
}

TEST(Poly, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 40; ++round) {
    const Poly p = random_poly(rng, 2, 3, 5, 2);
    const Poly q = random_poly(rng, 2, 3, 5, 2);
    const Poly r = random_poly(rng, 2, 3, 4, 2);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ((p + q) + r, p + (q + r));
  }
}

TEST(Poly, ShortFactorProductsMatchLongForm) {
  // Exercises both multiplication strategies against each other.
  std::mt19937 rng(99);
  for (int round = 0; round < 20; ++round) {
    const Poly shortp = random_poly(rng, 3, 2, 3, 2);
    const Poly longp = random_poly(rng, 3, 3, 120, 3);
    Poly expected(3);
    for (const auto& [m, c] : shortp.terms()) expected += Poly::monomial(m, c) * longp;
    EXPECT_EQ(shortp * longp, expected);
  }
}

TEST(Poly, PowMatchesRepeatedProduct) {
  const Poly p = X(1, 1) + T(1, 1) - C(2, 1);
  EXPECT_EQ(pow(p, 0), C(1, 1));
  EXPECT_EQ(pow(p, 3), p * p * p);
}

TEST(ExactDiv, SimpleQuotients) {
  const Poly x1 = X(1, 2), x2 = X(2, 2);
  EXPECT_EQ(exact_div(x1 * x1 - x2 * x2, x1 - x2), x1 + x2);
  // a_(2,0) = (x1|t)^2 - (x2|t)^2 over a_(1,0) = x1 - x2.
  const Poly t1 = T(1, 2), t2 = T(2, 2);
  const Poly a20 = (x1 + t1) * (x1 + t2) - (x2 + t1) * (x2 + t2);
  EXPECT_EQ(exact_div(a20, x1 - x2), x1 + x2 + t1 + t2);
}

TEST(ExactDiv, RoundTripOnRandomPolys) {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    const Poly p = random_poly(rng, 2, 2, 5, 2);
    Poly d = random_poly(rng, 2, 2, 3, 2);
    if (d.is_zero()) d = C(1, 2);
    EXPECT_EQ(exact_div(p * d, d), p);
  }
}

TEST(ExactDiv, Errors) {
  EXPECT_THROW(exact_div(X(1, 2) + C(1, 2), X(2, 2)), NotDivisible);
  EXPECT_THROW(exact_div(X(1, 2), Poly(2)), UsageError);
  EXPECT_THROW(exact_div(X(1, 1) * C(3, 1), X(1, 1) * C(2, 1)), NotDivisible);
  EXPECT_TRUE(exact_div(Poly(2), X(1, 2)).is_zero());
}

TEST(KillT, DropsHighIndices) {
  EXPECT_EQ(kill_t_above(T(3) + T(1), 2), T(1));
  EXPECT_TRUE(kill_t_above(X(1, 1) * T(5, 1), 4).is_zero());
  EXPECT_EQ(kill_t_above(X(1, 1) * T(4, 1), 4), X(1, 1) * T(4, 1));
  EXPECT_EQ(kill_t_above(X(1, 1) + T(1, 1), 0), X(1, 1));
}

TEST(KillT, IdempotentRingHomomorphism) {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    const Poly p = random_poly(rng, 2, 5, 5, 2);
    const Poly q = random_poly(rng, 2, 5, 5, 2);
    for (unsigned m : {0u, 2u, 3u}) {
      EXPECT_EQ(kill_t_above(kill_t_above(p, m), m), kill_t_above(p, m));
      EXPECT_EQ(kill_t_above(p * q, m), kill_t_above(p, m) * kill_t_above(q, m));
      EXPECT_EQ(kill_t_above(p + q, m), kill_t_above(p, m) + kill_t_above(q, m));
    }
  }
}

TEST(DifferenceBasis, Examples) {
  EXPECT_EQ(to_difference_basis(T(1) - T(2), 2), T(1));
  EXPECT_THROW(to_difference_basis(T(1) + T(2), 2), NotShiftInvariant);
  EXPECT_EQ(to_difference_basis(C(5), 3), C(5));
  // t1 - t3 = u1 + u2
  EXPECT_EQ(to_difference_basis(T(1) - T(3), 3), T(1) + T(2));
  EXPECT_THROW(to_difference_basis(X(1, 1), 2), UsageError);
}

TEST(DifferenceBasis, RoundTrip) {
  // Products of random differences are shift invariant by construction.
  std::mt19937 rng(3);
  std::uniform_int_distribution<unsigned> pick(1, 4);
  std::uniform_int_distribution<int> coeff(-2, 3);
  for (int round = 0; round < 30; ++round) {
    Poly p(0);
    for (int k = 0; k < 3; ++k) {
      Poly term = C(coeff(rng));
      for (int f = 0; f < k; ++f) term *= T(pick(rng)) - T(pick(rng));
      p += term;
    }
    const Poly u = to_difference_basis(p, 4);
    EXPECT_LE(u.max_t_index(), 3u);
    EXPECT_EQ(from_difference_basis(u), p);
  }
}

TEST(Monomial, DivideAndParts) {
  const Monomial a(std::vector<unsigned>{2, 1}, std::vector<Monomial::TPower>{{1, 1}, {3, 2}});
  const Monomial b(std::vector<unsigned>{1, 0}, std::vector<Monomial::TPower>{{3, 1}});
  Monomial q;
  ASSERT_TRUE(a.divide(b, q));
  EXPECT_EQ(q * b, a);
  EXPECT_FALSE(b.divide(a, q));
  EXPECT_EQ(a.degree(), 6u);
  EXPECT_EQ(a.x_part() * a.t_part(), a);
  EXPECT_EQ(a.max_t_index(), 3u);
}
