#pragma once

#include <ostream>
#include <random>

#include "eqschub/partition.hpp"
#include "eqschub/poly.hpp"

namespace eqs {
// Readable gtest failure messages.
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const StrictSequence& s, std::ostream* os) { *os << s.to_string(); }
}  // namespace eqs

namespace eqs::testing {

inline Poly X(std::size_t i, std::size_t n) { return Poly::x(i, n); }
inline Poly T(unsigned i, std::size_t n = 0) { return Poly::t(i, n); }
inline Poly C(long c, std::size_t n = 0) { return Poly::constant(c, n); }

// Small random polynomial in x_1..x_n and t_1..t_max_t with coefficients in
// [-3, 3]. Arity 0 gives a t-only polynomial.
inline Poly random_poly(std::mt19937& rng, std::size_t n, unsigned max_t, unsigned terms, unsigned max_exp) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<Poly::Term> out;
  for (unsigned k = 0; k < terms; ++k) {
    std::vector<unsigned> x(n);
    for (auto& e : x) e = exp(rng);
    std::vector<Monomial::TPower> t;
    for (unsigned i = 1; i <= max_t; ++i) {
      if (unsigned e = exp(rng)) t.emplace_back(i, e);
    }
    out.emplace_back(Monomial(x, t), coeff(rng));
  }
  return Poly::from_terms(n, std::move(out));
}

}  // namespace eqs::testing
