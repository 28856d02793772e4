#pragma once

// Brute-force reference computations for classical (t = 0) Schur calculus.
//
// Nothing here depends on the double Schur or Grassmannian code; shapes are
// plain vectors and polynomials are plain exponent maps.

#include <map>
#include <vector>

#include <gmpxx.h>

namespace eqs::oracle {

using Shape = std::vector<unsigned>;
/// x-exponent vector -> coefficient.
using XPolynomial = std::map<std::vector<unsigned>, mpz_class>;

inline constexpr unsigned kMaxSytEnumerationSize = 12;
inline constexpr unsigned kMaxLrEnumerationSize = 10;

/// Sum over semistandard tableaux of shape `shape` with entries in 1..n of
/// prod x_{T(cell)}.
XPolynomial classical_schur_ssyt(const Shape& shape, unsigned n);

/// Number of Littlewood-Richardson tableaux of shape nu/lambda and content mu.
/// Returns 0 when |nu| != |lambda| + |mu| or lambda is not inside nu.
mpz_class lr_coefficient(const Shape& lambda, const Shape& mu, const Shape& nu);

mpz_class syt_count_hook(const Shape& shape);
/// Visits every standard tableau of the shape once.
mpz_class syt_count_enumerated(const Shape& shape);
/// Hook length formula cross-checked against enumeration; throws
/// std::logic_error if the two disagree.
mpz_class syt_count(const Shape& shape);

}  // namespace eqs::oracle
