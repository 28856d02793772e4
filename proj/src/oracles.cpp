#include "eqschub/oracles.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eqs::oracle {

namespace {

Shape trimmed(Shape s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] > s[i - 1]) throw std::invalid_argument("shape must be weakly decreasing");
  }
  return s;
}

unsigned total(const Shape& s) { return std::accumulate(s.begin(), s.end(), 0U); }

unsigned part(const Shape& s, std::size_t row) { return row < s.size() ? s[row] : 0; }

}  // namespace

XPolynomial classical_schur_ssyt(const Shape& shape_in, unsigned n) {
  const Shape shape = trimmed(shape_in);
  XPolynomial out;
  if (shape.size() > n) return out;

  // cells in row-major order; filling[r][c]
  std::vector<std::vector<unsigned>> filling(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) filling[r].assign(shape[r], 0);
  std::vector<unsigned> exponents(n, 0);

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == shape.size()) {
      out[exponents] += 1;
      return;
    }
    if (c == shape[r]) {
      fill(r + 1, 0);
      return;
    }
    unsigned low = 1;
    if (c > 0) low = std::max(low, filling[r][c - 1]);
    if (r > 0) low = std::max(low, filling[r - 1][c] + 1);
    for (unsigned v = low; v <= n; ++v) {
      filling[r][c] = v;
      ++exponents[v - 1];
      fill(r, c + 1);
      --exponents[v - 1];
    }
  };
  fill(0, 0);
  return out;
}

mpz_class lr_coefficient(const Shape& lambda_in, const Shape& mu_in, const Shape& nu_in) {
  const Shape lambda = trimmed(lambda_in), mu = trimmed(mu_in), nu = trimmed(nu_in);
  if (total(nu) != total(lambda) + total(mu)) return 0;
  if (lambda.size() > nu.size()) return 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    if (lambda[r] > nu[r]) return 0;
  }
  if (total(nu) > kMaxLrEnumerationSize) {
    throw std::length_error("LR enumeration limited to |nu| <= " + std::to_string(kMaxLrEnumerationSize));
  }
  if (mu.empty()) return 1;

  const std::size_t rows = nu.size();
  std::vector<std::vector<unsigned>> filling(rows);
  for (std::size_t r = 0; r < rows; ++r) filling[r].assign(nu[r], 0);
  std::vector<unsigned> content(mu.size(), 0);
  mpz_class count = 0;

  auto lattice_ok = [&]() {
    // Reverse reading word: rows top to bottom, each row right to left.
    std::vector<unsigned> seen(mu.size() + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = nu[r]; c-- > part(lambda, r);) {
        const unsigned v = filling[r][c];
        ++seen[v];
        if (v > 1 && seen[v] > seen[v - 1]) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == rows) {
      if (content == mu && lattice_ok()) ++count;
      return;
    }
    if (c == nu[r]) {
      fill(r + 1, part(lambda, r + 1));
      return;
    }
    unsigned low = 1;
    if (c > part(lambda, r)) low = std::max(low, filling[r][c - 1]);
    if (r > 0 && c >= part(lambda, r - 1) && c < nu[r - 1]) low = std::max(low, filling[r - 1][c] + 1);
    for (unsigned v = low; v <= mu.size(); ++v) {
      if (content[v - 1] == mu[v - 1]) continue;
      filling[r][c] = v;
      ++content[v - 1];
      fill(r, c + 1);
      --content[v - 1];
    }
  };
  fill(0, part(lambda, 0));
  return count;
}

mpz_class syt_count_hook(const Shape& shape_in) {
  const Shape shape = trimmed(shape_in);
  const unsigned size = total(shape);
  mpz_class numerator;
  mpz_fac_ui(numerator.get_mpz_t(), size);
  mpz_class hooks = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (unsigned c = 0; c < shape[r]; ++c) {
      unsigned below = 0;
      for (std::size_t rr = r + 1; rr < shape.size() && shape[rr] > c; ++rr) ++below;
      hooks *= (shape[r] - c - 1) + below + 1;
    }
  }
  return numerator / hooks;
}

mpz_class syt_count_enumerated(const Shape& shape_in) {
  const Shape shape = trimmed(shape_in);
  const unsigned size = total(shape);
  if (size > kMaxSytEnumerationSize) {
    throw std::length_error("SYT enumeration limited to |lambda| <= " +
                            std::to_string(kMaxSytEnumerationSize));
  }
  // Place 1, 2, ..., size in turn; the filled region must stay a partition.
  std::vector<unsigned> filled(shape.size(), 0);
  mpz_class count = 0;
  std::function<void(unsigned)> place = [&](unsigned next) {
    if (next > size) {
      ++count;
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] == shape[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      ++filled[r];
      place(next + 1);
      --filled[r];
    }
  };
  place(1);
  return count;
}

mpz_class syt_count(const Shape& shape) {
  mpz_class hook = syt_count_hook(shape);
  mpz_class enumerated = syt_count_enumerated(shape);
  if (hook != enumerated) {
    throw std::logic_error("hook length formula and enumeration disagree: " + hook.get_str() +
                           " vs " + enumerated.get_str());
  }
  return hook;
}

}  // namespace eqs::oracle
