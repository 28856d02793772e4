#include "eqschub/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "eqschub/errors.hpp"

namespace eqs {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent narrow(unsigned v) {
  if (v > kMaxExponent) throw UsageError("exponent or t-index exceeds 65535");
  return static_cast<Monomial::Exponent>(v);
}

void require_same_arity(const Poly& p, const Poly& q) {
  if (p.arity() != q.arity()) {
    throw UsageError("x-arity mismatch: " + std::to_string(p.arity()) + " vs " +
                     std::to_string(q.arity()));
  }
}

// Sorts terms into descending canonical order. Sorting pointers and moving
// each term once is much cheaper than swapping monomials in place.
void sort_descending(std::vector<Poly::Term>& terms) {
  std::vector<Poly::Term*> order;
  order.reserve(terms.size());
  for (auto& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Poly::Term* a, const Poly::Term* b) {
    return canonical_compare(a->first, b->first) > 0;
  });
  std::vector<Poly::Term> sorted;
  sorted.reserve(terms.size());
  for (auto* t : order) sorted.push_back(std::move(*t));
  terms = std::move(sorted);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t arity) : arity_(narrow(static_cast<unsigned>(arity))) {
  data_.assign(arity, 0);
}

Monomial::Monomial(std::span<const unsigned> x_exponents, std::span<const TPower> t_powers)
    : Monomial(x_exponents.size()) {
  for (std::size_t i = 0; i < x_exponents.size(); ++i) data_[i] = narrow(x_exponents[i]);
  std::map<unsigned, unsigned> t;
  for (auto [index, e] : t_powers) {
    if (index == 0) throw UsageError("t-indices start at 1");
    t[index] += e;
  }
  for (auto [index, e] : t) {
    if (e == 0) continue;
    data_.push_back(narrow(index));
    data_.push_back(narrow(e));
  }
  refresh_degree();
}

Monomial Monomial::x_power(std::size_t arity, std::size_t var, unsigned exponent) {
  if (var == 0 || var > arity) throw UsageError("x-variable index out of range");
  Monomial m(arity);
  m.data_[var - 1] = narrow(exponent);
  m.degree_ = exponent;
  return m;
}

Monomial Monomial::t_power(std::size_t arity, unsigned index, unsigned exponent) {
  if (index == 0) throw UsageError("t-indices start at 1");
  Monomial m(arity);
  if (exponent > 0) {
    m.data_.push_back(narrow(index));
    m.data_.push_back(narrow(exponent));
  }
  m.degree_ = exponent;
  return m;
}

unsigned Monomial::t(unsigned index) const {
  for (std::size_t k = 0; k < t_count(); ++k) {
    auto [i, e] = t_power_at(k);
    if (i == index) return e;
    if (i > index) break;
  }
  return 0;
}

std::vector<Monomial::TPower> Monomial::t_powers() const {
  std::vector<TPower> out;
  out.reserve(t_count());
  for (std::size_t k = 0; k < t_count(); ++k) out.push_back(t_power_at(k));
  return out;
}

std::vector<unsigned> Monomial::x_exponents() const {
  return {data_.begin(), data_.begin() + arity_};
}

unsigned Monomial::x_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += data_[i];
  return d;
}

unsigned Monomial::t_degree() const {
  unsigned d = 0;
  for (std::size_t i = arity_ + 1; i < data_.size(); i += 2) d += data_[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.arity_ = arity_;
  out.data_.reserve(data_.size() + other.data_.size() - arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    out.data_.push_back(narrow(unsigned{data_[i]} + other.data_[i]));
  }
  std::size_t a = arity_, b = arity_;
  while (a < data_.size() && b < other.data_.size()) {
    if (data_[a] < other.data_[b]) {
      out.data_.push_back(data_[a]);
      out.data_.push_back(data_[a + 1]);
      a += 2;
    } else if (data_[a] > other.data_[b]) {
      out.data_.push_back(other.data_[b]);
      out.data_.push_back(other.data_[b + 1]);
      b += 2;
    } else {
      out.data_.push_back(data_[a]);
      out.data_.push_back(narrow(unsigned{data_[a + 1]} + other.data_[b + 1]));
      a += 2;
      b += 2;
    }
  }
  out.data_.insert(out.data_.end(), data_.begin() + a, data_.end());
  out.data_.insert(out.data_.end(), other.data_.begin() + b, other.data_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divide(const Monomial& divisor, Monomial& quotient) const {
  quotient.arity_ = arity_;
  quotient.data_.clear();
  for (std::size_t i = 0; i < arity_; ++i) {
    if (data_[i] < divisor.data_[i]) return false;
    quotient.data_.push_back(data_[i] - divisor.data_[i]);
  }
  std::size_t a = arity_, b = arity_;
  while (b < divisor.data_.size()) {
    if (a >= data_.size() || data_[a] > divisor.data_[b]) return false;
    if (data_[a] < divisor.data_[b]) {
      quotient.data_.push_back(data_[a]);
      quotient.data_.push_back(data_[a + 1]);
    } else {
      if (data_[a + 1] < divisor.data_[b + 1]) return false;
      if (data_[a + 1] > divisor.data_[b + 1]) {
        quotient.data_.push_back(data_[a]);
        quotient.data_.push_back(data_[a + 1] - divisor.data_[b + 1]);
      }
      b += 2;
    }
    a += 2;
  }
  quotient.data_.insert(quotient.data_.end(), data_.begin() + a, data_.end());
  quotient.degree_ = degree_ - divisor.degree_;
  return true;
}

Monomial Monomial::x_part() const {
  Monomial out;
  out.arity_ = arity_;
  out.data_.assign(data_.begin(), data_.begin() + arity_);
  out.degree_ = x_degree();
  return out;
}

Monomial Monomial::t_part() const {
  Monomial out(arity_);
  out.data_.insert(out.data_.end(), data_.begin() + arity_, data_.end());
  out.degree_ = t_degree();
  return out;
}

Monomial Monomial::with_arity(std::size_t arity) const {
  if (arity != arity_ && x_degree() != 0) {
    throw UsageError("cannot change the arity of a monomial involving x");
  }
  Monomial out(arity);
  out.data_.insert(out.data_.end(), data_.begin() + arity_, data_.end());
  out.degree_ = degree_;
  return out;
}

Monomial Monomial::swap_x(std::size_t i, std::size_t j) const {
  Monomial out = *this;
  std::swap(out.data_[i - 1], out.data_[j - 1]);
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL ^ arity_;
  for (auto e : data_) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  auto ra = a.raw(), rb = b.raw();
  const std::size_t n = a.arity();
  for (std::size_t i = 0; i < n; ++i) {
    if (ra[i] != rb[i]) return ra[i] <=> rb[i];
  }
  // Dense lex over t_1, t_2, ...: the first index where exponents differ
  // decides; a missing index has exponent zero.
  std::size_t i = n, j = n;
  while (i < ra.size() && j < rb.size()) {
    if (ra[i] != rb[j]) return ra[i] < rb[j] ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
    if (ra[i + 1] != rb[j + 1]) return ra[i + 1] <=> rb[j + 1];
    i += 2;
    j += 2;
  }
  if (i < ra.size()) return std::strong_ordering::greater;
  if (j < rb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(const Integer& c, std::size_t arity) {
  Poly p(arity);
  if (c != 0) p.terms_.emplace_back(Monomial(arity), c);
  return p;
}

Poly Poly::x(std::size_t var, std::size_t arity) {
  return monomial(Monomial::x_power(arity, var, 1));
}

Poly Poly::t(unsigned index, std::size_t arity) {
  return monomial(Monomial::t_power(arity, index, 1));
}

Poly Poly::monomial(const Monomial& m, const Integer& c) {
  Poly p(m.arity());
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const auto& [m, c] : terms) {
    if (m.arity() != arity) throw UsageError("term arity does not match polynomial arity");
  }
  sort_descending(terms);
  Poly p(arity);
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == term.first) {
      p.terms_.back().second += term.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::from_sorted_terms(std::size_t arity, std::vector<Term> terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].first.arity() != arity) throw UsageError("term arity does not match polynomial arity");
    if (terms[k].second == 0 || (k > 0 && canonical_compare(terms[k - 1].first, terms[k].first) <= 0)) {
      throw InternalError("from_sorted_terms: terms are not strictly descending and nonzero");
    }
  }
  Poly p(arity);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_t_only() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.is_t_only(); });
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree() == 0);
}

unsigned Poly::max_t_index() const {
  unsigned out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.max_t_index());
  return out;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

Integer Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return canonical_compare(t.first, key) > 0;
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Poly Poly::with_arity(std::size_t arity) const {
  Poly out(arity);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m.with_arity(arity), c);
  // Arity change only happens on t-only terms, which keeps their relative order.
  return out;
}

Poly Poly::swap_x(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > arity_ || j > arity_) {
    throw UsageError("x-variable index out of range");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.emplace_back(m.swap_x(i, j), c);
  return from_terms(arity_, std::move(terms));
}

bool Poly::swap_x_equals(std::size_t i, std::size_t j, int sign) const {
  if (i == 0 || j == 0 || i > arity_ || j > arity_) {
    throw UsageError("x-variable index out of range");
  }
  auto less = [](const Term& t, const Monomial& key) { return canonical_compare(t.first, key) > 0; };
  for (const auto& [m, c] : terms_) {
    const Monomial image = m.swap_x(i, j);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), image, less);
    if (it == terms_.end() || !(it->first == image)) return false;
    if (sign > 0 ? it->second != c : it->second != -c) return false;
  }
  return true;
}

Poly Poly::scale(const Integer& c) const {
  if (c == 0) return Poly(arity_);
  Poly out = *this;
  for (auto& term : out.terms_) term.second *= c;
  return out;
}

Poly Poly::operator-() const { return scale(-1); }

void Poly::add_scaled(const Poly& other, int sign) {
  require_same_arity(*this, other);
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    std::strong_ordering ord = std::strong_ordering::less;
    if (a == terms_.end()) {
      ord = std::strong_ordering::less;
    } else if (b == other.terms_.end()) {
      ord = std::strong_ordering::greater;
    } else {
      ord = canonical_compare(a->first, b->first);
    }
    if (ord > 0) {
      merged.push_back(std::move(*a++));
    } else if (ord < 0) {
      merged.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->second + b->second) : Integer(a->second - b->second);
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& other) {
  add_scaled(other, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  add_scaled(other, -1);
  return *this;
}

namespace {

constexpr std::size_t kMergeRows = 48;

// Product with a short factor: each of its terms scales the long factor into
// a sorted row, and the rows are merged through a heap.
Poly merge_product(const Poly& a, const Poly& b) {
  const Poly& shorter = a.size() <= b.size() ? a : b;
  const Poly& longer = a.size() <= b.size() ? b : a;
  const auto rows = shorter.terms();
  const auto cols = longer.terms();

  struct Cursor {
    Monomial m;
    std::size_t row;
    std::size_t col;
  };
  auto lower = [](const Cursor& x, const Cursor& y) { return canonical_compare(x.m, y.m) < 0; };
  std::vector<Cursor> heap;
  heap.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) heap.push_back({rows[r].first * cols[0].first, r, 0});
  std::make_heap(heap.begin(), heap.end(), lower);

  std::vector<Poly::Term> out;
  out.reserve(rows.size() * cols.size());
  Integer prod;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), lower);
    Cursor& top = heap.back();
    mpz_mul(prod.get_mpz_t(), rows[top.row].second.get_mpz_t(), cols[top.col].second.get_mpz_t());
    if (!out.empty() && out.back().first == top.m) {
      out.back().second += prod;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.emplace_back(top.m, prod);
    }
    if (++top.col < cols.size()) {
      top.m = rows[top.row].first * cols[top.col].first;
      std::push_heap(heap.begin(), heap.end(), lower);
    } else {
      heap.pop_back();
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return Poly::from_sorted_terms(a.arity(), std::move(out));
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  require_same_arity(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.arity());
  if (a.size() == 1 && a.terms_.front().first.degree() == 0) return b.scale(a.terms_.front().second);
  if (b.size() == 1 && b.terms_.front().first.degree() == 0) return a.scale(b.terms_.front().second);
  // The order is multiplicative, so a single-term factor keeps terms sorted.
  if (a.size() == 1 || b.size() == 1) {
    const Poly& many = a.size() == 1 ? b : a;
    const auto& [m, c] = (a.size() == 1 ? a : b).terms_.front();
    Poly out(a.arity());
    out.terms_.reserve(many.size());
    for (const auto& [mm, cc] : many.terms_) out.terms_.emplace_back(mm * m, cc * c);
    return out;
  }
  if (std::min(a.size(), b.size()) <= kMergeRows) return merge_product(a, b);

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Integer prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      auto [it, inserted] = acc.try_emplace(ma * mb);
      it->second += prod;
    }
  }
  std::vector<std::pair<const Monomial, Integer>*> order;
  order.reserve(acc.size());
  for (auto& entry : acc) {
    if (entry.second != 0) order.push_back(&entry);
  }
  std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    return canonical_compare(x->first, y->first) > 0;
  });
  Poly out(a.arity());
  out.terms_.reserve(order.size());
  for (auto* entry : order) out.terms_.emplace_back(entry->first, std::move(entry->second));
  return out;
}

bool Poly::operator==(const Poly& other) const {
  if (arity_ != other.arity_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == other.terms_[i].first) || terms_[i].second != other.terms_[i].second) {
      return false;
    }
  }
  return true;
}

std::string Poly::to_string(char t_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m.x(i) == 0) continue;
      std::string f = "x" + std::to_string(i + 1);
      if (m.x(i) > 1) f += "^" + std::to_string(m.x(i));
      factors.push_back(std::move(f));
    }
    for (auto [index, e] : m.t_powers()) {
      std::string f = std::string(1, t_name) + std::to_string(index);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out << '*';
      out << factors[k];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Free operations

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly pow(const Poly& p, unsigned k) {
  Poly out = Poly::constant(1, p.arity());
  Poly base = p;
  while (k) {
    if (k & 1U) out *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return out;
}

Poly exact_div(const Poly& p, const Poly& d) {
  require_same_arity(p, d);
  if (d.is_zero()) throw UsageError("division by the zero polynomial");
  if (p.is_zero()) return Poly(p.arity());

  // Multivariate division by the leading term. Since LT(q*d) = LT(q)*LT(d) in
  // a monomial order, every leading term of the running remainder must be
  // divisible by LT(d) when d | p.
  std::map<Monomial, Integer, CanonicalGreater> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);
  const auto& [lead_m, lead_c] = d.leading_term();

  std::vector<Poly::Term> quotient;
  Monomial qm;
  Integer qc, prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!top->first.divide(lead_m, qm) || !mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) {
      throw NotDivisible("polynomial is not divisible: leading remainder term " +
                         Poly::monomial(top->first, top->second).to_string() +
                         " is not a multiple of " + Poly::monomial(lead_m, lead_c).to_string());
    }
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    rem.erase(top);
    for (auto it = std::next(d.terms().begin()); it != d.terms().end(); ++it) {
      mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), it->second.get_mpz_t());
      auto [slot, inserted] = rem.try_emplace(qm * it->first);
      slot->second -= prod;
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.emplace_back(qm, qc);
  }
  // Quotient terms come out in strictly decreasing order already.
  Poly q = Poly::from_terms(p.arity(), std::move(quotient));
  return q;
}

Poly kill_t_above(const Poly& p, unsigned m) {
  std::vector<Poly::Term> kept;
  for (const auto& term : p.terms()) {
    if (term.first.max_t_index() <= m) kept.push_back(term);
  }
  return Poly::from_terms(p.arity(), std::move(kept));
}

Poly to_difference_basis(const Poly& p, unsigned m) {
  if (m == 0) throw UsageError("to_difference_basis needs m >= 1");
  if (!p.is_t_only()) throw UsageError("to_difference_basis expects a t-only polynomial");
  if (p.max_t_index() > m) {
    throw UsageError("polynomial involves t_" + std::to_string(p.max_t_index()) +
                     " beyond t_" + std::to_string(m));
  }
  // t_i = u_i + u_{i+1} + ... + u_m, with u_m standing for t_m itself.
  std::vector<Poly> linear(m + 1, Poly(0));
  for (unsigned i = m; i >= 1; --i) {
    linear[i] = Poly::t(i);
    if (i < m) linear[i] += linear[i + 1];
  }
  std::map<std::pair<unsigned, unsigned>, Poly> powers;
  auto power = [&](unsigned i, unsigned e) -> const Poly& {
    auto [it, inserted] = powers.try_emplace({i, e});
    if (inserted) it->second = pow(linear[i], e);
    return it->second;
  };

  const Poly coefficients = p.with_arity(0);
  Poly out(0);
  for (const auto& [mono, c] : coefficients.terms()) {
    Poly term = Poly::constant(c);
    for (auto [i, e] : mono.t_powers()) term *= power(i, e);
    out += term;
  }
  for (const auto& [mono, c] : out.terms()) {
    if (mono.t(m) != 0) {
      throw NotShiftInvariant("not shift-invariant: " + p.to_string() +
                              " leaves a residual t_" + std::to_string(m) + " term after rewriting");
    }
  }
  return out;
}

Poly from_difference_basis(const Poly& u_poly) {
  const Poly coefficients = u_poly.with_arity(0);
  Poly out(0);
  for (const auto& [mono, c] : coefficients.terms()) {
    Poly term = Poly::constant(c);
    for (auto [i, e] : mono.t_powers()) term *= pow(Poly::t(i) - Poly::t(i + 1), e);
    out += term;
  }
  return out;
}

}  // namespace eqs
