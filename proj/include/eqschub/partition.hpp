#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace eqs {

/// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  /// Throws UsageError unless `parts` is weakly decreasing; zeros are trimmed.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts)
      : Partition(std::vector<unsigned>(parts)) {}

  /// Parses "a,b,c"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned size() const;  // |lambda|
  /// lambda_i, 1-based, zero past the end.
  unsigned operator[](std::size_t i) const {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
  }

  bool fits_box(std::size_t rows, unsigned cols) const {
    return parts_.size() <= rows && (parts_.empty() || parts_.front() <= cols);
  }
  bool contains(const Partition& other) const;

  /// Partitions obtained by adding one box, restricted to at most `max_rows`.
  std::vector<Partition> add_box(std::size_t max_rows) const;
  /// Parts padded with zeros to length n.
  std::vector<unsigned> padded(std::size_t n) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<unsigned> parts_;
};

/// Strictly decreasing sequence of nonnegative integers of fixed length.
class StrictSequence {
 public:
  StrictSequence() = default;
  explicit StrictSequence(std::vector<unsigned> parts);
  StrictSequence(std::initializer_list<unsigned> parts)
      : StrictSequence(std::vector<unsigned>(parts)) {}

  /// The staircase (n-1, ..., 1, 0).
  static StrictSequence rho(std::size_t n);
  /// lambda + rho, padding lambda with zeros to length n.
  static StrictSequence from_partition(const Partition& lambda, std::size_t n);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  /// nu - rho.
  Partition to_partition() const;

  std::string to_string() const;

  auto operator<=>(const StrictSequence&) const = default;
  bool operator==(const StrictSequence&) const = default;

 private:
  std::vector<unsigned> parts_;
};

/// All partitions with at most `rows` parts and parts at most `cols`, in
/// increasing lex order.
std::vector<Partition> partitions_in_box(std::size_t rows, unsigned cols);

/// All partitions of `size` with at most `rows` parts, in increasing lex order.
std::vector<Partition> partitions_of(unsigned size, std::size_t rows);

}  // namespace eqs
