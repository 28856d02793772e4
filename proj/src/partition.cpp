#include "eqschub/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "eqschub/errors.hpp"

namespace eqs {

namespace {

std::string join(const std::vector<unsigned>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw UsageError("partition must be weakly decreasing: " + join(parts_));
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw UsageError("malformed partition \"" + std::string(text) +
                       "\": expected comma-separated nonnegative integers");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::vector<Partition> Partition::add_box(std::size_t max_rows) const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= parts_.size() && i < max_rows; ++i) {
    unsigned current = i < parts_.size() ? parts_[i] : 0;
    if (i > 0 && parts_[i - 1] == current) continue;
    std::vector<unsigned> grown = parts_;
    if (i == grown.size()) grown.push_back(0);
    ++grown[i];
    out.emplace_back(std::move(grown));
  }
  return out;
}

std::vector<unsigned> Partition::padded(std::size_t n) const {
  if (parts_.size() > n) {
    throw UsageError("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
  }
  std::vector<unsigned> out = parts_;
  out.resize(n, 0);
  return out;
}

std::string Partition::to_string() const { return join(parts_); }

StrictSequence::StrictSequence(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] >= parts_[i - 1]) {
      throw UsageError("sequence must be strictly decreasing: " + join(parts_));
    }
  }
}

StrictSequence StrictSequence::rho(std::size_t n) {
  std::vector<unsigned> parts(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] = static_cast<unsigned>(n - 1 - i);
  return StrictSequence(std::move(parts));
}

StrictSequence StrictSequence::from_partition(const Partition& lambda, std::size_t n) {
  std::vector<unsigned> parts = lambda.padded(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] += static_cast<unsigned>(n - 1 - i);
  return StrictSequence(std::move(parts));
}

Partition StrictSequence::to_partition() const {
  const std::size_t n = parts_.size();
  std::vector<unsigned> parts(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] = parts_[i] - static_cast<unsigned>(n - 1 - i);
  return Partition(std::move(parts));
}

std::string StrictSequence::to_string() const { return join(parts_); }

std::vector<Partition> partitions_in_box(std::size_t rows, unsigned cols) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned)> rec = [&](unsigned bound) {
    out.emplace_back(current);
    if (current.size() == rows) return;
    for (unsigned v = 1; v <= bound; ++v) {
      current.push_back(v);
      rec(v);
      current.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(unsigned size, std::size_t rows) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned bound) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (current.size() == rows) return;
    for (unsigned v = std::min(bound, remaining); v >= 1; --v) {
      current.push_back(v);
      rec(remaining - v, v);
      current.pop_back();
    }
  };
  rec(size, size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eqs
