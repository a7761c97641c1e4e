#include "cfactors/partition.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cfactors {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::unchecked(std::vector<int> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  p.size_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
  return p;
}

Partition Partition::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("partition text must be of the form [a,b,c]");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view token = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("bad partition part: " + std::string(token));
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition::unchecked(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  // within a size, lexicographically larger comes first
  return lex_compare(other, *this);
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  const auto& x = a.parts();
  const auto& y = b.parts();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.rows() > outer.rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

Partition add_top_row(const Partition& p, int boxes) {
  if (p.empty()) throw std::invalid_argument("add_top_row requires a nonempty partition");
  if (boxes < 0) throw std::invalid_argument("add_top_row requires boxes >= 0");
  std::vector<int> parts = p.parts();
  parts[0] += boxes;
  return Partition::unchecked(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::unchecked(stack));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    emit_partitions(remaining - p, p, stack, out);
    stack.pop_back();
  }
}

void emit_fitting(int remaining, int row, int prev, const Partition& bound,
                  std::vector<int>& stack, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::unchecked(stack));
    return;
  }
  if (row >= bound.rows()) return;
  for (int p = std::min({remaining, prev, bound.part(row)}); p >= 1; --p) {
    stack.push_back(p);
    emit_fitting(remaining - p, row + 1, p, bound, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_partitions(n, n, stack, out);
  return out;
}

std::vector<Partition> partitions_fitting(int n, const Partition& bound) {
  if (n < 0) throw std::invalid_argument("partitions_fitting requires n >= 0");
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_fitting(n, 0, n, bound, stack, out);
  return out;
}

Int partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count requires n >= 0");
  static std::mutex mutex;
  static std::vector<Int> cache{1};  // p(0) = 1
  std::scoped_lock lock(mutex);
  // Euler's pentagonal-number recurrence.
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Int value = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      Int term = 0;
      if (g1 <= m) term += cache[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += cache[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1)
        value += term;
      else
        value -= term;
    }
    cache.push_back(std::move(value));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace cfactors
