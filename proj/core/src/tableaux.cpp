#include "cfactors/tableaux.hpp"

#include <numeric>
#include <stdexcept>

namespace cfactors {

StandardTableau::StandardTableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const int n = shape_.size();
  if (static_cast<int>(entries_.size()) != n)
    throw std::invalid_argument("tableau entry count does not match shape size");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
  int offset = 0;
  for (int r = 0; r < shape_.rows(); ++r) {
    const int len = shape_.part(r);
    for (int c = 0; c < len; ++c) {
      const int v = entries_[static_cast<std::size_t>(offset + c)];
      if (c > 0 && entries_[static_cast<std::size_t>(offset + c - 1)] >= v)
        throw std::invalid_argument("tableau rows must strictly increase");
      if (r > 0 && entry(r - 1, c) >= v)
        throw std::invalid_argument("tableau columns must strictly increase");
    }
    offset += len;
  }
}

int StandardTableau::entry(int row, int col) const {
  int offset = 0;
  for (int r = 0; r < row; ++r) offset += shape_.part(r);
  return entries_[static_cast<std::size_t>(offset + col)];
}

int maj(const StandardTableau& t) {
  const int n = t.shape().size();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  int offset = 0;
  for (int r = 0; r < t.shape().rows(); ++r) {
    for (int c = 0; c < t.shape().part(r); ++c)
      row_of[static_cast<std::size_t>(t.entries()[static_cast<std::size_t>(offset + c)])] = r;
    offset += t.shape().part(r);
  }
  int sum = 0;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) sum += i;
  return sum;
}

StandardTableauxEnumerator::StandardTableauxEnumerator(Partition shape)
    : shape_(std::move(shape)), n_(shape_.size()) {
  if (n_ < 1) throw std::invalid_argument("tableau enumeration requires a nonempty shape");
  row_of_.assign(static_cast<std::size_t>(n_), 0);
  filled_.assign(static_cast<std::size_t>(shape_.rows()), 0);
}

int StandardTableauxEnumerator::next_valid_row(int from) const {
  for (int r = from; r < shape_.rows(); ++r) {
    const int c = filled_[static_cast<std::size_t>(r)];
    if (c < shape_.part(r) && (r == 0 || filled_[static_cast<std::size_t>(r - 1)] > c))
      return r;
  }
  return -1;
}

bool StandardTableauxEnumerator::advance() {
  if (exhausted_) return false;
  int v, row;
  if (!started_) {
    started_ = true;
    v = 0;
    row = 0;
  } else {
    v = n_ - 1;
    --filled_[static_cast<std::size_t>(row_of_[static_cast<std::size_t>(v)])];
    row = row_of_[static_cast<std::size_t>(v)] + 1;
  }
  while (true) {
    const int r = next_valid_row(row);
    if (r >= 0) {
      row_of_[static_cast<std::size_t>(v)] = r;
      ++filled_[static_cast<std::size_t>(r)];
      if (++v == n_) return true;
      row = 0;
    } else {
      if (v == 0) {
        exhausted_ = true;
        return false;
      }
      --v;
      --filled_[static_cast<std::size_t>(row_of_[static_cast<std::size_t>(v)])];
      row = row_of_[static_cast<std::size_t>(v)] + 1;
    }
  }
}

int StandardTableauxEnumerator::current_maj() const {
  int sum = 0;
  for (int i = 0; i + 1 < n_; ++i)
    if (row_of_[static_cast<std::size_t>(i + 1)] > row_of_[static_cast<std::size_t>(i)])
      sum += i + 1;
  return sum;
}

StandardTableau StandardTableauxEnumerator::current() const {
  // Rebuild row-major entries from the placement order.
  std::vector<int> entries(static_cast<std::size_t>(n_), 0);
  std::vector<int> row_starts(static_cast<std::size_t>(shape_.rows()), 0);
  for (int r = 1; r < shape_.rows(); ++r)
    row_starts[static_cast<std::size_t>(r)] =
        row_starts[static_cast<std::size_t>(r - 1)] + shape_.part(r - 1);
  std::vector<int> placed(static_cast<std::size_t>(shape_.rows()), 0);
  for (int v = 0; v < n_; ++v) {
    const int r = row_of_[static_cast<std::size_t>(v)];
    entries[static_cast<std::size_t>(row_starts[static_cast<std::size_t>(r)] +
                                     placed[static_cast<std::size_t>(r)]++)] = v + 1;
  }
  return StandardTableau(shape_, std::move(entries));
}

}  // namespace cfactors
