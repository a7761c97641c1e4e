#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cfactors/numbers.hpp"

namespace cfactors {

// An integer partition: a weakly decreasing sequence of positive parts.
// The empty partition is the unique partition of 0. Immutable after
// construction; safe to share between threads.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Internal fast path for callers that already guarantee the invariant.
  static Partition unchecked(std::vector<int> parts);

  // Parses the text form "[3,2,1]" ("[]" for the empty partition).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }  // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Part at 0-based row index; rows past the end count as 0.
  int part(int row) const {
    return row < rows() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  Partition conjugate() const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;

  // Canonical total order used everywhere for deterministic iteration:
  // by size first, then *decreasing* lexicographic within a size, so that
  // e.g. [4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1].
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Plain lexicographic comparison of the part sequences ([3,1] > [2,1,1]).
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

// True iff inner's diagram fits inside outer's (inner_i <= outer_i, all rows).
bool contains(const Partition& outer, const Partition& inner);

// (p_1 + boxes, p_2, ..., p_k); p must be nonempty, boxes >= 0.
Partition add_top_row(const Partition& p, int boxes);

// All partitions of n in decreasing lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

// The partitions of n whose diagram is contained in bound, decreasing lex.
std::vector<Partition> partitions_fitting(int n, const Partition& bound);

// p(n), the number of partitions of n.
Int partition_count(int n);

}  // namespace cfactors
