#pragma once

#include <vector>

#include "cfactors/partition.hpp"

namespace cfactors {

// A standard Young tableau: the cells of `shape` filled bijectively with
// 1..n, strictly increasing along rows and down columns.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<int> entries);

  const Partition& shape() const { return shape_; }
  // Row-major entries.
  const std::vector<int>& entries() const { return entries_; }
  int entry(int row, int col) const;

 private:
  Partition shape_;
  std::vector<int> entries_;
};

// Major index: the sum of all i such that i+1 sits in a strictly lower row.
int maj(const StandardTableau& t);

// Streams all standard tableaux of a fixed shape by backtracking; memory use
// is O(n) regardless of how many tableaux the shape admits. Single consumer.
//
//   StandardTableauxEnumerator e(shape);
//   while (e.advance()) { use e.current_maj() or e.current(); }
class StandardTableauxEnumerator {
 public:
  explicit StandardTableauxEnumerator(Partition shape);  // |shape| >= 1

  // Moves to the next tableau; returns false once exhausted.
  bool advance();

  // Row index (0-based) of each value 1..n in the current tableau.
  const std::vector<int>& value_rows() const { return row_of_; }

  int current_maj() const;
  StandardTableau current() const;

 private:
  int next_valid_row(int from) const;

  Partition shape_;
  int n_;
  std::vector<int> row_of_;
  std::vector<int> filled_;
  bool started_ = false;
  bool exhausted_ = false;
};

}  // namespace cfactors
