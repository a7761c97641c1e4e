#pragma once

#include <vector>

#include "cfactors/partition.hpp"
#include "cfactors/schur.hpp"

namespace cfactors {

// One occurrence of a Young diagram in the graded free Lie algebra
// decomposition. The index is the 1-based position in the global order and
// never depends on the truncation degree it was produced from.
struct LiePiece {
  int index;
  Partition shape;
  int size;
};

// Multiplicity of shape in the degree-|shape| Whitehouse module: the number
// of standard tableaux T of that shape with maj(T) == 1 (mod |shape|).
int lie_multiplicity(const Partition& shape);

// The degree-d graded piece of the free Lie algebra as a Schur expansion.
SchurVector lie_module(int degree);

// All Lie pieces of size <= degree, with multiplicity, in the global order:
// increasing size, then decreasing lexicographic shape within a size,
// duplicates adjacent. Immutable after construction.
class LieTruncation {
 public:
  explicit LieTruncation(int degree);

  int degree() const { return degree_; }
  int count() const { return static_cast<int>(pieces_.size()); }
  const std::vector<LiePiece>& pieces() const { return pieces_; }

  // 1-based access matching LiePiece::index.
  const LiePiece& piece(int index) const;
  int piece_size(int index) const { return piece(index).size; }

 private:
  int degree_;
  std::vector<LiePiece> pieces_;
};

}  // namespace cfactors
