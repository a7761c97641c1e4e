#include "cfactors/lie.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "cfactors/caches.hpp"
#include "cfactors/tableaux.hpp"

namespace cfactors {

namespace {
std::shared_mutex g_mutex;
std::map<Partition, int> g_memo;
}  // namespace

int lie_multiplicity(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("lie_multiplicity requires a nonempty shape");
  {
    std::shared_lock lock(g_mutex);
    auto it = g_memo.find(shape);
    if (it != g_memo.end()) return it->second;
  }
  const int d = shape.size();
  const int residue = 1 % d;  // for d == 1 the congruence is vacuous
  int count = 0;
  StandardTableauxEnumerator e(shape);
  while (e.advance())
    if (e.current_maj() % d == residue) ++count;
  std::unique_lock lock(g_mutex);
  g_memo.emplace(shape, count);
  return count;
}

SchurVector lie_module(int degree) {
  if (degree < 1) throw std::invalid_argument("lie_module requires degree >= 1");
  SchurVector out;
  for (const Partition& shape : partitions_of(degree)) out.add(shape, lie_multiplicity(shape));
  return out;
}

LieTruncation::LieTruncation(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("truncation requires degree >= 1");
  for (int size = 1; size <= degree; ++size) {
    for (const Partition& shape : partitions_of(size)) {
      const int mult = lie_multiplicity(shape);
      for (int copy = 0; copy < mult; ++copy)
        pieces_.push_back(LiePiece{static_cast<int>(pieces_.size()) + 1, shape, size});
    }
  }
}

const LiePiece& LieTruncation::piece(int index) const {
  if (index < 1 || index > count())
    throw std::invalid_argument("Lie piece index out of range: " + std::to_string(index));
  return pieces_[static_cast<std::size_t>(index - 1)];
}

namespace detail {
void clear_lie_memo() {
  std::unique_lock lock(g_mutex);
  g_memo.clear();
}
}  // namespace detail

}  // namespace cfactors
