#include "cfactors/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfactors/caches.hpp"

namespace cfactors {

namespace {

std::shared_mutex g_mutex;
std::map<std::pair<Partition, Partition>, Int> g_memo;

// Beta-set of lambda padded to `len` rows: strictly decreasing first-column
// hook lengths lambda_i + (len - 1 - i).
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition::unchecked(std::move(parts));
}

Int character_rec(const Partition& lambda, const Partition& rho) {
  if (lambda.empty()) return 1;
  {
    std::shared_lock lock(g_mutex);
    auto it = g_memo.find({lambda, rho});
    if (it != g_memo.end()) return it->second;
  }
  const int t = rho.part(0);
  std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
  const Partition rest = Partition::unchecked(std::move(rest_parts));

  // Removing a border strip of size t corresponds to lowering one beta
  // number by t; the strip height is the number of beta values jumped over.
  Int total = 0;
  std::vector<int> beta = beta_set(lambda, lambda.rows());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < t) continue;
    const int target = b - t;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int other : beta)
      if (other > target && other < b) ++height;
    std::vector<int> next = beta;
    next[i] = target;
    const Int sub = character_rec(from_beta(std::move(next)), rest);
    if (height % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  {
    std::unique_lock lock(g_mutex);
    g_memo.emplace(std::make_pair(lambda, rho), total);
  }
  return total;
}

}  // namespace

Int symmetric_group_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("character requires |lambda| == |rho|");
  return character_rec(lambda, rho);
}

Int centralizer_order(const Partition& rho) {
  Int z = 1;
  int run = 0;
  for (int i = 0; i < rho.rows(); ++i) {
    ++run;
    z *= rho.part(i);
    if (i + 1 == rho.rows() || rho.part(i + 1) != rho.part(i)) {
      for (int m = 2; m <= run; ++m) z *= m;
      run = 0;
    }
  }
  return z;
}

namespace detail {
void clear_character_memo() {
  std::unique_lock lock(g_mutex);
  g_memo.clear();
}
}  // namespace detail

}  // namespace cfactors
