#include "cfactors/schur.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "cfactors/caches.hpp"
#include "cfactors/characters.hpp"
#include "cfactors/errors.hpp"

namespace cfactors {

SchurVector SchurVector::single(const Partition& p, Int coeff) {
  SchurVector v;
  v.add(p, coeff);
  return v;
}

void SchurVector::add(const Partition& p, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

const Int& SchurVector::coeff(const Partition& p) const {
  static const Int zero = 0;
  auto it = terms_.find(p);
  return it == terms_.end() ? zero : it->second;
}

std::optional<int> SchurVector::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int degree = terms_.begin()->first.size();
  for (const auto& [p, c] : terms_)
    if (p.size() != degree) return std::nullopt;
  return degree;
}

std::string SchurVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    out += '*';
    out += p.to_string();
  }
  return out;
}

void PowerSumVector::add(const Partition& p, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// ---- Littlewood-Richardson counting ------------------------------------

// Cells of nu/lambda in reverse reading order (rows top to bottom, each row
// right to left), so that assignments can be checked against the lattice
// condition prefix by prefix.
long long count_lr_fillings(const Partition& nu, const Partition& lambda, const Partition& mu) {
  const int rows = nu.rows();
  const int values = mu.rows();
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(mu.size()));
  for (int r = 0; r < rows; ++r)
    for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells.emplace_back(r, c);

  std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu.part(r)), 0);
  std::vector<int> counts(static_cast<std::size_t>(values) + 1, 0);

  long long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[pos];
    for (int v = 1; v <= values; ++v) {
      if (counts[static_cast<std::size_t>(v)] >= mu.part(v - 1)) continue;
      if (v > 1 && counts[static_cast<std::size_t>(v)] >= counts[static_cast<std::size_t>(v - 1)])
        continue;  // lattice word
      if (c + 1 < nu.part(r) && v > fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)])
        continue;  // rows weakly increase
      if (r > 0 && c >= lambda.part(r - 1) &&
          v <= fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)])
        continue;  // columns strictly increase
      fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++counts[static_cast<std::size_t>(v)];
      rec(pos + 1);
      --counts[static_cast<std::size_t>(v)];
    }
  };
  rec(0);
  return total;
}

// ---- global memo tables --------------------------------------------------

std::shared_mutex g_lr_mutex;
std::map<std::array<Partition, 3>, Int> g_lr_memo;

std::shared_mutex g_product_mutex;
std::map<std::pair<Partition, Partition>, SchurVector> g_product_memo;

// s_lambda * s_mu as a Schur expansion; memoized because the engine forms
// the same term products over and over across assemblies.
const SchurVector& schur_times_schur(const Partition& lambda, const Partition& mu) {
  const std::pair<Partition, Partition> key{lambda, mu};
  {
    std::shared_lock lock(g_product_mutex);
    auto it = g_product_memo.find(key);
    if (it != g_product_memo.end()) return it->second;
  }
  SchurVector out;
  if (lambda.empty() || mu.empty()) {
    out.add(lambda.empty() ? mu : lambda, 1);
  } else {
    for (const Partition& nu : partitions_of(lambda.size() + mu.size())) {
      if (nu.part(0) > lambda.part(0) + mu.part(0)) continue;
      if (nu.rows() > lambda.rows() + mu.rows()) continue;
      if (!contains(nu, lambda) || !contains(nu, mu)) continue;
      const Int c = lr_coefficient(nu, lambda, mu);
      if (c != 0) out.add(nu, c);
    }
  }
  std::unique_lock lock(g_product_mutex);
  auto [it, inserted] = g_product_memo.emplace(key, std::move(out));
  return it->second;
}

}  // namespace

Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!contains(nu, lambda)) return 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  const std::array<Partition, 3> key{nu, lambda, mu};
  {
    std::shared_lock lock(g_lr_mutex);
    auto it = g_lr_memo.find(key);
    if (it != g_lr_memo.end()) return it->second;
  }
  const Int value = count_lr_fillings(nu, lambda, mu);
  std::unique_lock lock(g_lr_mutex);
  g_lr_memo.emplace(key, value);
  return value;
}

SchurVector tensor_product(const SchurVector& f, const SchurVector& g) {
  SchurVector out;
  for (const auto& [lambda, a] : f.terms()) {
    for (const auto& [mu, b] : g.terms()) {
      const Int ab = a * b;
      for (const auto& [nu, c] : schur_times_schur(lambda, mu).terms()) out.add(nu, ab * c);
    }
  }
  return out;
}

PowerSumVector schur_to_power(const Partition& lambda) {
  PowerSumVector out;
  for (const Partition& rho : partitions_of(lambda.size())) {
    const Int chi = symmetric_group_character(lambda, rho);
    if (chi == 0) continue;
    out.add(rho, Rational(chi, centralizer_order(rho)));
  }
  return out;
}

SchurVector power_to_schur(const PowerSumVector& f) {
  // The Schur component of degree n depends only on the degree-n power terms,
  // so convert one homogeneous block at a time.
  std::map<int, std::vector<std::pair<const Partition*, const Rational*>>> by_degree;
  for (const auto& [rho, a] : f.terms()) by_degree[rho.size()].emplace_back(&rho, &a);

  SchurVector out;
  for (const auto& [degree, block] : by_degree) {
    for (const Partition& lambda : partitions_of(degree)) {
      Rational c = 0;
      for (const auto& [rho, a] : block) {
        const Int chi = symmetric_group_character(lambda, *rho);
        if (chi != 0) c += (*a) * chi;
      }
      if (c == 0) continue;
      if (!is_integral(c))
        throw ConsistencyError("non-integral Schur coefficient at " + lambda.to_string() +
                               ": " + c.str());
      out.add(lambda, numerator(c));
    }
  }
  return out;
}

std::optional<SchurVector> PlethysmCache::lookup(const Partition& outer,
                                                 const Partition& inner) const {
  std::scoped_lock lock(mutex_);
  auto it = entries_.find({outer, inner});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PlethysmCache::store(const Partition& outer, const Partition& inner, SchurVector value) {
  std::scoped_lock lock(mutex_);
  entries_.insert_or_assign(std::make_pair(outer, inner), std::move(value));
}

std::size_t PlethysmCache::size() const {
  std::scoped_lock lock(mutex_);
  return entries_.size();
}

namespace {

// p_k applied to f: every part of every index gets multiplied by k.
PowerSumVector stretch(const PowerSumVector& f, int k) {
  PowerSumVector out;
  for (const auto& [rho, a] : f.terms()) {
    std::vector<int> parts = rho.parts();
    for (int& p : parts) p *= k;
    out.add(Partition::unchecked(std::move(parts)), a);
  }
  return out;
}

PowerSumVector multiply(const PowerSumVector& f, const PowerSumVector& g) {
  PowerSumVector out;
  for (const auto& [rho, a] : f.terms()) {
    for (const auto& [sigma, b] : g.terms()) {
      std::vector<int> parts;
      parts.reserve(rho.parts().size() + sigma.parts().size());
      std::merge(rho.parts().begin(), rho.parts().end(), sigma.parts().begin(),
                 sigma.parts().end(), std::back_inserter(parts), std::greater<int>());
      out.add(Partition::unchecked(std::move(parts)), a * b);
    }
  }
  return out;
}

// Substitutes `inner` (in the power basis) into s_outer.
PowerSumVector plethysm_power(const Partition& outer, const PowerSumVector& inner) {
  PowerSumVector acc;
  for (const Partition& rho : partitions_of(outer.size())) {
    const Int chi = symmetric_group_character(outer, rho);
    if (chi == 0) continue;
    PowerSumVector prod;
    prod.add(Partition{}, 1);
    for (int j = 0; j < rho.rows(); ++j) prod = multiply(prod, stretch(inner, rho.part(j)));
    const Rational weight(chi, centralizer_order(rho));
    for (const auto& [key, value] : prod.terms()) acc.add(key, weight * value);
  }
  return acc;
}

}  // namespace

SchurVector plethysm(const Partition& outer, const Partition& inner, PlethysmCache& cache) {
  if (outer.empty() || inner.empty())
    throw std::invalid_argument("plethysm requires nonempty partitions");
  if (auto hit = cache.lookup(outer, inner)) return *hit;
  SchurVector out = power_to_schur(plethysm_power(outer, schur_to_power(inner)));
  cache.store(outer, inner, out);
  return out;
}

SchurVector plethysm_vector(const Partition& outer, const SchurVector& inner,
                            std::optional<int> schur_degree_cap) {
  if (outer.empty()) throw std::invalid_argument("plethysm requires a nonempty outer partition");
  for (const auto& [p, c] : inner.terms())
    if (c < 0) throw std::invalid_argument("plethysm argument must have nonnegative coefficients");

  PowerSumVector inner_power;
  for (const auto& [p, c] : inner.terms()) {
    const Rational scale(c);
    for (const auto& [rho, a] : schur_to_power(p).terms()) inner_power.add(rho, scale * a);
  }
  PowerSumVector full = plethysm_power(outer, inner_power);
  if (!schur_degree_cap) return power_to_schur(full);

  PowerSumVector capped;
  for (const auto& [rho, a] : full.terms())
    if (rho.size() <= *schur_degree_cap) capped.add(rho, a);
  return power_to_schur(capped);
}

namespace detail {
void clear_schur_memos() {
  {
    std::unique_lock lock(g_lr_mutex);
    g_lr_memo.clear();
  }
  std::unique_lock lock(g_product_mutex);
  g_product_memo.clear();
}
}  // namespace detail

void clear_computation_caches() {
  detail::clear_character_memo();
  detail::clear_schur_memos();
  detail::clear_lie_memo();
}

}  // namespace cfactors
