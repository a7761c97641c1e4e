#include "cfactors/puzzle.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cfactors/errors.hpp"

namespace cfactors {

Partition MuDecomposition::shape() const {
  std::vector<int> sizes;
  sizes.reserve(parts.size());
  for (const Partition& p : parts) sizes.push_back(p.size());
  return Partition(std::move(sizes));
}

Int iter_lr(const Partition& mu, std::span<const Partition> parts) {
  int total = 0;
  for (const Partition& p : parts) total += p.size();
  if (total != mu.size())
    throw std::invalid_argument("iter_lr: part sizes must sum to |mu|");
  if (parts.size() == 1) return parts[0] == mu ? 1 : 0;
  if (parts.size() == 2) return lr_coefficient(mu, parts[0], parts[1]);
  const Partition& head = parts[0];
  Int c = 0;
  for (const Partition& nu : partitions_fitting(mu.size() - head.size(), mu)) {
    const Int l = lr_coefficient(mu, head, nu);
    if (l > 0) c += l * iter_lr(nu, parts.subspan(1));
  }
  return c;
}

bool is_good(const Partition& mu, std::span<const Partition> parts) {
  return iter_lr(mu, parts) > 0;
}

namespace {

// Multisets of size `count` drawn from `candidates` as weakly increasing
// index tuples; candidates are in decreasing lex order, so each chosen run
// is already in canonical order.
void emit_multisets(const std::vector<Partition>& candidates, int count, std::size_t from,
                    std::vector<const Partition*>& chosen,
                    const std::function<void(const std::vector<const Partition*>&)>& sink) {
  if (count == 0) {
    sink(chosen);
    return;
  }
  for (std::size_t i = from; i < candidates.size(); ++i) {
    chosen.push_back(&candidates[i]);
    emit_multisets(candidates, count - 1, i, chosen, sink);
    chosen.pop_back();
  }
}

}  // namespace

std::map<Partition, std::vector<MuDecomposition>> mu_decompositions(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("mu_decompositions requires a nonempty partition");
  std::map<Partition, std::vector<MuDecomposition>> out;
  for (const Partition& theta : partitions_of(mu.size())) {
    // Runs of equal shape entries share one candidate list; distinct tuples
    // from the product correspond to multisets per run.
    struct Run {
      std::vector<Partition> candidates;
      int count;
    };
    std::vector<Run> runs;
    bool feasible = true;
    for (int j = 0; j < theta.rows() && feasible; ++j) {
      if (j > 0 && theta.part(j) == theta.part(j - 1)) {
        ++runs.back().count;
        continue;
      }
      Run run{partitions_fitting(theta.part(j), mu), 1};
      if (run.candidates.empty()) feasible = false;
      runs.push_back(std::move(run));
    }
    if (!feasible) continue;

    std::vector<MuDecomposition> decomps;
    std::vector<std::vector<const Partition*>> stack(runs.size());
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
      if (r == runs.size()) {
        MuDecomposition d;
        for (const auto& group : stack)
          for (const Partition* p : group) d.parts.push_back(*p);
        decomps.push_back(std::move(d));
        return;
      }
      std::vector<const Partition*> chosen;
      emit_multisets(runs[r].candidates, runs[r].count, 0, chosen,
                     [&](const std::vector<const Partition*>& group) {
                       stack[r] = group;
                       rec(r + 1);
                     });
    };
    rec(0);
    if (!decomps.empty()) out.emplace(theta, std::move(decomps));
  }
  return out;
}

namespace {

int floor_div(int a, int b) {
  // b > 0; rounds toward negative infinity.
  int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace

int phi_bound(const Partition& shape, int target, const LieTruncation& trunc) {
  if (shape.empty()) throw std::invalid_argument("phi_bound requires a nonempty shape");
  const int k = shape.rows();
  if (trunc.count() < k - 1)
    throw std::invalid_argument("truncation too small for phi_bound");
  int prefix = 0;
  for (int j = 0; j + 1 < k; ++j) prefix += shape.part(j) * trunc.piece_size(j + 1);
  return floor_div(target - prefix, shape.part(k - 1));
}

std::vector<Instruction> build_instructions(int target, const Partition& shape,
                                            const LieTruncation& trunc) {
  std::vector<Instruction> out;
  if (shape.empty() || shape.size() > target) return out;
  if (trunc.degree() < target)
    throw std::invalid_argument("build_instructions requires trunc.degree() >= target");
  const int phi = phi_bound(shape, target, trunc);
  if (phi <= 0) return out;
  // Search only among pieces of size <= phi; any valid instruction lives
  // entirely inside that prefix of the truncation.
  int limit = 0;
  while (limit < trunc.count() && trunc.piece_size(limit + 1) <= phi) ++limit;

  const int k = shape.rows();
  std::vector<int> suffix_min(static_cast<std::size_t>(k) + 1, 0);
  for (int j = k - 1; j >= 0; --j)
    suffix_min[static_cast<std::size_t>(j)] =
        suffix_min[static_cast<std::size_t>(j + 1)] + shape.part(j);

  std::vector<int> indices;
  std::vector<bool> used(static_cast<std::size_t>(limit) + 1, false);
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == k) {
      if (remaining == 0) out.push_back(Instruction{indices});
      return;
    }
    const int weight = shape.part(slot);
    for (int i = 1; i <= limit; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const int cost = weight * trunc.piece_size(i);
      if (cost > remaining - suffix_min[static_cast<std::size_t>(slot + 1)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      indices.push_back(i);
      rec(slot + 1, remaining - cost);
      indices.pop_back();
      used[static_cast<std::size_t>(i)] = false;
    }
  };
  rec(0, target);
  return out;
}

InstructionTable build_instruction_table(int target, const LieTruncation& trunc) {
  InstructionTable table;
  table.target_size = target;
  for (int m = 1; m < target; ++m) {
    for (const Partition& theta : partitions_of(m)) {
      std::vector<Instruction> instrs = build_instructions(target, theta, trunc);
      if (!instrs.empty()) table.by_shape.emplace(theta, std::move(instrs));
    }
  }
  return table;
}

int target_size(const Partition& shape, const Instruction& instr, const LieTruncation& trunc) {
  if (static_cast<std::size_t>(shape.rows()) != instr.indices.size())
    throw std::invalid_argument("target_size: shape and instruction lengths differ");
  int total = 0;
  for (int j = 0; j < shape.rows(); ++j)
    total += shape.part(j) * trunc.piece_size(instr.indices[static_cast<std::size_t>(j)]);
  return total;
}

Rational over_count_factor(const MuDecomposition& d) {
  std::map<Partition, int> mult;
  for (const Partition& p : d.parts) ++mult[p];
  Int denom = 1;
  for (const auto& [p, n] : mult)
    for (int m = 2; m <= n; ++m) denom *= m;
  return Rational(1, denom);
}

SchurVector assemble(const MuDecomposition& d, const Instruction& instr,
                     const LieTruncation& trunc, PlethysmCache& cache) {
  if (d.parts.size() != instr.indices.size())
    throw std::invalid_argument("assemble: decomposition and instruction lengths differ");
  if (d.parts.empty()) throw std::invalid_argument("assemble: empty decomposition");
  SchurVector acc = plethysm(d.parts[0], trunc.piece(instr.indices[0]).shape, cache);
  for (std::size_t j = 1; j < d.parts.size(); ++j) {
    SchurVector factor =
        plethysm(d.parts[j], trunc.piece(instr.indices[j]).shape, cache);
    acc = tensor_product(acc, factor);
  }
  return acc;
}

namespace {

// Assemblies depend only on (decomposition, instruction), not on mu, so they
// are shared across the whole mu loop of one degree.
class AssemblyCache {
 public:
  const SchurVector& get(const MuDecomposition& d, const Instruction& instr,
                         const LieTruncation& trunc, PlethysmCache& plethysms) {
    const std::pair<std::vector<Partition>, std::vector<int>> key{d.parts, instr.indices};
    {
      std::scoped_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return it->second;
    }
    SchurVector value = assemble(d, instr, trunc, plethysms);
    std::scoped_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::vector<Partition>, std::vector<int>>, SchurVector> entries_;
};

// Contributions of one mu row, accumulated exactly; over-count factors make
// the intermediate sums rational, the final row must come out integral.
std::vector<std::pair<Partition, Int>> compute_row(
    const Partition& mu, const InstructionTable& instructions, const LieTruncation& trunc,
    PlethysmCache& plethysms, AssemblyCache& assemblies) {
  std::map<Partition, Rational> row;
  for (const auto& [theta, decomps] : mu_decompositions(mu)) {
    auto it = instructions.by_shape.find(theta);
    if (it == instructions.by_shape.end()) continue;
    for (const MuDecomposition& d : decomps) {
      const Int alpha = iter_lr(mu, d.parts);
      if (alpha == 0) continue;
      const Rational weight = over_count_factor(d) * alpha;
      for (const Instruction& instr : it->second) {
        const SchurVector& assembly = assemblies.get(d, instr, trunc, plethysms);
        for (const auto& [lambda, beta] : assembly.terms()) row[lambda] += weight * beta;
      }
    }
  }
  std::vector<std::pair<Partition, Int>> integral;
  integral.reserve(row.size());
  for (auto& [lambda, value] : row) {
    if (value == 0) continue;
    if (!is_integral(value) || value < 0)
      throw ConsistencyError("coefficient at mu=" + mu.to_string() +
                             " lambda=" + lambda.to_string() +
                             " is not a nonnegative integer: " + value.str());
    integral.emplace_back(lambda, numerator(value));
  }
  return integral;
}

CoefficientTable composition_factors_impl(int degree, const EngineOptions& options,
                                          PlethysmCache& plethysms) {
  if (degree < 1) throw std::invalid_argument("composition_factors requires degree >= 1");
  const LieTruncation trunc(degree);
  const InstructionTable instructions = build_instruction_table(degree, trunc);

  CoefficientTable table(degree, CoefficientTable::Provenance::optimized);
  const std::vector<Partition> lambdas = partitions_of(degree);
  std::vector<Partition> mus;
  for (int m = 1; m < degree; ++m)
    for (const Partition& mu : partitions_of(m)) mus.push_back(mu);

  // Dense zero block, then the identity on |mu| == degree.
  for (const Partition& lambda : lambdas) {
    for (const Partition& other : lambdas) table.set(lambda, other, other == lambda ? 1 : 0);
    for (const Partition& mu : mus) table.set(lambda, mu, 0);
  }

  AssemblyCache assemblies;
  std::vector<std::vector<std::pair<Partition, Int>>> rows(mus.size());
  const int threads = std::max(1, options.threads);
  if (threads == 1 || mus.size() <= 1) {
    for (std::size_t i = 0; i < mus.size(); ++i)
      rows[i] = compute_row(mus[i], instructions, trunc, plethysms, assemblies);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= mus.size()) return;
        try {
          rows[i] = compute_row(mus[i], instructions, trunc, plethysms, assemblies);
        } catch (...) {
          std::scoped_lock lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t i = 0; i < mus.size(); ++i)
    for (const auto& [lambda, value] : rows[i]) table.set(lambda, mus[i], value);
  return table;
}

}  // namespace

CoefficientTable composition_factors(int degree, const EngineOptions& options) {
  PlethysmCache plethysms;
  return composition_factors_impl(degree, options, plethysms);
}

CoefficientTable compute_table(int max_degree, const EngineOptions& options) {
  if (max_degree < 1) throw std::invalid_argument("compute_table requires degree >= 1");
  CoefficientTable table(max_degree, CoefficientTable::Provenance::optimized);
  PlethysmCache plethysms;
  for (int d = 1; d <= max_degree; ++d) {
    const CoefficientTable slice = composition_factors_impl(d, options, plethysms);
    for (const auto& [key, value] : slice.entries()) table.set(key.second, key.first, value);
  }
  return table;
}

std::map<Partition, std::size_t> instruction_census(int target, int tuple_length,
                                                    const LieTruncation& trunc) {
  std::map<Partition, std::size_t> out;
  for (int m = 1; m <= target; ++m)
    for (const Partition& theta : partitions_of(m)) {
      if (theta.rows() != tuple_length) continue;
      const auto instrs = build_instructions(target, theta, trunc);
      if (!instrs.empty()) out.emplace(theta, instrs.size());
    }
  return out;
}

}  // namespace cfactors
