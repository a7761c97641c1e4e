#include "cfactors/baseline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cfactors {

CoefficientTable baseline_composition_factors(int max_degree, const EngineOptions& options) {
  if (max_degree < 1)
    throw std::invalid_argument("baseline_composition_factors requires degree >= 1");

  SchurVector lie_sum;
  for (int i = 1; i <= max_degree; ++i)
    for (const auto& [shape, mult] : lie_module(i).terms()) lie_sum.add(shape, mult);

  std::vector<Partition> mus;
  for (int m = 1; m <= max_degree; ++m)
    for (const Partition& mu : partitions_of(m)) mus.push_back(mu);

  CoefficientTable table(max_degree, CoefficientTable::Provenance::baseline);
  for (int l = 1; l <= max_degree; ++l)
    for (const Partition& lambda : partitions_of(l))
      for (int m = 1; m <= l; ++m)
        for (const Partition& mu : partitions_of(m)) table.set(lambda, mu, 0);

  // Pieces of size > |lambda| cannot reach degree |lambda|, so capping the
  // Schur conversion at max_degree loses nothing we record.
  std::vector<SchurVector> results(mus.size());
  const int threads = std::max(1, options.threads);
  if (threads == 1 || mus.size() <= 1) {
    for (std::size_t i = 0; i < mus.size(); ++i)
      results[i] = plethysm_vector(mus[i], lie_sum, max_degree);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= mus.size()) return;
        try {
          results[i] = plethysm_vector(mus[i], lie_sum, max_degree);
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
    for (const auto& [lambda, coeff] : results[i].terms())
      if (lambda.size() <= max_degree) table.set(lambda, mus[i], coeff);
  return table;
}

}  // namespace cfactors
