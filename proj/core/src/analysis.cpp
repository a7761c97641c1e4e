#include "cfactors/analysis.hpp"

#include <stdexcept>

namespace cfactors {

namespace {

bool is_single_row(const Partition& p) { return p.rows() == 1; }

bool is_single_column(const Partition& p) { return !p.empty() && p.part(0) == 1; }

// mu == [a, 1^b] with 2a + b in {d, d+1}; min_a distinguishes the two
// readings of whether a == 1 qualifies.
bool admissible_hook(const Partition& mu, int d, int min_a) {
  const int a = mu.part(0);
  if (a < min_a) return false;
  for (int i = 1; i < mu.rows(); ++i)
    if (mu.part(i) != 1) return false;
  const int b = mu.rows() - 1;
  return 2 * a + b == d || 2 * a + b == d + 1;
}

}  // namespace

RowScanReport check_conjecture_rows(const CoefficientTable& table) {
  RowScanReport report;
  for (const auto& [key, value] : table.entries()) {
    if (value == 0) continue;
    const auto& [mu, lambda] = key;
    if (is_single_row(lambda) && mu != lambda)
      report.single_row.push_back({lambda, mu, value});
    if (is_single_column(lambda)) {
      const int d = lambda.size();
      if (!admissible_hook(mu, d, 1)) report.single_column.push_back({lambda, mu, value});
      if (!admissible_hook(mu, d, 2)) report.single_column_strict.push_back({lambda, mu, value});
    }
  }
  return report;
}

std::vector<Violation> check_boxes_below(const CoefficientTable& table) {
  std::vector<Violation> out;
  for (const auto& [key, value] : table.entries()) {
    if (value == 0) continue;
    const auto& [mu, lambda] = key;
    if (mu.size() - mu.part(0) > lambda.size() - lambda.part(0))
      out.push_back({lambda, mu, value});
  }
  return out;
}

std::vector<Violation> check_outside_hook(const CoefficientTable& table) {
  std::vector<Violation> out;
  for (const auto& [key, value] : table.entries()) {
    if (value == 0) continue;
    const auto& [mu, lambda] = key;
    const int m = mu.size() - mu.part(0) - (mu.rows() - 1);
    const int n = lambda.size() - lambda.rows();
    if (m > n) out.push_back({lambda, mu, value});
  }
  return out;
}

PushSequence push_sequence(const CoefficientTable& table, const Partition& lambda,
                           const Partition& mu, int steps) {
  if (steps < 0) throw std::invalid_argument("push_sequence requires steps >= 0");
  if (lambda.size() + steps > table.max_degree())
    throw std::invalid_argument("push_sequence needs a table of degree >= " +
                                std::to_string(lambda.size() + steps) + ", have " +
                                std::to_string(table.max_degree()));
  PushSequence s{lambda, mu, {}};
  s.values.reserve(static_cast<std::size_t>(steps) + 1);
  for (int r = 0; r <= steps; ++r)
    s.values.push_back(table.value(add_top_row(lambda, r), add_top_row(mu, r)));
  return s;
}

std::optional<Plateau> detect_plateau(const PushSequence& s) {
  const auto& v = s.values;
  if (v.empty()) return std::nullopt;
  std::size_t start = v.size() - 1;
  while (start > 0 && v[start - 1] == v.back()) --start;
  if (v.size() - start < 3) return std::nullopt;
  return Plateau{static_cast<int>(start), v.back()};
}

Cluster cluster(const CoefficientTable& table, int mu_size, int lambda_size) {
  if (mu_size < 1 || mu_size > lambda_size || lambda_size > table.max_degree())
    throw std::invalid_argument("cluster out of range: need 1 <= m <= d <= max degree");
  Cluster c{mu_size, lambda_size, partitions_of(mu_size), partitions_of(lambda_size), {}};
  c.values.reserve(c.row_partitions.size());
  for (const Partition& mu : c.row_partitions) {
    std::vector<Int> row;
    row.reserve(c.col_partitions.size());
    for (const Partition& lambda : c.col_partitions) row.push_back(table.value(lambda, mu));
    c.values.push_back(std::move(row));
  }
  return c;
}

}  // namespace cfactors
