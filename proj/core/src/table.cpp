#include "cfactors/table.hpp"

#include <stdexcept>

namespace cfactors {

CoefficientTable::CoefficientTable(int max_degree, Provenance provenance)
    : max_degree_(max_degree), provenance_(provenance) {
  if (max_degree < 1) throw std::invalid_argument("table degree must be >= 1");
}

void CoefficientTable::set(const Partition& lambda, const Partition& mu, Int value) {
  if (mu.size() < 1 || mu.size() > lambda.size() || lambda.size() > max_degree_)
    throw std::invalid_argument("table entry out of range: mu=" + mu.to_string() +
                                " lambda=" + lambda.to_string());
  entries_.insert_or_assign(std::make_pair(mu, lambda), std::move(value));
}

const Int& CoefficientTable::value(const Partition& lambda, const Partition& mu) const {
  static const Int zero = 0;
  if (lambda.size() < 1 || lambda.size() > max_degree_ || mu.size() < 1 ||
      mu.size() > max_degree_)
    throw std::invalid_argument("table lookup out of range: mu=" + mu.to_string() +
                                " lambda=" + lambda.to_string() + " (max degree " +
                                std::to_string(max_degree_) + ")");
  if (mu.size() > lambda.size()) return zero;
  auto it = entries_.find({mu, lambda});
  return it == entries_.end() ? zero : it->second;
}

Int CoefficientTable::described_pair_count(int max_degree) {
  Int total = 0;
  for (int n = 1; n <= max_degree; ++n) total += partition_count(n);
  return total * total;
}

std::string to_string(CoefficientTable::Provenance p) {
  return p == CoefficientTable::Provenance::optimized ? "optimized" : "baseline";
}

CoefficientTable::Provenance provenance_from_string(const std::string& text) {
  if (text == "optimized") return CoefficientTable::Provenance::optimized;
  if (text == "baseline") return CoefficientTable::Provenance::baseline;
  throw std::invalid_argument("unknown provenance: " + text);
}

VerifyResult compare_tables(const CoefficientTable& lhs, const CoefficientTable& rhs) {
  if (lhs.max_degree() != rhs.max_degree())
    throw std::invalid_argument("cannot compare tables of different degrees");
  VerifyResult result;
  result.pairs_compared = 0;
  std::vector<Partition> all;
  for (int n = 1; n <= lhs.max_degree(); ++n)
    for (const Partition& p : partitions_of(n)) all.push_back(p);
  for (const Partition& mu : all) {
    for (const Partition& lambda : all) {
      result.pairs_compared += 1;
      const Int& a = lhs.value(lambda, mu);
      const Int& b = rhs.value(lambda, mu);
      if (a != b && !result.first_mismatch) {
        result.first_mismatch = TableMismatch{mu, lambda, a, b};
      }
    }
  }
  return result;
}

}  // namespace cfactors
