#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cfactors/numbers.hpp"
#include "cfactors/partition.hpp"

namespace cfactors {

// The computed coefficients c_{lambda,mu}: the multiplicity of the lambda
// Schur functor on V inside the mu Schur functor applied to the free Lie
// algebra on V. Entries are stored densely (explicit zeros) over the pairs
// 1 <= |mu| <= |lambda| for every tracked lambda-degree; pairs with
// |mu| > |lambda| are identically zero and implied. Keys are (mu, lambda)
// so iteration runs in canonical order: mu outer, lambda inner, each by
// increasing size then decreasing lex.
class CoefficientTable {
 public:
  enum class Provenance { optimized, baseline };

  CoefficientTable(int max_degree, Provenance provenance);

  int max_degree() const { return max_degree_; }
  Provenance provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = p; }

  // Requires 1 <= |mu| <= |lambda| <= max_degree.
  void set(const Partition& lambda, const Partition& mu, Int value);

  // Stored value; zero for pairs with |mu| > |lambda| and for pairs of
  // untracked degrees. Throws if either size is outside 1..max_degree.
  const Int& value(const Partition& lambda, const Partition& mu) const;

  const std::map<std::pair<Partition, Partition>, Int>& entries() const { return entries_; }
  std::size_t stored_pairs() const { return entries_.size(); }

  // Number of (mu, lambda) pairs the table describes, counting the implied
  // zeros with |mu| > |lambda|: (sum_{n<=D} p(n))^2.
  static Int described_pair_count(int max_degree);

 private:
  int max_degree_;
  Provenance provenance_;
  std::map<std::pair<Partition, Partition>, Int> entries_;
};

std::string to_string(CoefficientTable::Provenance p);
CoefficientTable::Provenance provenance_from_string(const std::string& text);

struct TableMismatch {
  Partition mu;
  Partition lambda;
  Int lhs;
  Int rhs;
};

struct VerifyResult {
  bool match() const { return !first_mismatch.has_value(); }
  Int pairs_compared;
  std::optional<TableMismatch> first_mismatch;
};

// Entrywise comparison over every ordered pair of partition sizes
// 1..max_degree, including the implied zeros. Both tables must have the
// same max_degree.
VerifyResult compare_tables(const CoefficientTable& lhs, const CoefficientTable& rhs);

}  // namespace cfactors
