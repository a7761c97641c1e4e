#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "cfactors/numbers.hpp"
#include "cfactors/partition.hpp"

namespace cfactors {

// A symmetric function in the Schur basis: a sparse integer-coefficient
// vector indexed by partitions. Zero coefficients are never stored.
class SchurVector {
 public:
  SchurVector() = default;
  static SchurVector single(const Partition& p, Int coeff = 1);

  void add(const Partition& p, const Int& coeff);
  const Int& coeff(const Partition& p) const;
  const std::map<Partition, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // The common size of all indexing partitions, when there is one.
  std::optional<int> homogeneous_degree() const;

  // "1*[2,2] + 1*[1,1,1,1]" with terms in canonical partition order; "0"
  // when empty.
  std::string to_string() const;

  bool operator==(const SchurVector&) const = default;

 private:
  std::map<Partition, Int> terms_;
};

// A symmetric function in the power-sum basis with exact rational
// coefficients. Zero coefficients are never stored.
class PowerSumVector {
 public:
  PowerSumVector() = default;

  void add(const Partition& p, const Rational& coeff);
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool operator==(const PowerSumVector&) const = default;

 private:
  std::map<Partition, Rational> terms_;
};

// The Littlewood-Richardson coefficient: the number of semistandard fillings
// of nu/lambda with content mu whose reverse reading word is a lattice word.
// Zero whenever |nu| != |lambda| + |mu| or lambda is not contained in nu.
Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

// Bilinear extension of the product of Schur functions.
SchurVector tensor_product(const SchurVector& f, const SchurVector& g);

// s_lambda = sum_rho chi^lambda(rho)/z_rho p_rho.
PowerSumVector schur_to_power(const Partition& lambda);

// Inverse expansion; every resulting coefficient must come out integral,
// otherwise a ConsistencyError is thrown.
SchurVector power_to_schur(const PowerSumVector& f);

// Memo table for plethysm results, keyed by the ordered pair (outer, inner).
// Lookups and insertions may race; duplicate computations of the same key
// produce identical values, so last-write-wins is fine.
class PlethysmCache {
 public:
  std::optional<SchurVector> lookup(const Partition& outer, const Partition& inner) const;
  void store(const Partition& outer, const Partition& inner, SchurVector value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, SchurVector> entries_;
};

// Expansion of S_outer(S_inner(V)) in Schur terms, computed through the
// power-sum basis. Both arguments must be nonempty. Results are memoized in
// the given cache.
SchurVector plethysm(const Partition& outer, const Partition& inner, PlethysmCache& cache);

// S_outer applied to the representation whose character is `inner` (which
// must have nonnegative integer coefficients). When `schur_degree_cap` is
// set, only components of total degree <= cap are converted back to the
// Schur basis; the power-sum expansion itself is computed in full.
SchurVector plethysm_vector(const Partition& outer, const SchurVector& inner,
                            std::optional<int> schur_degree_cap = std::nullopt);

}  // namespace cfactors
