#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "cfactors/lie.hpp"
#include "cfactors/numbers.hpp"
#include "cfactors/partition.hpp"
#include "cfactors/schur.hpp"
#include "cfactors/table.hpp"

namespace cfactors {

// An unordered decomposition of mu into partitions whose sizes sum to |mu|,
// kept in canonical representative order: sizes weakly decreasing, equal
// sizes in decreasing lexicographic order.
struct MuDecomposition {
  std::vector<Partition> parts;

  // The partition of sizes (|mu_1|, ..., |mu_k|).
  Partition shape() const;

  bool operator==(const MuDecomposition&) const = default;
  auto operator<=>(const MuDecomposition&) const = default;
};

// A tuple of pairwise distinct 1-based Lie piece indices.
struct Instruction {
  std::vector<int> indices;

  bool operator==(const Instruction&) const = default;
  auto operator<=>(const Instruction&) const = default;
};

// All instructions of one target size, grouped by shape.
struct InstructionTable {
  int target_size = 0;
  std::map<Partition, std::vector<Instruction>> by_shape;
};

// Iterated Littlewood-Richardson coefficient of mu against an ordered tuple
// of partitions whose sizes sum to |mu|. A 1-tuple is the indicator of mu, a
// 2-tuple the plain LR coefficient; longer tuples recurse over intermediate
// partitions contained in mu.
Int iter_lr(const Partition& mu, std::span<const Partition> parts);

bool is_good(const Partition& mu, std::span<const Partition> parts);

// For each shape theta of |mu|, the distinct canonical decompositions of mu
// drawn from products of partitions fitting inside mu. Shapes with no
// decomposition are omitted.
std::map<Partition, std::vector<MuDecomposition>> mu_decompositions(const Partition& mu);

// Per-shape upper bound on the size of any Lie piece usable in an
// instruction of the given target size: floor((target - sum_{j<k}
// theta_j r_j) / theta_k) with r_j the size of the j-th Lie piece globally.
// May be <= 0, which means no instruction exists.
int phi_bound(const Partition& shape, int target, const LieTruncation& trunc);

// All tuples of distinct Lie piece indices with sum_j theta_j * r_{i_j} ==
// target, searched inside the phi-bounded truncation, in lexicographic index
// order. Requires trunc.degree() >= target.
std::vector<Instruction> build_instructions(int target, const Partition& shape,
                                            const LieTruncation& trunc);

// Instructions for every shape of every size m < target.
InstructionTable build_instruction_table(int target, const LieTruncation& trunc);

// sum_j theta_j * r_{i_j}.
int target_size(const Partition& shape, const Instruction& instr, const LieTruncation& trunc);

// Reciprocal of the product of factorials of the multiplicities of repeated
// partitions in the decomposition.
Rational over_count_factor(const MuDecomposition& d);

// The Schur expansion of (mu_1 (.) l_{i_1}) (x) ... (x) (mu_k (.) l_{i_k}):
// plethysm of each decomposition part with its paired Lie piece, then the
// tensor product across pairs. Homogeneous of the pairing's target size.
SchurVector assemble(const MuDecomposition& d, const Instruction& instr,
                     const LieTruncation& trunc, PlethysmCache& cache);

struct EngineOptions {
  int threads = 1;
};

// All coefficients c_{lambda,mu} with |lambda| == degree and
// 1 <= |mu| <= degree, by weighted enumeration of decomposition puzzles.
CoefficientTable composition_factors(int degree, const EngineOptions& options = {});

// Merged table for all lambda-degrees 1..max_degree.
CoefficientTable compute_table(int max_degree, const EngineOptions& options = {});

// Diagnostic: number of instructions of each shape with the given tuple
// length, over all shape sizes m <= target.
std::map<Partition, std::size_t> instruction_census(int target, int tuple_length,
                                                    const LieTruncation& trunc);

}  // namespace cfactors
