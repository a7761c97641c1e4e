#pragma once

#include <optional>
#include <vector>

#include "cfactors/partition.hpp"
#include "cfactors/table.hpp"

namespace cfactors {

// A nonzero entry that contradicts one of the observed structural patterns.
// Counterexamples are findings, not failures: the scans never throw on them.
struct Violation {
  Partition lambda;
  Partition mu;
  Int value;

  bool operator==(const Violation&) const = default;
};

// Scan for rows that should be mostly zero: (a) lambda a single row [d] with
// a nonzero entry at mu != [d]; (b) lambda a single column [1^d] with a
// nonzero entry at mu not of hook form [a,1^b], 2a+b in {d, d+1}. Whether
// a = 1 counts as hook form is ambiguous, so both readings are reported:
// `single_column` treats a >= 1 as admissible, `single_column_strict`
// requires a >= 2.
struct RowScanReport {
  std::vector<Violation> single_row;
  std::vector<Violation> single_column;
  std::vector<Violation> single_column_strict;
};

RowScanReport check_conjecture_rows(const CoefficientTable& table);

// Nonzero entries where mu has more boxes below its first row than lambda.
std::vector<Violation> check_boxes_below(const CoefficientTable& table);

// Nonzero entries where mu has more boxes outside its first row and column
// than lambda has outside its first column.
std::vector<Violation> check_outside_hook(const CoefficientTable& table);

// The sequence c at (lambda, mu), (lambda+1 top box, mu+1 top box), ... —
// repeated pushes along the diagonal direction.
struct PushSequence {
  Partition lambda;
  Partition mu;
  std::vector<Int> values;  // length steps + 1
};

// Requires |lambda| + steps <= table.max_degree().
PushSequence push_sequence(const CoefficientTable& table, const Partition& lambda,
                           const Partition& mu, int steps);

struct Plateau {
  int start;  // smallest N with values[r] == value for all r >= N
  Int value;
};

// Reports a plateau only when at least 3 trailing values agree; shorter
// constant tails are inconclusive.
std::optional<Plateau> detect_plateau(const PushSequence& s);

// The rectangular block of entries with |mu| == mu_size (rows) and
// |lambda| == lambda_size (columns), both in decreasing lex order.
struct Cluster {
  int mu_size;
  int lambda_size;
  std::vector<Partition> row_partitions;
  std::vector<Partition> col_partitions;
  std::vector<std::vector<Int>> values;  // [row][col]
};

Cluster cluster(const CoefficientTable& table, int mu_size, int lambda_size);

}  // namespace cfactors
