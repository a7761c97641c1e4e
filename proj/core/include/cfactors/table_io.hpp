#pragma once

#include <filesystem>

#include "cfactors/table.hpp"

namespace cfactors {

// On-disk formats. Both carry max_degree and provenance, list entries in
// canonical order (mu then lambda, increasing size, decreasing lex within a
// size), and include explicit zeros for every pair with |mu| <= |lambda|;
// pairs with |mu| > |lambda| are omitted and implied zero. Writes are
// atomic (temp file + rename) and byte-deterministic.
//
// JSON: { "max_degree": D, "provenance": "...",
//         "entries": [ { "mu": [..], "lambda": [..], "c": n }, ... ] }
// CSV:  two comment lines "# max_degree=D" / "# provenance=...", then one
//       line "mu;lambda;coeff" per entry, partitions rendered "[a,b,c]".
void write_table_json(const CoefficientTable& table, const std::filesystem::path& path);
void write_table_csv(const CoefficientTable& table, const std::filesystem::path& path);

CoefficientTable read_table_json(const std::filesystem::path& path);
CoefficientTable read_table_csv(const std::filesystem::path& path);

// Dispatches on the file extension (".json" / ".csv").
CoefficientTable read_table(const std::filesystem::path& path);
void write_table(const CoefficientTable& table, const std::filesystem::path& path);

// One rectangle per (mu, lambda) pair over all partitions of size
// 1..max_degree on both axes (lambda on rows, mu on columns), colored by a
// scale monotone in the coefficient, with degree boundary ticks and an
// embedded legend. Deterministic bytes.
void write_heatmap_svg(const CoefficientTable& table, const std::filesystem::path& path);

}  // namespace cfactors
