#pragma once

#include "cfactors/puzzle.hpp"
#include "cfactors/table.hpp"

namespace cfactors {

// Reference pipeline: expands S_mu of the degree-truncated free Lie algebra
// directly through the power-sum basis, for every mu of size <= max_degree,
// and records the coefficient of every lambda with |lambda| <= max_degree.
// Intentionally the slow route; used as the correctness oracle and the
// benchmark baseline.
CoefficientTable baseline_composition_factors(int max_degree, const EngineOptions& options = {});

}  // namespace cfactors
