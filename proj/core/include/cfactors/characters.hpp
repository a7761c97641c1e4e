#pragma once

#include "cfactors/numbers.hpp"
#include "cfactors/partition.hpp"

namespace cfactors {

// Irreducible symmetric-group character chi^lambda evaluated on the conjugacy
// class of cycle type rho, by signed border-strip removal. Requires
// |lambda| == |rho|. Memoized; safe to call concurrently.
Int symmetric_group_character(const Partition& lambda, const Partition& rho);

// z_rho = prod_i i^{m_i} m_i!, the centralizer order of cycle type rho.
Int centralizer_order(const Partition& rho);

}  // namespace cfactors
