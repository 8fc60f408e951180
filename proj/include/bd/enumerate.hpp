#pragma once

#include <vector>

#include "bd/pool.hpp"

namespace bd {

// Exhaustive, duplicate-free, canonically ordered list of every admissible
// tuple of the given rank. Requires all lower levels of the pool to be
// complete; fails fast with BudgetError (carrying the exact cardinality from
// the counting recurrence) when #Delta_rank exceeds the budget.
std::vector<TupleCode> enumerate_level(const Pool& pool, std::uint32_t rank,
                                       const Integer& budget);

// Interns levels 1..truncation into the pool (budget applies per level) and
// marks them complete.
void ensure_enumerated(Pool& pool, std::uint32_t truncation, const Integer& budget);

}  // namespace bd
