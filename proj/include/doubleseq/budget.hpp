// budget.hpp — the per-check cell cap (DOUBLESEQ_MAX_CELLS).

#pragma once

#include <cstdint>

namespace doubleseq {

inline constexpr std::uint64_t kDefaultMaxCells = 100'000'000;

/// Reads DOUBLESEQ_MAX_CELLS from the environment; falls back to the default
/// when unset or unparsable.
std::uint64_t max_cells_budget();

/// Saturating product, used when sizing logical scan regions.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b);

}  // namespace doubleseq
