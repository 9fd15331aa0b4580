#include "doubleseq/budget.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace doubleseq {

std::uint64_t max_cells_budget() {
  const char* raw = std::getenv("DOUBLESEQ_MAX_CELLS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxCells;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(raw, &pos);
    if (raw[pos] != '\0' || v == 0) return kDefaultMaxCells;
    return static_cast<std::uint64_t>(v);
  } catch (...) {
    return kDefaultMaxCells;
  }
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace doubleseq
