// Brute-force oscillation modulus. Deliberately written as the plainest
// possible quadruple loop over the region, sharing nothing with the scanning
// engine, so the two can cross-check each other. Values are memoized into a
// flat table when the extended rectangle is small enough; only the pure
// evaluator is cached, never any part of the verdict logic.

#include "doubleseq/modulus.hpp"

#include <cmath>
#include <vector>

namespace doubleseq {

namespace {

constexpr std::uint64_t kCacheCellLimit = 20'000'000;

void validate(double alpha, double delta, Index threshold, Index horizon) {
  if (alpha <= 0.0 || delta <= 0.0)
    throw InvalidParamsError("alpha and delta must be > 0");
  if (threshold < 1) throw InvalidParamsError("threshold must be >= 1");
  if (horizon < threshold)
    throw InvalidParamsError("horizon must be >= threshold");
}

Index floor_end(Index i, double ratio) {
  return static_cast<Index>(std::floor((1.0 + ratio) * static_cast<double>(i)));
}

}  // namespace

double oscillation_modulus(const ScalarDoubleSequence& seq, double alpha,
                           double delta, Index threshold, Index horizon) {
  validate(alpha, delta, threshold, horizon);
  const Index s_max = floor_end(horizon, alpha);
  const Index t_max = floor_end(horizon, delta);
  const std::uint64_t rows = static_cast<std::uint64_t>(s_max - threshold + 1);
  const std::uint64_t cols = static_cast<std::uint64_t>(t_max - threshold + 1);

  std::vector<double> table;
  const bool cached = rows * cols <= kCacheCellLimit;
  if (cached) {
    table.resize(static_cast<std::size_t>(rows * cols));
    for (Index s = threshold; s <= s_max; ++s)
      for (Index t = threshold; t <= t_max; ++t)
        table[static_cast<std::size_t>(s - threshold) *
                  static_cast<std::size_t>(cols) +
              static_cast<std::size_t>(t - threshold)] = seq(s, t);
  }
  const auto value = [&](Index s, Index t) {
    if (cached)
      return table[static_cast<std::size_t>(s - threshold) *
                       static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(t - threshold)];
    return seq(s, t);
  };

  double sup = 0.0;
  for (Index k = threshold; k <= horizon; ++k) {
    const Index s_end = floor_end(k, alpha);
    for (Index l = threshold; l <= horizon; ++l) {
      const Index t_end = floor_end(l, delta);
      const double base = value(k, l);
      for (Index s = k; s <= s_end; ++s) {
        for (Index t = l; t <= t_end; ++t) {
          const double gap = std::fabs(base - value(s, t));
          if (gap > sup) sup = gap;
        }
      }
    }
  }
  return sup;
}

double oscillation_modulus(const FactorableGridSequence& grid, double alpha,
                           double delta, Index threshold, Index horizon) {
  validate(alpha, delta, threshold, horizon);
  const Index s_max = floor_end(horizon, alpha);
  const Index t_max = floor_end(horizon, delta);
  std::vector<double> us(static_cast<std::size_t>(s_max - threshold + 1));
  std::vector<double> vs(static_cast<std::size_t>(t_max - threshold + 1));
  for (Index s = threshold; s <= s_max; ++s)
    us[static_cast<std::size_t>(s - threshold)] = grid.row_value(s);
  for (Index t = threshold; t <= t_max; ++t)
    vs[static_cast<std::size_t>(t - threshold)] = grid.col_value(t);

  double sup = 0.0;
  for (Index k = threshold; k <= horizon; ++k) {
    const Index s_end = floor_end(k, alpha);
    const double uk = us[static_cast<std::size_t>(k - threshold)];
    for (Index l = threshold; l <= horizon; ++l) {
      const Index t_end = floor_end(l, delta);
      const double vl = vs[static_cast<std::size_t>(l - threshold)];
      for (Index s = k; s <= s_end; ++s) {
        const double du = uk - us[static_cast<std::size_t>(s - threshold)];
        for (Index t = l; t <= t_end; ++t) {
          const double gap =
              std::hypot(du, vl - vs[static_cast<std::size_t>(t - threshold)]);
          if (gap > sup) sup = gap;
        }
      }
    }
  }
  return sup;
}

}  // namespace doubleseq
