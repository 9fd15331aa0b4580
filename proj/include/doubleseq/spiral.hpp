// spiral.hpp — square-spiral layout for double subsequences.
//
// Linear index j is placed by filling shell m (the m-th bounding square):
// down column m from row 1 to m, then left along row m from column m-1 to 1.

#pragma once

#include <optional>
#include <vector>

#include "doubleseq/report.hpp"
#include "doubleseq/sequence.hpp"

namespace doubleseq {

struct GridPos {
  Index row = 1;
  Index col = 1;
};

/// Closed form: with m = ceil(sqrt(j)) and r = j - (m-1)^2, position is
/// (r, m) when r <= m, else (m, 2m - r).
GridPos spiral_position(Index j);

/// Two-sided inverse of spiral_position.
Index spiral_index(Index row, Index col);

/// Strictly increasing index sequences {n_j}, {k_j} selecting x_{n_j, k_j}.
struct SubsequenceSelector {
  std::vector<Index> n_seq;
  std::vector<Index> k_seq;

  /// Throws InvalidSelectorError unless both sequences are strictly
  /// increasing, positive, and at least `count` long.
  void validate(Index count) const;
};

/// Finite spiral-laid matrix; cells not reached by any j <= count stay empty.
struct SubsequenceMatrix {
  Index side = 0;  // ceil(sqrt(count))
  std::vector<std::optional<double>> cells;  // row-major side x side

  std::optional<double> at(Index row, Index col) const {
    return cells[static_cast<std::size_t>((row - 1) * side + (col - 1))];
  }
  Json to_json() const;
  std::string to_csv() const;
};

/// Evaluates x_j = x_{n_j, k_j} for j = 1..count and lays the values out on
/// the spiral.
SubsequenceMatrix build_double_subsequence(const ScalarDoubleSequence& seq,
                                           const SubsequenceSelector& sel,
                                           Index count);

}  // namespace doubleseq
