#include "doubleseq/spiral.hpp"

#include <cmath>
#include <sstream>

namespace doubleseq {

namespace {

Index int_ceil_sqrt(Index j) {
  Index m = static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(j))));
  while (m > 1 && (m - 1) * (m - 1) >= j) --m;
  while (m * m < j) ++m;
  return m;
}

}  // namespace

GridPos spiral_position(Index j) {
  if (j < 1) throw InvalidParamsError("spiral index must be >= 1");
  const Index m = int_ceil_sqrt(j);
  const Index r = j - (m - 1) * (m - 1);
  if (r <= m) return GridPos{r, m};
  return GridPos{m, 2 * m - r};
}

Index spiral_index(Index row, Index col) {
  if (row < 1 || col < 1)
    throw InvalidParamsError("spiral coordinates must be >= 1");
  const Index m = std::max(row, col);
  if (col == m) return (m - 1) * (m - 1) + row;
  return m * m - col + 1;
}

void SubsequenceSelector::validate(Index count) const {
  if (count < 1) throw InvalidParamsError("count must be >= 1");
  if (static_cast<Index>(n_seq.size()) < count ||
      static_cast<Index>(k_seq.size()) < count)
    throw InvalidSelectorError("selector shorter than requested count");
  for (Index j = 0; j < count; ++j) {
    if (n_seq[static_cast<std::size_t>(j)] < 1 ||
        k_seq[static_cast<std::size_t>(j)] < 1)
      throw InvalidSelectorError("selector indices must be >= 1");
    if (j > 0) {
      if (n_seq[static_cast<std::size_t>(j)] <=
              n_seq[static_cast<std::size_t>(j - 1)] ||
          k_seq[static_cast<std::size_t>(j)] <=
              k_seq[static_cast<std::size_t>(j - 1)])
        throw InvalidSelectorError("selector sequences must be strictly "
                                   "increasing");
    }
  }
}

SubsequenceMatrix build_double_subsequence(const ScalarDoubleSequence& seq,
                                           const SubsequenceSelector& sel,
                                           Index count) {
  sel.validate(count);
  SubsequenceMatrix m;
  m.side = int_ceil_sqrt(count);
  m.cells.assign(static_cast<std::size_t>(m.side * m.side), std::nullopt);
  for (Index j = 1; j <= count; ++j) {
    const GridPos pos = spiral_position(j);
    const double v = seq(sel.n_seq[static_cast<std::size_t>(j - 1)],
                         sel.k_seq[static_cast<std::size_t>(j - 1)]);
    m.cells[static_cast<std::size_t>((pos.row - 1) * m.side + (pos.col - 1))] = v;
  }
  return m;
}

Json SubsequenceMatrix::to_json() const {
  Json j;
  j["side"] = side;
  Json rows = Json::array();
  for (Index r = 1; r <= side; ++r) {
    Json row = Json::array();
    for (Index c = 1; c <= side; ++c) {
      auto v = at(r, c);
      row.push_back(v ? Json(*v) : Json(nullptr));
    }
    rows.push_back(row);
  }
  j["cells"] = rows;
  return j;
}

std::string SubsequenceMatrix::to_csv() const {
  std::ostringstream out;
  out << "k,l,value\n";
  for (Index r = 1; r <= side; ++r) {
    for (Index c = 1; c <= side; ++c) {
      out << r << "," << c << ",";
      auto v = at(r, c);
      if (v) out << Json(*v).dump();
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace doubleseq
