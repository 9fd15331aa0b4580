// sequence.hpp — double sequences: scalar-valued and factorable planar grids.

#pragma once

#include <functional>
#include <string>
#include <utility>

#include "doubleseq/types.hpp"

namespace doubleseq {

/// A real double sequence x = {x_{k,l}}, k, l >= 1, given by a pure total
/// evaluator. Evaluators must be deterministic: equal indices yield
/// bit-identical values, so window scans can be re-checked exactly.
class ScalarDoubleSequence {
 public:
  using Evaluator = std::function<double(Index, Index)>;

  ScalarDoubleSequence(std::string label, Evaluator evaluator)
      : label_(std::move(label)), evaluator_(std::move(evaluator)) {}

  double operator()(Index k, Index l) const {
    require_valid(k, l);
    return evaluator_(k, l);
  }
  double operator()(IndexPair idx) const { return (*this)(idx.k, idx.l); }

  const std::string& label() const { return label_; }

 private:
  static void require_valid(Index k, Index l) {
    if (k < 1 || l < 1)
      throw InvalidParamsError("sequence indices must be >= 1");
  }

  std::string label_;
  Evaluator evaluator_;
};

/// Direct read of x_{k,l}.
inline double eval(const ScalarDoubleSequence& seq, IndexPair idx) {
  return seq(idx);
}

/// A factorable double sequence of planar points (u_k, v_l) generated by two
/// single-index sequences. Every generated point must lie in the declared
/// domain box; evaluation checks this and throws DomainError otherwise.
class FactorableGridSequence {
 public:
  using Generator = std::function<double(Index)>;

  FactorableGridSequence(std::string label, Generator row_gen, Generator col_gen,
                         DomainBox domain)
      : label_(std::move(label)),
        row_gen_(std::move(row_gen)),
        col_gen_(std::move(col_gen)),
        domain_(domain) {}

  double row_value(Index k) const {
    if (k < 1) throw InvalidParamsError("grid row index must be >= 1");
    double u = row_gen_(k);
    if (!domain_.contains_x(u))
      throw DomainError("grid row value u_" + std::to_string(k) +
                            " outside domain box",
                        IndexPair{k, 1});
    return u;
  }
  double col_value(Index l) const {
    if (l < 1) throw InvalidParamsError("grid column index must be >= 1");
    double v = col_gen_(l);
    if (!domain_.contains_y(v))
      throw DomainError("grid column value v_" + std::to_string(l) +
                            " outside domain box",
                        IndexPair{1, l});
    return v;
  }
  Point2 point(Index k, Index l) const {
    return Point2{row_value(k), col_value(l)};
  }
  Point2 point(IndexPair idx) const { return point(idx.k, idx.l); }

  const DomainBox& domain() const { return domain_; }
  const std::string& label() const { return label_; }

 private:
  std::string label_;
  Generator row_gen_;
  Generator col_gen_;
  DomainBox domain_;
};

}  // namespace doubleseq
