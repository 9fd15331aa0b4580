// report.hpp — window-relative check outcomes and their JSON/CSV forms.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "doubleseq/types.hpp"

namespace doubleseq {

using Json = nlohmann::ordered_json;

enum class Status {
  verified,
  violated,
  undetermined,
  definitely_divergent,
};

std::string to_string(Status s);

/// A re-checkable witness of a violated inequality: two index pairs and the
/// values observed there. For single-index violations (Pringsheim,
/// boundedness, definite divergence) the second pair repeats the first and
/// the second value is the reference the entry was compared against. For
/// planar grids the values are points, stored as two coordinates each.
struct CounterexamplePair {
  IndexPair a;
  IndexPair b;
  std::vector<double> value_a;  // 1 entry (scalar) or 2 (planar point)
  std::vector<double> value_b;
  double gap = 0.0;
};

Json counterexample_to_json(const CounterexamplePair& ce);

/// Outcome of a finite-window convergence-style scan. Every report is
/// window-relative: status speaks only about indices up to `horizon`, never
/// about the infinite tail.
struct ConvergenceReport {
  Status status = Status::undetermined;
  std::optional<double> limit;
  double epsilon = 0.0;
  Index threshold = 1;
  Index horizon = 1;
  std::optional<CounterexamplePair> counterexample;

  Json to_json() const;
  std::string to_csv() const;
};

/// Parameters of the definite-divergence check: |x_{m,n}| > bound whenever
/// m > n1 and n > n2, scanned up to the horizon.
struct DivergenceParams {
  double bound = 1.0;  // M
  Index n1 = 1;
  Index n2 = 1;
  Index horizon = 2;
};

}  // namespace doubleseq
