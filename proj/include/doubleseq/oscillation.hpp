// oscillation.hpp — slow-oscillation certification for double sequences.
//
// A double sequence is slowly oscillating at level epsilon when there are
// alpha, delta > 0 and a threshold N such that |x_{k,l} - x_{s,t}| < epsilon
// whenever k, l >= N, k <= s <= (1+alpha)k and l <= t <= (1+delta)l. This
// module checks that condition exhaustively on finite windows, and searches
// a fixed (alpha, delta, N) grid for witnesses.
//
// Index ranges use floor truncation: s runs over [k, floor((1+alpha)k)].
// Partner indices s, t may exceed the horizon (up to floor((1+alpha)H)), so a
// certificate is a genuine relative-window statement, not a clipped one.

#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "doubleseq/report.hpp"
#include "doubleseq/sequence.hpp"

namespace doubleseq {

/// End of the relative window anchored at index i with ratio r:
/// floor((1 + r) * i). The exact convention used by every scan and test.
inline Index relative_window_end(Index i, double ratio) {
  return static_cast<Index>(
      std::floor((1.0 + ratio) * static_cast<double>(i)));
}

struct OscillationParams {
  double epsilon = 1.0;
  double alpha = 0.5;
  double delta = 0.5;
  Index threshold = 1;  // N
  Index horizon = 1;    // H

  void validate() const;
};

/// Outcome of one exhaustive scan of the slow-oscillation region.
/// `pairs_checked` counts the (k,l,s,t) tuples the verdict covers: the whole
/// region when verified, or the lexicographic rank of the counterexample when
/// violated (every tuple before it satisfies the bound). Saturates on
/// overflow.
struct OscillationCertificate {
  OscillationParams params;
  Status status = Status::undetermined;
  std::optional<CounterexamplePair> counterexample;
  std::uint64_t pairs_checked = 0;

  Json to_json() const;
};

/// Exhaustive window check of the slow-oscillation condition. Scans all
/// k, l in [threshold, horizon], s in [k, floor((1+alpha)k)],
/// t in [l, floor((1+delta)l)]. Violations report the lexicographically
/// smallest offending (k,l,s,t). Returns status undetermined when the window
/// exceeds the cell budget.
OscillationCertificate check_slowly_oscillating(const ScalarDoubleSequence& seq,
                                                const OscillationParams& params);

/// Grid variant: the gap between (k,l) and (s,t) is the Euclidean distance
/// between the planar points (u_k, v_l) and (u_s, v_t).
OscillationCertificate check_slowly_oscillating(
    const FactorableGridSequence& grid, const OscillationParams& params);

struct WitnessTriple {
  double alpha = 0.0;
  double delta = 0.0;
  Index threshold = 1;
};

/// Result of the witness grid search. `witness` is empty when the grid was
/// exhausted; that is not a disproof, only "no witness found on grid".
struct WitnessSearchResult {
  double epsilon = 0.0;
  Index horizon = 1;
  std::optional<WitnessTriple> witness;
  std::optional<OscillationCertificate> certificate;  // the verified one
  std::uint64_t combos_tried = 0;

  bool found() const { return witness.has_value(); }
  Json to_json() const;
};

/// Searches alpha, delta in {2^-1, ..., 2^-20} (descending) and N in
/// {1, 2, 4, ..., horizon} (ascending) for the first verified certificate at
/// the given epsilon. Combos whose relative windows are degenerate on the
/// whole horizon (floor((1+alpha)H) == H or floor((1+delta)H) == H) certify
/// nothing and are skipped rather than reported as vacuous witnesses.
WitnessSearchResult find_witness(const ScalarDoubleSequence& seq,
                                 double epsilon, Index horizon);
WitnessSearchResult find_witness(const FactorableGridSequence& grid,
                                 double epsilon, Index horizon);

}  // namespace doubleseq
