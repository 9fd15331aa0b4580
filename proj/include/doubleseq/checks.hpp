// checks.hpp — finite-window Cauchy / Pringsheim / boundedness / divergence
// checkers for double sequences.
//
// All checks truncate the infinite quantifiers at a caller-supplied horizon
// and report only window evidence. Violations carry the lexicographically
// smallest offending tuple, so two scans over the same parameters always
// produce identical reports.

#pragma once

#include "doubleseq/report.hpp"
#include "doubleseq/sequence.hpp"

namespace doubleseq {

/// Window Cauchy test: |x_{k,l} - x_{s,t}| < epsilon for all
/// threshold < k,l,s,t <= horizon. Strict inequality, no tolerance slack.
/// Throws InvalidWindowError when horizon <= threshold.
ConvergenceReport check_cauchy(const ScalarDoubleSequence& seq, double epsilon,
                               Index threshold, Index horizon);

/// Window Pringsheim test against a candidate limit L:
/// |x_{k,l} - L| < epsilon for all threshold < k,l <= horizon.
ConvergenceReport check_pringsheim(const ScalarDoubleSequence& seq, double limit,
                                   double epsilon, Index threshold,
                                   Index horizon);

/// Window definite-divergence test: |x_{m,n}| > params.bound for all
/// params.n1 < m <= horizon, params.n2 < n <= horizon.
ConvergenceReport check_definitely_divergent(const ScalarDoubleSequence& seq,
                                             const DivergenceParams& params);

/// Window boundedness test: |x_{m,n}| < bound for all 1 <= m,n <= horizon.
ConvergenceReport check_bounded(const ScalarDoubleSequence& seq, double bound,
                                Index horizon);

/// Heuristic numerical front-end for the Pringsheim limit. Probes the tail
/// boxes {(k,l): n < k,l <= max_horizon} at geometrically spaced n (2, 4, 8,
/// ..., capped at max_horizon/2). Verified with limit = x_{H,H} when some
/// tail-box oscillation (max - min) drops below the tolerance;
/// definitely-divergent when some tail box has min |x| > 1/tolerance;
/// undetermined otherwise. The status is window evidence only — it never
/// claims a true infinite limit.
ConvergenceReport estimate_pringsheim_limit(const ScalarDoubleSequence& seq,
                                            double tolerance,
                                            Index max_horizon);

}  // namespace doubleseq
