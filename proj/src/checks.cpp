#include "doubleseq/checks.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "doubleseq/budget.hpp"

namespace doubleseq {

namespace {

ConvergenceReport undetermined_report(double epsilon, Index threshold,
                                      Index horizon) {
  ConvergenceReport r;
  r.status = Status::undetermined;
  r.epsilon = epsilon;
  r.threshold = threshold;
  r.horizon = horizon;
  return r;
}

bool over_budget(std::uint64_t cells) { return cells > max_cells_budget(); }

CounterexamplePair scalar_pair(IndexPair a, double va, IndexPair b, double vb) {
  CounterexamplePair ce;
  ce.a = a;
  ce.b = b;
  ce.value_a = {va};
  ce.value_b = {vb};
  ce.gap = std::fabs(va - vb);
  return ce;
}

}  // namespace

ConvergenceReport check_cauchy(const ScalarDoubleSequence& seq, double epsilon,
                               Index threshold, Index horizon) {
  if (epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (threshold < 1) throw InvalidParamsError("threshold must be >= 1");
  if (horizon <= threshold)
    throw InvalidWindowError("horizon must exceed threshold");

  ConvergenceReport r;
  r.epsilon = epsilon;
  r.threshold = threshold;
  r.horizon = horizon;

  const Index lo = threshold + 1;
  const std::uint64_t side = static_cast<std::uint64_t>(horizon - threshold);
  if (over_budget(mul_sat(side, side)))
    return undetermined_report(epsilon, threshold, horizon);

  // A window is Cauchy at level epsilon iff its max - min < epsilon, so one
  // pass over the window settles the status.
  double wmax = -std::numeric_limits<double>::infinity();
  double wmin = std::numeric_limits<double>::infinity();
  for (Index k = lo; k <= horizon; ++k) {
    for (Index l = lo; l <= horizon; ++l) {
      double v = seq(k, l);
      if (v > wmax) wmax = v;
      if (v < wmin) wmin = v;
    }
  }
  if (wmax - wmin < epsilon) {
    r.status = Status::verified;
    return r;
  }

  // Lexicographically smallest violating quadruple (k, l, s, t): first base
  // entry that is epsilon-far from the window max or min, then the first
  // partner for it.
  for (Index k = lo; k <= horizon; ++k) {
    for (Index l = lo; l <= horizon; ++l) {
      double v = seq(k, l);
      if (!(wmax - v >= epsilon || v - wmin >= epsilon)) continue;
      for (Index s = lo; s <= horizon; ++s) {
        for (Index t = lo; t <= horizon; ++t) {
          double w = seq(s, t);
          if (std::fabs(v - w) >= epsilon) {
            r.status = Status::violated;
            r.counterexample =
                scalar_pair(IndexPair{k, l}, v, IndexPair{s, t}, w);
            return r;
          }
        }
      }
    }
  }
  // Unreachable for pure evaluators: max - min >= epsilon guarantees a pair.
  r.status = Status::verified;
  return r;
}

ConvergenceReport check_pringsheim(const ScalarDoubleSequence& seq,
                                   double limit, double epsilon,
                                   Index threshold, Index horizon) {
  if (epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (threshold < 1) throw InvalidParamsError("threshold must be >= 1");
  if (horizon <= threshold)
    throw InvalidWindowError("horizon must exceed threshold");

  ConvergenceReport r;
  r.limit = limit;
  r.epsilon = epsilon;
  r.threshold = threshold;
  r.horizon = horizon;

  const std::uint64_t side = static_cast<std::uint64_t>(horizon - threshold);
  if (over_budget(mul_sat(side, side)))
    return undetermined_report(epsilon, threshold, horizon);

  for (Index k = threshold + 1; k <= horizon; ++k) {
    for (Index l = threshold + 1; l <= horizon; ++l) {
      double v = seq(k, l);
      if (!(std::fabs(v - limit) < epsilon)) {
        r.status = Status::violated;
        r.counterexample =
            scalar_pair(IndexPair{k, l}, v, IndexPair{k, l}, limit);
        return r;
      }
    }
  }
  r.status = Status::verified;
  return r;
}

ConvergenceReport check_definitely_divergent(const ScalarDoubleSequence& seq,
                                             const DivergenceParams& params) {
  if (params.bound <= 0.0) throw InvalidParamsError("bound must be > 0");
  if (params.n1 < 1 || params.n2 < 1)
    throw InvalidParamsError("n1, n2 must be >= 1");
  if (params.horizon <= params.n1 || params.horizon <= params.n2)
    throw InvalidWindowError("horizon must exceed n1 and n2");

  ConvergenceReport r;
  r.epsilon = params.bound;
  r.threshold = std::max(params.n1, params.n2);
  r.horizon = params.horizon;

  const std::uint64_t cells =
      mul_sat(static_cast<std::uint64_t>(params.horizon - params.n1),
              static_cast<std::uint64_t>(params.horizon - params.n2));
  if (over_budget(cells))
    return undetermined_report(params.bound, r.threshold, params.horizon);

  for (Index m = params.n1 + 1; m <= params.horizon; ++m) {
    for (Index n = params.n2 + 1; n <= params.horizon; ++n) {
      double v = seq(m, n);
      if (!(std::fabs(v) > params.bound)) {
        r.status = Status::violated;
        r.counterexample =
            scalar_pair(IndexPair{m, n}, v, IndexPair{m, n}, params.bound);
        return r;
      }
    }
  }
  r.status = Status::verified;
  return r;
}

ConvergenceReport check_bounded(const ScalarDoubleSequence& seq, double bound,
                                Index horizon) {
  if (bound <= 0.0) throw InvalidParamsError("bound must be > 0");
  if (horizon < 1) throw InvalidParamsError("horizon must be >= 1");

  ConvergenceReport r;
  r.epsilon = bound;
  r.threshold = 1;
  r.horizon = horizon;

  const std::uint64_t side = static_cast<std::uint64_t>(horizon);
  if (over_budget(mul_sat(side, side)))
    return undetermined_report(bound, 1, horizon);

  for (Index m = 1; m <= horizon; ++m) {
    for (Index n = 1; n <= horizon; ++n) {
      double v = seq(m, n);
      if (!(std::fabs(v) < bound)) {
        r.status = Status::violated;
        r.counterexample =
            scalar_pair(IndexPair{m, n}, v, IndexPair{m, n}, bound);
        return r;
      }
    }
  }
  r.status = Status::verified;
  return r;
}

ConvergenceReport estimate_pringsheim_limit(const ScalarDoubleSequence& seq,
                                            double tolerance,
                                            Index max_horizon) {
  if (tolerance <= 0.0) throw InvalidParamsError("tolerance must be > 0");

  ConvergenceReport r;
  r.epsilon = tolerance;
  r.horizon = max_horizon;
  r.threshold = 1;
  r.status = Status::undetermined;

  // Probes stop at H/2 so every tail box spans at least half the window per
  // axis; shorter tails are too weak to count as evidence either way.
  std::vector<Index> probes;
  for (Index p = 2; 2 * p <= max_horizon; p *= 2) probes.push_back(p);
  if (probes.empty()) return r;

  const std::uint64_t side = static_cast<std::uint64_t>(max_horizon - 2);
  if (over_budget(mul_sat(side, side))) return r;

  struct TailStats {
    double max = -std::numeric_limits<double>::infinity();
    double min = std::numeric_limits<double>::infinity();
    double min_abs = std::numeric_limits<double>::infinity();
  };
  std::vector<TailStats> stats(probes.size());

  // Tail boxes are nested, so accumulate from the innermost probe outward:
  // each step adds the L-shaped band between two consecutive probes.
  TailStats run;
  auto absorb = [&run](double v) {
    if (v > run.max) run.max = v;
    if (v < run.min) run.min = v;
    double a = std::fabs(v);
    if (a < run.min_abs) run.min_abs = a;
  };
  Index inner = max_horizon;  // cells with both indices > `inner` are done
  for (std::size_t i = probes.size(); i-- > 0;) {
    const Index p = probes[i];
    for (Index k = p + 1; k <= inner; ++k)
      for (Index l = p + 1; l <= max_horizon; ++l) absorb(seq(k, l));
    for (Index k = inner + 1; k <= max_horizon; ++k)
      for (Index l = p + 1; l <= inner; ++l) absorb(seq(k, l));
    stats[i] = run;
    inner = p;
  }

  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (stats[i].max - stats[i].min < tolerance) {
      r.status = Status::verified;
      r.limit = seq(max_horizon, max_horizon);
      r.threshold = probes[i];
      return r;
    }
  }
  const double divergence_bound = 1.0 / tolerance;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (stats[i].min_abs > divergence_bound) {
      r.status = Status::definitely_divergent;
      r.threshold = probes[i];
      return r;
    }
  }
  return r;
}

}  // namespace doubleseq
