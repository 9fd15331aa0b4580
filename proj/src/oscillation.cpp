#include "doubleseq/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <vector>

#include "doubleseq/budget.hpp"

namespace doubleseq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_or_throw(const OscillationParams& p) {
  if (p.epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (p.alpha <= 0.0) throw InvalidParamsError("alpha must be > 0");
  if (p.delta <= 0.0) throw InvalidParamsError("delta must be > 0");
  if (p.threshold < 1) throw InvalidParamsError("threshold must be >= 1");
  if (p.horizon < p.threshold)
    throw InvalidParamsError("horizon must be >= threshold");
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

/// Number of (s,t) partners per k-side: sum over k in [N,H] of
/// (floor((1+alpha)k) - k + 1).
std::uint64_t side_weight(double ratio, Index threshold, Index horizon) {
  std::uint64_t w = 0;
  for (Index k = threshold; k <= horizon; ++k)
    w = add_sat(w, static_cast<std::uint64_t>(relative_window_end(k, ratio) -
                                              k + 1));
  return w;
}

std::uint64_t region_pair_count(const OscillationParams& p) {
  return mul_sat(side_weight(p.alpha, p.threshold, p.horizon),
                 side_weight(p.delta, p.threshold, p.horizon));
}

/// Lexicographic rank of the counterexample (k*,l*,s*,t*) in the (k,l,s,t)
/// enumeration of the region; tuples before it all satisfy the bound.
std::uint64_t counterexample_rank(const OscillationParams& p, Index k_star,
                                  Index l_star, Index s_star, Index t_star) {
  const std::uint64_t b_total = side_weight(p.delta, p.threshold, p.horizon);
  std::uint64_t rank = 0;
  for (Index k = p.threshold; k < k_star; ++k) {
    std::uint64_t row =
        static_cast<std::uint64_t>(relative_window_end(k, p.alpha) - k + 1);
    rank = add_sat(rank, mul_sat(row, b_total));
  }
  const std::uint64_t k_row = static_cast<std::uint64_t>(
      relative_window_end(k_star, p.alpha) - k_star + 1);
  std::uint64_t before_l = 0;
  for (Index l = p.threshold; l < l_star; ++l)
    before_l = add_sat(before_l, static_cast<std::uint64_t>(
                                     relative_window_end(l, p.delta) - l + 1));
  rank = add_sat(rank, mul_sat(k_row, before_l));
  const std::uint64_t t_len = static_cast<std::uint64_t>(
      relative_window_end(l_star, p.delta) - l_star + 1);
  rank = add_sat(rank, mul_sat(static_cast<std::uint64_t>(s_star - k_star),
                               t_len));
  rank = add_sat(rank, static_cast<std::uint64_t>(t_star - l_star + 1));
  return rank;
}

OscillationCertificate undetermined_certificate(const OscillationParams& p) {
  OscillationCertificate cert;
  cert.params = p;
  cert.status = Status::undetermined;
  return cert;
}

// ---------------------------------------------------------------------------
// Scalar engine.
//
// For each k it needs colmax(k,t) = max over s in [k, floor((1+alpha)k)] of
// x(s,t) (and the min), then slides a second window over t to get the
// rectangle extrema per (k,l). Column windows are maintained with monotone
// deques while they are short; once a window spans several blocks of B rows
// the column switches to block bookkeeping (head-block suffix tables, a
// monotone deque of completed block aggregates, and a running partial tail),
// which keeps memory proportional to B plus the block count instead of the
// raw window length. Head-block suffix tables are rebuilt by re-evaluating
// the block, so every cell is evaluated O(1) times overall.
// ---------------------------------------------------------------------------

struct RowEntry {
  Index s;
  double v;
};

struct BlockEntry {
  Index block;
  double v;
};

class ScalarRegionScanner {
 public:
  ScalarRegionScanner(const ScalarDoubleSequence& seq,
                      const OscillationParams& p)
      : seq_(seq),
        n_(p.threshold),
        h_(p.horizon),
        alpha_(p.alpha),
        delta_(p.delta),
        t_max_(relative_window_end(p.horizon, p.delta)),
        cols_(static_cast<std::size_t>(t_max_ - n_ + 1)) {
    const double win_hint =
        std::max(8.0, alpha_ * static_cast<double>(h_) + 1.0);
    block_ = static_cast<Index>(
        std::clamp(std::sqrt(win_hint), 8.0, 4096.0));
    phase2_from_k_ = h_ + 1;
    for (Index k = n_; k <= h_; ++k) {
      if (relative_window_end(k, alpha_) - k + 1 >= 2 * block_ + 2) {
        phase2_from_k_ = k;
        break;
      }
    }
    suff_max_.assign(cols_.size() * static_cast<std::size_t>(block_), -kInf);
    suff_min_.assign(cols_.size() * static_cast<std::size_t>(block_), kInf);
  }

  /// Runs the scan; returns true plus the violating base cell when some
  /// rectangle gap reaches eps.
  bool find_violation(double eps, Index& k_out, Index& l_out) {
    for (Index k = n_; k <= h_; ++k) {
      if (!phase2_ && k >= phase2_from_k_) enter_phase2();
      current_k_ = k;
      current_s_end_ = relative_window_end(k, alpha_);
      stage2_max_.clear();
      stage2_min_.clear();
      Index t_loaded = n_ - 1;
      for (Index l = n_; l <= h_; ++l) {
        const Index t_end = relative_window_end(l, delta_);
        while (t_loaded < t_end) {
          ++t_loaded;
          double cmax = 0.0, cmin = 0.0;
          column_extrema(t_loaded, cmax, cmin);
          while (!stage2_max_.empty() && stage2_max_.back().v <= cmax)
            stage2_max_.pop_back();
          stage2_max_.push_back({t_loaded, cmax});
          while (!stage2_min_.empty() && stage2_min_.back().v >= cmin)
            stage2_min_.pop_back();
          stage2_min_.push_back({t_loaded, cmin});
        }
        while (stage2_max_.front().s < l) stage2_max_.pop_front();
        while (stage2_min_.front().s < l) stage2_min_.pop_front();
        const double x = seq_(k, l);
        if (stage2_max_.front().v - x >= eps || x - stage2_min_.front().v >= eps) {
          k_out = k;
          l_out = l;
          return true;
        }
      }
    }
    return false;
  }

 private:
  struct Column {
    // short-window mode
    std::deque<RowEntry> row_max;
    std::deque<RowEntry> row_min;
    // block mode
    std::deque<BlockEntry> block_max;
    std::deque<BlockEntry> block_min;
    double pref_max = -kInf;
    double pref_min = kInf;
    Index pref_block = -1;
    Index suffix_block = -1;
    Index loaded_hi = 0;  // 0 means nothing loaded yet
  };

  Index block_of(Index s) const { return (s - n_) / block_; }
  Index block_start(Index b) const { return n_ + b * block_; }
  Index block_end(Index b) const { return n_ + (b + 1) * block_ - 1; }

  void enter_phase2() {
    phase2_ = true;
    for (Column& c : cols_) c = Column{};
  }

  void column_extrema(Index t, double& cmax, double& cmin) {
    Column& c = cols_[static_cast<std::size_t>(t - n_)];
    return phase2_ ? column_extrema_blocked(c, t, cmax, cmin)
                   : column_extrema_plain(c, t, cmax, cmin);
  }

  void column_extrema_plain(Column& c, Index t, double& cmax, double& cmin) {
    while (!c.row_max.empty() && c.row_max.front().s < current_k_)
      c.row_max.pop_front();
    while (!c.row_min.empty() && c.row_min.front().s < current_k_)
      c.row_min.pop_front();
    Index from = std::max(c.loaded_hi + 1, current_k_);
    for (Index s = from; s <= current_s_end_; ++s) {
      const double v = seq_(s, t);
      while (!c.row_max.empty() && c.row_max.back().v <= v) c.row_max.pop_back();
      c.row_max.push_back({s, v});
      while (!c.row_min.empty() && c.row_min.back().v >= v) c.row_min.pop_back();
      c.row_min.push_back({s, v});
    }
    c.loaded_hi = current_s_end_;
    cmax = c.row_max.front().v;
    cmin = c.row_min.front().v;
  }

  void column_extrema_blocked(Column& c, Index t, double& cmax, double& cmin) {
    const Index head = block_of(current_k_);
    if (c.suffix_block != head) rebuild_suffix(c, t, head);
    if (c.loaded_hi < block_end(head)) {
      // Stale column: everything at or below the head block is covered by
      // the suffix table, so restart block bookkeeping after it.
      c.block_max.clear();
      c.block_min.clear();
      c.pref_block = -1;
      c.loaded_hi = block_end(head);
    }
    for (Index s = c.loaded_hi + 1; s <= current_s_end_; ++s) {
      const Index b = block_of(s);
      const double v = seq_(s, t);
      if (c.pref_block != b) {
        c.pref_block = b;
        c.pref_max = v;
        c.pref_min = v;
      } else {
        if (v > c.pref_max) c.pref_max = v;
        if (v < c.pref_min) c.pref_min = v;
      }
      if (s == block_end(b)) {
        while (!c.block_max.empty() && c.block_max.back().v <= c.pref_max)
          c.block_max.pop_back();
        c.block_max.push_back({b, c.pref_max});
        while (!c.block_min.empty() && c.block_min.back().v >= c.pref_min)
          c.block_min.pop_back();
        c.block_min.push_back({b, c.pref_min});
        c.pref_block = -1;
      }
    }
    c.loaded_hi = current_s_end_;
    while (!c.block_max.empty() && c.block_max.front().block <= head)
      c.block_max.pop_front();
    while (!c.block_min.empty() && c.block_min.front().block <= head)
      c.block_min.pop_front();

    const std::size_t base =
        static_cast<std::size_t>(t - n_) * static_cast<std::size_t>(block_);
    const std::size_t off = static_cast<std::size_t>(current_k_ - block_start(head));
    cmax = suff_max_[base + off];
    cmin = suff_min_[base + off];
    if (!c.block_max.empty()) cmax = std::max(cmax, c.block_max.front().v);
    if (!c.block_min.empty()) cmin = std::min(cmin, c.block_min.front().v);
    if (c.pref_block == block_of(current_s_end_) &&
        current_s_end_ < block_end(c.pref_block)) {
      cmax = std::max(cmax, c.pref_max);
      cmin = std::min(cmin, c.pref_min);
    }
  }

  void rebuild_suffix(Column& c, Index t, Index head) {
    const std::size_t base =
        static_cast<std::size_t>(t - n_) * static_cast<std::size_t>(block_);
    double run_max = -kInf;
    double run_min = kInf;
    for (Index j = block_ - 1; j >= 0; --j) {
      const double v = seq_(block_start(head) + j, t);
      if (v > run_max) run_max = v;
      if (v < run_min) run_min = v;
      suff_max_[base + static_cast<std::size_t>(j)] = run_max;
      suff_min_[base + static_cast<std::size_t>(j)] = run_min;
    }
    c.suffix_block = head;
  }

  const ScalarDoubleSequence& seq_;
  Index n_;
  Index h_;
  double alpha_;
  double delta_;
  Index t_max_;
  Index block_ = 8;
  Index phase2_from_k_ = 0;
  bool phase2_ = false;
  Index current_k_ = 0;
  Index current_s_end_ = 0;
  std::vector<Column> cols_;
  std::vector<double> suff_max_;
  std::vector<double> suff_min_;
  std::deque<RowEntry> stage2_max_;  // entries keyed by t
  std::deque<RowEntry> stage2_min_;
};

CounterexamplePair canonical_scalar_pair(const ScalarDoubleSequence& seq,
                                         const OscillationParams& p, Index k,
                                         Index l) {
  const double x = seq(k, l);
  const Index s_end = relative_window_end(k, p.alpha);
  const Index t_end = relative_window_end(l, p.delta);
  for (Index s = k; s <= s_end; ++s) {
    for (Index t = l; t <= t_end; ++t) {
      const double w = seq(s, t);
      if (std::fabs(x - w) >= p.epsilon) {
        CounterexamplePair ce;
        ce.a = IndexPair{k, l};
        ce.b = IndexPair{s, t};
        ce.value_a = {x};
        ce.value_b = {w};
        ce.gap = std::fabs(x - w);
        return ce;
      }
    }
  }
  throw Error("internal: rectangle extrema promised a violation that the "
              "re-scan could not reproduce");
}

// ---------------------------------------------------------------------------
// Grid engine. Planar gaps factor over coordinates:
//   max over (s,t) of hypot(u_k - u_s, v_l - v_t)
//     = hypot(max_s |u_k - u_s|, max_t |v_l - v_t|),
// so two 1-D sliding windows settle each rectangle.
// ---------------------------------------------------------------------------

struct GridSides {
  std::vector<double> worst_du;  // per k in [N,H]
  std::vector<double> worst_dv;  // per l in [N,H]
};

std::vector<double> one_sided_worst(const std::function<double(Index)>& value,
                                    double ratio, Index n, Index h) {
  std::vector<double> worst(static_cast<std::size_t>(h - n + 1), 0.0);
  std::deque<RowEntry> wmax, wmin;
  Index loaded = n - 1;
  for (Index k = n; k <= h; ++k) {
    const Index end = relative_window_end(k, ratio);
    while (loaded < end) {
      ++loaded;
      const double v = value(loaded);
      while (!wmax.empty() && wmax.back().v <= v) wmax.pop_back();
      wmax.push_back({loaded, v});
      while (!wmin.empty() && wmin.back().v >= v) wmin.pop_back();
      wmin.push_back({loaded, v});
    }
    while (wmax.front().s < k) wmax.pop_front();
    while (wmin.front().s < k) wmin.pop_front();
    const double self = value(k);
    worst[static_cast<std::size_t>(k - n)] =
        std::max(wmax.front().v - self, self - wmin.front().v);
  }
  return worst;
}

GridSides grid_sides(const FactorableGridSequence& grid,
                     const OscillationParams& p) {
  GridSides sides;
  sides.worst_du = one_sided_worst(
      [&grid](Index k) { return grid.row_value(k); }, p.alpha, p.threshold,
      p.horizon);
  sides.worst_dv = one_sided_worst(
      [&grid](Index l) { return grid.col_value(l); }, p.delta, p.threshold,
      p.horizon);
  return sides;
}

CounterexamplePair canonical_grid_pair(const FactorableGridSequence& grid,
                                       const OscillationParams& p, Index k,
                                       Index l) {
  const Point2 a = grid.point(k, l);
  const Index s_end = relative_window_end(k, p.alpha);
  const Index t_end = relative_window_end(l, p.delta);
  for (Index s = k; s <= s_end; ++s) {
    for (Index t = l; t <= t_end; ++t) {
      const Point2 b = grid.point(s, t);
      const double gap = std::hypot(a.x - b.x, a.y - b.y);
      if (gap >= p.epsilon) {
        CounterexamplePair ce;
        ce.a = IndexPair{k, l};
        ce.b = IndexPair{s, t};
        ce.value_a = {a.x, a.y};
        ce.value_b = {b.x, b.y};
        ce.gap = gap;
        return ce;
      }
    }
  }
  throw Error("internal: grid side extrema promised a violation that the "
              "re-scan could not reproduce");
}

// ---------------------------------------------------------------------------
// Witness search helpers.
// ---------------------------------------------------------------------------

/// Cheap deterministic violation probe used by the witness search to reject
/// hopeless (alpha, delta, N) combos before paying for an exhaustive scan.
/// Only ever reports re-evaluated genuine gaps, so a hit is sound evidence.
template <typename GapAt>
bool quick_violation(const GapAt& gap_at, const OscillationParams& p) {
  const auto probe_bases = [&](Index k, Index l) {
    const Index s_end = relative_window_end(k, p.alpha);
    const Index t_end = relative_window_end(l, p.delta);
    const Index probes[6][2] = {
        {s_end, t_end},
        {s_end, l},
        {k, t_end},
        {std::min(k + 1, s_end), l},
        {k, std::min(l + 1, t_end)},
        {(k + s_end) / 2, (l + t_end) / 2},
    };
    for (const auto& st : probes) {
      if (gap_at(k, l, st[0], st[1]) >= p.epsilon) return true;
    }
    return false;
  };
  for (Index k = p.threshold;; k = std::min(k * 2, p.horizon)) {
    if (probe_bases(k, k)) return true;
    if (probe_bases(p.threshold, k)) return true;
    if (probe_bases(k, p.threshold)) return true;
    if (k == p.horizon) break;
  }
  return false;
}

std::vector<Index> threshold_ladder(Index horizon) {
  std::vector<Index> ns;
  for (Index n = 1; n < horizon; n *= 2) ns.push_back(n);
  ns.push_back(horizon);
  return ns;
}

template <typename Sequence, typename GapAt>
WitnessSearchResult find_witness_impl(const Sequence& seq, const GapAt& gap_at,
                                      double epsilon, Index horizon) {
  if (epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (horizon < 1) throw InvalidParamsError("horizon must be >= 1");

  WitnessSearchResult result;
  result.epsilon = epsilon;
  result.horizon = horizon;

  const std::vector<Index> ns = threshold_ladder(horizon);
  for (int ae = 1; ae <= 20; ++ae) {
    const double alpha = std::ldexp(1.0, -ae);
    if (relative_window_end(horizon, alpha) == horizon) break;  // degenerate
    for (int de = 1; de <= 20; ++de) {
      const double delta = std::ldexp(1.0, -de);
      if (relative_window_end(horizon, delta) == horizon) break;
      for (Index n : ns) {
        OscillationParams p{epsilon, alpha, delta, n, horizon};
        ++result.combos_tried;
        if (quick_violation(gap_at, p)) continue;
        OscillationCertificate cert = check_slowly_oscillating(seq, p);
        if (cert.status == Status::verified) {
          result.witness = WitnessTriple{alpha, delta, n};
          result.certificate = std::move(cert);
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace

void OscillationParams::validate() const { validate_or_throw(*this); }

Json OscillationCertificate::to_json() const {
  Json j;
  j["epsilon"] = params.epsilon;
  j["alpha"] = params.alpha;
  j["delta"] = params.delta;
  j["threshold"] = params.threshold;
  j["horizon"] = params.horizon;
  j["status"] = to_string(status);
  j["counterexample"] =
      counterexample ? counterexample_to_json(*counterexample) : Json(nullptr);
  j["pairs_checked"] = pairs_checked;
  return j;
}

Json WitnessSearchResult::to_json() const {
  Json j;
  j["epsilon"] = epsilon;
  j["horizon"] = horizon;
  j["status"] = found() ? "witness-found" : "no-witness-found-on-grid";
  if (witness) {
    Json w;
    w["alpha"] = witness->alpha;
    w["delta"] = witness->delta;
    w["threshold"] = witness->threshold;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["certificate"] = certificate ? certificate->to_json() : Json(nullptr);
  j["combos_tried"] = combos_tried;
  return j;
}

OscillationCertificate check_slowly_oscillating(
    const ScalarDoubleSequence& seq, const OscillationParams& params) {
  validate_or_throw(params);
  const std::uint64_t side =
      static_cast<std::uint64_t>(params.horizon - params.threshold + 1);
  if (mul_sat(side, side) > max_cells_budget())
    return undetermined_certificate(params);

  OscillationCertificate cert;
  cert.params = params;

  ScalarRegionScanner scanner(seq, params);
  Index k = 0, l = 0;
  if (!scanner.find_violation(params.epsilon, k, l)) {
    cert.status = Status::verified;
    cert.pairs_checked = region_pair_count(params);
    return cert;
  }
  cert.status = Status::violated;
  cert.counterexample = canonical_scalar_pair(seq, params, k, l);
  cert.pairs_checked = counterexample_rank(params, k, l,
                                           cert.counterexample->b.k,
                                           cert.counterexample->b.l);
  return cert;
}

OscillationCertificate check_slowly_oscillating(
    const FactorableGridSequence& grid, const OscillationParams& params) {
  validate_or_throw(params);
  const std::uint64_t side =
      static_cast<std::uint64_t>(params.horizon - params.threshold + 1);
  if (mul_sat(side, side) > max_cells_budget())
    return undetermined_certificate(params);

  OscillationCertificate cert;
  cert.params = params;

  const GridSides sides = grid_sides(grid, params);
  double dv_peak = 0.0;
  for (double w : sides.worst_dv) dv_peak = std::max(dv_peak, w);

  for (Index k = params.threshold; k <= params.horizon; ++k) {
    const double du = sides.worst_du[static_cast<std::size_t>(k - params.threshold)];
    if (std::hypot(du, dv_peak) < params.epsilon) continue;
    for (Index l = params.threshold; l <= params.horizon; ++l) {
      const double dv =
          sides.worst_dv[static_cast<std::size_t>(l - params.threshold)];
      if (std::hypot(du, dv) >= params.epsilon) {
        cert.status = Status::violated;
        cert.counterexample = canonical_grid_pair(grid, params, k, l);
        cert.pairs_checked = counterexample_rank(params, k, l,
                                                 cert.counterexample->b.k,
                                                 cert.counterexample->b.l);
        return cert;
      }
    }
  }
  cert.status = Status::verified;
  cert.pairs_checked = region_pair_count(params);
  return cert;
}

WitnessSearchResult find_witness(const ScalarDoubleSequence& seq,
                                 double epsilon, Index horizon) {
  const auto gap_at = [&seq](Index k, Index l, Index s, Index t) {
    return std::fabs(seq(k, l) - seq(s, t));
  };
  return find_witness_impl(seq, gap_at, epsilon, horizon);
}

WitnessSearchResult find_witness(const FactorableGridSequence& grid,
                                 double epsilon, Index horizon) {
  const auto gap_at = [&grid](Index k, Index l, Index s, Index t) {
    const Point2 a = grid.point(k, l);
    const Point2 b = grid.point(s, t);
    return std::hypot(a.x - b.x, a.y - b.y);
  };
  return find_witness_impl(grid, gap_at, epsilon, horizon);
}

}  // namespace doubleseq
