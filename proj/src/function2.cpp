#include "doubleseq/function2.hpp"

#include <cmath>
#include <random>

namespace doubleseq {

namespace {

/// Deterministic point sampler over a domain box. Cycles plain uniform draws
/// with draws biased hard toward each edge, so blow-up regions near open
/// edges and discontinuities near closed ones both get probed. Doubles come
/// straight from the engine's bits, so the stream is identical on every
/// platform.
class PointSampler {
 public:
  PointSampler(DomainBox box, std::uint64_t seed) : box_(box), rng_(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  Point2 next() {
    const int mode = mode_++ % 5;
    switch (mode) {
      case 0:
        return Point2{coord_plain(box_.x_lo, box_.x_hi, box_.x_lo_open,
                                  box_.x_hi_open),
                      coord_plain(box_.y_lo, box_.y_hi, box_.y_lo_open,
                                  box_.y_hi_open)};
      case 1:  // both coordinates hugging the low edges
        return Point2{coord_low(box_.x_lo, box_.x_hi),
                      coord_low(box_.y_lo, box_.y_hi)};
      case 2:  // both hugging the high edges
        return Point2{coord_high(box_.x_lo, box_.x_hi),
                      coord_high(box_.y_lo, box_.y_hi)};
      case 3:
        return Point2{coord_low(box_.x_lo, box_.x_hi),
                      coord_plain(box_.y_lo, box_.y_hi, box_.y_lo_open,
                                  box_.y_hi_open)};
      default:
        return Point2{coord_high(box_.x_lo, box_.x_hi),
                      coord_plain(box_.y_lo, box_.y_hi, box_.y_lo_open,
                                  box_.y_hi_open)};
    }
  }

  /// Clamps into the box, nudging off excluded edges.
  Point2 clamp(Point2 p) const {
    p.x = clamp_coord(p.x, box_.x_lo, box_.x_hi, box_.x_lo_open,
                      box_.x_hi_open);
    p.y = clamp_coord(p.y, box_.y_lo, box_.y_hi, box_.y_lo_open,
                      box_.y_hi_open);
    return p;
  }

 private:
  static double clamp_coord(double v, double lo, double hi, bool lo_open,
                            bool hi_open) {
    const double nudge = (hi - lo) * 1e-12;
    if (v < lo || (lo_open && v == lo)) return lo + nudge;
    if (v > hi || (hi_open && v == hi)) return hi - nudge;
    return v;
  }
  double coord_plain(double lo, double hi, bool lo_open, bool hi_open) {
    return clamp_coord(lo + (hi - lo) * unit(), lo, hi, lo_open, hi_open);
  }
  double coord_low(double lo, double hi) {
    const double u = unit();
    const double b = u * u;
    return clamp_coord(lo + (hi - lo) * b * b * b * b, lo, hi, true, false);
  }
  double coord_high(double lo, double hi) {
    const double u = unit();
    const double b = u * u;
    return clamp_coord(hi - (hi - lo) * b * b * b * b, lo, hi, false, true);
  }

  DomainBox box_;
  std::mt19937_64 rng_;
  int mode_ = 0;
};

constexpr double kTau = 6.283185307179586476925286766559;

}  // namespace

ScalarDoubleSequence apply(const Function2& f,
                           const FactorableGridSequence& grid) {
  return ScalarDoubleSequence(
      f.label() + "(" + grid.label() + ")",
      [f, grid](Index k, Index l) {
        const Point2 p = grid.point(k, l);
        if (!f.domain().contains(p))
          throw DomainError("grid point (" + std::to_string(p.x) + ", " +
                                std::to_string(p.y) +
                                ") outside function domain",
                            IndexPair{k, l});
        return f(p);
      });
}

ScalarDoubleSequence interleave_with_limit(const ScalarDoubleSequence& seq,
                                           double limit) {
  return ScalarDoubleSequence(
      "interleave(" + seq.label() + ")",
      [seq, limit](Index k, Index l) {
        if (k % 2 == 1 && l % 2 == 1) return seq((k + 1) / 2, (l + 1) / 2);
        return limit;
      });
}

Json UniformContinuityVerdict::to_json() const {
  Json j;
  j["status"] = violation_found ? "violation-found" : "no-violation-found";
  j["epsilon"] = epsilon;
  j["delta_hat"] = delta_hat ? Json(*delta_hat) : Json(nullptr);
  if (violating_pair) {
    Json p;
    p["p"] = Json::array({violating_pair->p.x, violating_pair->p.y});
    p["q"] = Json::array({violating_pair->q.x, violating_pair->q.y});
    p["distance"] = violating_pair->distance;
    p["gap"] = violating_pair->gap;
    p["scale_delta"] = violating_pair->scale_delta;
    j["violating_pair"] = p;
  } else {
    j["violating_pair"] = nullptr;
  }
  return j;
}

std::optional<ViolatingPair> sample_violating_pair(const Function2& f,
                                                   double epsilon,
                                                   double scale_delta,
                                                   int budget,
                                                   std::uint64_t seed) {
  if (epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (scale_delta <= 0.0) throw InvalidParamsError("scale delta must be > 0");
  if (budget < 1) throw InvalidParamsError("budget must be >= 1");

  PointSampler sampler(f.domain(), seed);
  for (int i = 0; i < budget; ++i) {
    const Point2 p = sampler.next();
    const double radius = scale_delta * sampler.unit();
    const double angle = kTau * sampler.unit();
    Point2 q{p.x + radius * std::cos(angle), p.y + radius * std::sin(angle)};
    q = sampler.clamp(q);
    const double dist = std::hypot(p.x - q.x, p.y - q.y);
    if (!(dist < scale_delta) || dist == 0.0) continue;
    const double gap = std::fabs(f(p) - f(q));
    if (gap >= epsilon) return ViolatingPair{p, q, dist, gap, scale_delta};
  }
  return std::nullopt;
}

UniformContinuityVerdict test_uniform_continuity(const Function2& f,
                                                 double epsilon,
                                                 int pair_budget,
                                                 std::uint64_t seed) {
  if (epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (pair_budget < 1) throw InvalidParamsError("pair budget must be >= 1");

  UniformContinuityVerdict verdict;
  verdict.epsilon = epsilon;

  constexpr int kMaxScales = 24;
  std::optional<ViolatingPair> finest;
  for (int scale = 0; scale < kMaxScales; ++scale) {
    const double delta = std::ldexp(1.0, -scale);
    const std::uint64_t sub_seed =
        seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(scale + 1);
    auto pair = sample_violating_pair(f, epsilon, delta, pair_budget, sub_seed);
    if (!pair) {
      verdict.delta_hat = delta;
      return verdict;  // no pair here; finer scales only tighten the bound
    }
    finest = pair;
  }
  verdict.violation_found = true;
  verdict.violating_pair = finest;
  return verdict;
}

Json UniformConvergenceVerdict::to_json() const {
  Json j;
  j["status"] = verified_on_sample ? "verified-on-sample" : "violation";
  j["epsilon"] = epsilon;
  j["sup_gap"] = sup_gap;
  j["probed"] = probed;
  if (violating_gap) {
    Json v;
    if (violating_m) v["m"] = *violating_m;
    if (violating_n) v["n"] = *violating_n;
    v["point"] = Json::array({violating_point->x, violating_point->y});
    v["gap"] = *violating_gap;
    j["violation"] = v;
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

namespace {

std::vector<Point2> sample_points(const DomainBox& box, int budget,
                                  std::uint64_t seed) {
  PointSampler sampler(box, seed);
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(budget));
  for (int i = 0; i < budget; ++i) pts.push_back(sampler.next());
  return pts;
}

}  // namespace

UniformConvergenceVerdict check_uniform_convergence(
    const FunctionFamily& family, const Function2& f, double epsilon, Index n0,
    int sample_budget, std::uint64_t seed) {
  if (family.kind() != FunctionFamily::Kind::single)
    throw KindMismatchError("check_uniform_convergence needs a single-indexed "
                            "family");
  if (epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (n0 < 1) throw InvalidParamsError("threshold must be >= 1");

  UniformConvergenceVerdict verdict;
  verdict.epsilon = epsilon;

  const std::vector<Point2> pts = sample_points(f.domain(), sample_budget, seed);
  const Index probes[4] = {n0, n0 + 1, 2 * n0, 4 * n0};
  for (Index n : probes) {
    verdict.probed.push_back(n);
    const Function2 fn = family.at(n);
    for (const Point2& p : pts) {
      const double gap = std::fabs(fn(p) - f(p));
      if (gap > verdict.sup_gap) verdict.sup_gap = gap;
      if (gap >= epsilon && !verdict.violating_gap) {
        verdict.violating_n = n;
        verdict.violating_point = p;
        verdict.violating_gap = gap;
      }
    }
  }
  verdict.verified_on_sample = !verdict.violating_gap.has_value();
  return verdict;
}

UniformConvergenceVerdict check_uniform_convergence_double(
    const FunctionFamily& family, const Function2& f, double epsilon, Index n1,
    Index n2, int sample_budget, std::uint64_t seed) {
  if (family.kind() != FunctionFamily::Kind::double_indexed)
    throw KindMismatchError("check_uniform_convergence_double needs a "
                            "double-indexed family");
  if (epsilon <= 0.0) throw InvalidParamsError("epsilon must be > 0");
  if (n1 < 1 || n2 < 1) throw InvalidParamsError("thresholds must be >= 1");

  UniformConvergenceVerdict verdict;
  verdict.epsilon = epsilon;

  const std::vector<Point2> pts = sample_points(f.domain(), sample_budget, seed);
  const Index ms[2] = {n1, 2 * n1};
  const Index ns[2] = {n2, 2 * n2};
  for (Index m : ms) {
    for (Index n : ns) {
      verdict.probed.push_back(m);
      verdict.probed.push_back(n);
      const Function2 fmn = family.at(m, n);
      for (const Point2& p : pts) {
        const double gap = std::fabs(fmn(p) - f(p));
        if (gap > verdict.sup_gap) verdict.sup_gap = gap;
        if (gap >= epsilon && !verdict.violating_gap) {
          verdict.violating_m = m;
          verdict.violating_n = n;
          verdict.violating_point = p;
          verdict.violating_gap = gap;
        }
      }
    }
  }
  verdict.verified_on_sample = !verdict.violating_gap.has_value();
  return verdict;
}

Function2 builtin_function(const std::string& name) {
  const DomainBox big = DomainBox::closed(0.0, 10.0, 0.0, 10.0);
  const DomainBox unit_open = DomainBox::lower_open(0.0, 1.0, 0.0, 1.0);
  if (name == "sum") {
    return Function2("sum", [](double x, double y) { return x + y; }, big)
        .with_lipschitz(2.0);
  }
  if (name == "product") {
    return Function2("product", [](double x, double y) { return x * y; }, big)
        .with_factorization({[](double x) { return x; },
                             [](double y) { return y; }})
        .with_lipschitz(20.0);
  }
  if (name == "sin_sin") {
    return Function2("sin_sin",
                     [](double x, double y) { return std::sin(x) * std::sin(y); },
                     big)
        .with_factorization({[](double x) { return std::sin(x); },
                             [](double y) { return std::sin(y); }})
        .with_lipschitz(2.0);
  }
  if (name == "const_one") {
    return Function2("const_one", [](double, double) { return 1.0; }, big)
        .with_factorization({[](double) { return 1.0; },
                             [](double) { return 1.0; }})
        .with_lipschitz(1.0);
  }
  if (name == "ident_x") {
    return Function2("ident_x", [](double x, double) { return x; }, big)
        .with_factorization({[](double x) { return x; },
                             [](double) { return 1.0; }})
        .with_lipschitz(1.0);
  }
  if (name == "one_over_xy") {
    return Function2("one_over_xy",
                     [](double x, double y) { return (1.0 / x) * (1.0 / y); },
                     unit_open)
        .with_factorization({[](double x) { return 1.0 / x; },
                             [](double y) { return 1.0 / y; }});
  }
  if (name == "sin_recip_x") {
    return Function2("sin_recip_x",
                     [](double x, double) { return std::sin(1.0 / x); },
                     unit_open)
        .with_factorization({[](double x) { return std::sin(1.0 / x); },
                             [](double) { return 1.0; }});
  }
  throw UnknownNameError("unknown function name: " + name);
}

std::vector<std::string> function_gallery_names() {
  return {"sum",     "product",     "sin_sin",     "const_one",
          "ident_x", "one_over_xy", "sin_recip_x"};
}

}  // namespace doubleseq
