#include "doubleseq/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "doubleseq/checks.hpp"
#include "doubleseq/gallery.hpp"

namespace doubleseq {

Json CampaignReport::to_json() const {
  std::vector<const CampaignCase*> ordered;
  ordered.reserve(cases.size());
  for (const CampaignCase& c : cases) ordered.push_back(&c);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const CampaignCase* a, const CampaignCase* b) {
                     if (a->function_label != b->function_label)
                       return a->function_label < b->function_label;
                     return a->sequence_label < b->sequence_label;
                   });

  Json j;
  j["theorem_id"] = theorem_id;
  j["status"] = status;
  if (!note.empty()) j["note"] = note;
  Json case_list = Json::array();
  std::size_t passed = 0, failed = 0, expected_fail = 0;
  for (const CampaignCase* c : ordered) {
    Json cj;
    cj["function"] = c->function_label;
    cj["sequence"] = c->sequence_label;
    cj["verdict"] = c->verdict;
    cj["parameters"] = c->parameters;
    cj["artifacts"] = c->artifacts;
    case_list.push_back(cj);
    if (c->verdict == "expected-fail") ++expected_fail;
    if (c->counts_as_pass)
      ++passed;
    else
      ++failed;
  }
  j["cases"] = case_list;
  Json summary;
  summary["total"] = ordered.size();
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["expected_fail"] = expected_fail;
  j["summary"] = summary;
  j["config_echo"] = config_echo;
  return j;
}

int CampaignReport::exit_code() const {
  if (status == "pass") return 0;
  if (status == "fail") return 1;
  return 2;
}

bool box_within(const DomainBox& inner, const DomainBox& outer) {
  auto lo_ok = [](double in_lo, bool in_open, double out_lo, bool out_open) {
    if (in_lo > out_lo) return true;
    if (in_lo < out_lo) return false;
    return !out_open || in_open;
  };
  auto hi_ok = [](double in_hi, bool in_open, double out_hi, bool out_open) {
    if (in_hi < out_hi) return true;
    if (in_hi > out_hi) return false;
    return !out_open || in_open;
  };
  return lo_ok(inner.x_lo, inner.x_lo_open, outer.x_lo, outer.x_lo_open) &&
         hi_ok(inner.x_hi, inner.x_hi_open, outer.x_hi, outer.x_hi_open) &&
         lo_ok(inner.y_lo, inner.y_lo_open, outer.y_lo, outer.y_lo_open) &&
         hi_ok(inner.y_hi, inner.y_hi_open, outer.y_hi, outer.y_hi_open);
}

namespace {

Json witness_artifact(const WitnessSearchResult& w) { return w.to_json(); }

// ---------------------------------------------------------------------------
// Theorem 3.1
// ---------------------------------------------------------------------------

CampaignCase preservation_case(const Function2& f,
                               const FactorableGridSequence& grid,
                               const PreservationCampaignParams& params) {
  CampaignCase c;
  c.function_label = f.label();
  c.sequence_label = grid.label();
  c.parameters["epsilon_in"] = params.epsilon_in;
  c.parameters["horizon"] = params.horizon;

  if (f.lipschitz()) {
    const double k = *f.lipschitz();
    const double eps_out = k * params.epsilon_in;
    c.parameters["lipschitz"] = k;
    c.parameters["epsilon_out"] = eps_out;

    WitnessSearchResult win = find_witness(grid, params.epsilon_in,
                                           params.horizon);
    c.artifacts["grid_witness"] = witness_artifact(win);
    if (!win.found()) {
      c.verdict = "fail";
      return c;
    }
    WitnessSearchResult wout =
        find_witness(apply(f, grid), eps_out, params.horizon);
    c.artifacts["image_witness"] = witness_artifact(wout);
    c.verdict = wout.found() ? "pass" : "fail";
    c.counts_as_pass = wout.found();
    return c;
  }

  // No analytic constant: classify by the uniform-continuity falsifier.
  UniformContinuityVerdict ucv = test_uniform_continuity(
      f, params.epsilon_in, params.uc_pair_budget, params.seed);
  c.artifacts["uniform_continuity"] = ucv.to_json();
  WitnessSearchResult wout =
      find_witness(apply(f, grid), params.epsilon_in, params.horizon);
  c.artifacts["image_witness"] = witness_artifact(wout);
  if (ucv.violation_found) {
    // The hypothesis fails for this function, so a missing image witness is
    // the expected outcome, not a theorem violation.
    c.verdict = wout.found() ? "pass" : "expected-fail";
    c.counts_as_pass = true;
  } else {
    c.verdict = wout.found() ? "pass" : "fail";
    c.counts_as_pass = wout.found();
  }
  return c;
}

// ---------------------------------------------------------------------------
// Theorem 3.2
// ---------------------------------------------------------------------------

struct GridLimitScan {
  bool verified = true;
  Index k = 0, l = 0;
  double distance = 0.0;
};

GridLimitScan grid_pringsheim_scan(const FactorableGridSequence& grid,
                                   double lu, double lv, double eps, Index n,
                                   Index h) {
  GridLimitScan r;
  for (Index k = n + 1; k <= h; ++k) {
    for (Index l = n + 1; l <= h; ++l) {
      const Point2 p = grid.point(k, l);
      const double d = std::hypot(p.x - lu, p.y - lv);
      if (!(d < eps)) {
        r.verified = false;
        r.k = k;
        r.l = l;
        r.distance = d;
        return r;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Theorem 3.3
// ---------------------------------------------------------------------------

struct HarvestedPair {
  ViolatingPair pair;
  int scale = 0;
};

struct Harvest {
  std::vector<HarvestedPair> pairs;
  int productive_scales = 0;
};

Harvest harvest_violation_pairs(const Function2& f,
                                const FalsificationParams& params) {
  Harvest h;
  std::mt19937_64 seeder(params.seed);
  for (int scale = 0; scale < params.max_scales; ++scale) {
    const double delta = std::ldexp(1.0, -scale);
    int found_here = 0;
    for (int rep = 0; rep < params.pairs_per_scale; ++rep) {
      const std::uint64_t rep_seed = seeder();
      auto pair = sample_violating_pair(f, params.epsilon, delta,
                                        params.pair_budget, rep_seed);
      if (pair) {
        h.pairs.push_back(HarvestedPair{*pair, scale});
        ++found_here;
      }
    }
    if (found_here == 0) return h;
    h.productive_scales = scale + 1;
  }
  return h;
}

struct Cluster {
  std::vector<HarvestedPair> members;
  double cell_w = 0.0;
  double cell_h = 0.0;
  int depth = 0;
};

/// Iterated bisection of the domain box: repeatedly halve the longer axis,
/// keeping the half that holds the most pair centers, until the cell is small
/// enough or further halving would drop the cluster below min_cluster.
Cluster extract_cluster(const DomainBox& box,
                        const std::vector<HarvestedPair>& candidates,
                        double target_diam, int max_depth, int min_cluster) {
  double x_lo = box.x_lo, x_hi = box.x_hi, y_lo = box.y_lo, y_hi = box.y_hi;
  std::vector<HarvestedPair> active = candidates;
  int depth = 0;
  while (depth < max_depth &&
         std::max(x_hi - x_lo, y_hi - y_lo) > target_diam) {
    const bool split_x = (x_hi - x_lo) >= (y_hi - y_lo);
    const double mid = split_x ? (x_lo + x_hi) / 2.0 : (y_lo + y_hi) / 2.0;
    std::vector<HarvestedPair> low, high;
    for (const HarvestedPair& hp : active) {
      const double c = split_x ? hp.pair.p.x : hp.pair.p.y;
      (c <= mid ? low : high).push_back(hp);
    }
    std::vector<HarvestedPair>& keep = (low.size() >= high.size()) ? low : high;
    if (static_cast<int>(keep.size()) < min_cluster) break;
    if (&keep == &low) {
      (split_x ? x_hi : y_hi) = mid;
    } else {
      (split_x ? x_lo : y_lo) = mid;
    }
    active = keep;
    ++depth;
  }
  return Cluster{std::move(active), x_hi - x_lo, y_hi - y_lo, depth};
}

/// A pair is "strong" when the value gap survives moving one coordinate at a
/// time: either |f(p.x, b) - f(q.x, b)| >= eps for both base ordinates b, or
/// the symmetric condition in y. The assembled grid's tail repeats a strong
/// pair so that every non-degenerate relative window — including ones that
/// can only move s or only move t — reaches a violating gap.
bool strong_pair(const Function2& f, const ViolatingPair& vp, double eps) {
  const double gx1 = std::fabs(f(vp.p.x, vp.p.y) - f(vp.q.x, vp.p.y));
  const double gx2 = std::fabs(f(vp.p.x, vp.q.y) - f(vp.q.x, vp.q.y));
  if (std::min(gx1, gx2) >= eps) return true;
  const double gy1 = std::fabs(f(vp.p.x, vp.p.y) - f(vp.p.x, vp.q.y));
  const double gy2 = std::fabs(f(vp.q.x, vp.p.y) - f(vp.q.x, vp.q.y));
  return std::min(gy1, gy2) >= eps;
}

FactorableGridSequence assemble_alternating_grid(
    const std::vector<HarvestedPair>& prefix_pairs, const ViolatingPair& tail,
    const DomainBox& domain, const std::string& label) {
  std::vector<double> us, vs;
  us.reserve(prefix_pairs.size() * 2 + 2);
  vs.reserve(prefix_pairs.size() * 2 + 2);
  for (const HarvestedPair& hp : prefix_pairs) {
    us.push_back(hp.pair.p.x);
    us.push_back(hp.pair.q.x);
    vs.push_back(hp.pair.p.y);
    vs.push_back(hp.pair.q.y);
  }
  const auto prefix = static_cast<Index>(us.size());
  const double tail_u[2] = {tail.p.x, tail.q.x};
  const double tail_v[2] = {tail.p.y, tail.q.y};
  return FactorableGridSequence(
      label,
      [us, prefix, u0 = tail_u[0], u1 = tail_u[1]](Index k) {
        const Index idx = k - 1;
        if (idx < prefix) return us[static_cast<std::size_t>(idx)];
        return (idx - prefix) % 2 == 0 ? u0 : u1;
      },
      [vs, prefix, v0 = tail_v[0], v1 = tail_v[1]](Index l) {
        const Index idx = l - 1;
        if (idx < prefix) return vs[static_cast<std::size_t>(idx)];
        return (idx - prefix) % 2 == 0 ? v0 : v1;
      },
      domain);
}

// ---------------------------------------------------------------------------
// Theorems 3.4 / 3.5 (shared skeleton)
// ---------------------------------------------------------------------------

CampaignReport uniform_limit_campaign(
    const std::string& theorem_id, const FunctionFamily& family,
    const Function2& f, const std::vector<FactorableGridSequence>& grids,
    const UniformLimitCampaignParams& params, bool double_indexed) {
  CampaignReport report;
  report.theorem_id = theorem_id;
  report.config_echo["family"] = family.label();
  report.config_echo["limit_function"] = f.label();
  report.config_echo["epsilon"] = params.epsilon;
  report.config_echo["uc_threshold"] = params.uc_threshold;
  if (double_indexed) report.config_echo["uc_threshold2"] = params.uc_threshold2;
  report.config_echo["horizon"] = params.horizon;
  report.config_echo["sample_budget"] = params.sample_budget;
  report.config_echo["seed"] = params.seed;

  const double eps3 = params.epsilon / 3.0;
  UniformConvergenceVerdict ucv =
      double_indexed
          ? check_uniform_convergence_double(family, f, eps3,
                                             params.uc_threshold,
                                             params.uc_threshold2,
                                             params.sample_budget, params.seed)
          : check_uniform_convergence(family, f, eps3, params.uc_threshold,
                                      params.sample_budget, params.seed);
  report.config_echo["uniform_convergence"] = ucv.to_json();
  if (!ucv.verified_on_sample) {
    report.status = "refused";
    report.note = "uniform-convergence precondition failed at epsilon/3";
    return report;
  }

  const Function2 member = double_indexed
                               ? family.at(params.uc_threshold,
                                           params.uc_threshold2)
                               : family.at(params.uc_threshold);
  bool all_pass = true;
  for (const FactorableGridSequence& grid : grids) {
    if (!box_within(grid.domain(), f.domain())) continue;
    CampaignCase c;
    c.function_label = f.label();
    c.sequence_label = grid.label();
    c.parameters["epsilon"] = params.epsilon;
    c.parameters["member_epsilon"] = eps3;
    c.parameters["horizon"] = params.horizon;

    WitnessSearchResult wmember =
        find_witness(apply(member, grid), eps3, params.horizon);
    c.artifacts["member_image_witness"] = witness_artifact(wmember);
    WitnessSearchResult wlimit =
        find_witness(apply(f, grid), params.epsilon, params.horizon);
    c.artifacts["limit_image_witness"] = witness_artifact(wlimit);

    Json decomposition;
    decomposition["family_sup_gap"] = ucv.sup_gap;
    decomposition["member_modulus_bound"] = eps3;
    decomposition["total_bound"] = 2.0 * ucv.sup_gap + eps3;
    decomposition["epsilon"] = params.epsilon;
    c.artifacts["epsilon_thirds"] = decomposition;

    c.counts_as_pass = wmember.found() && wlimit.found();
    c.verdict = c.counts_as_pass ? "pass" : "fail";
    all_pass = all_pass && c.counts_as_pass;
    report.cases.push_back(std::move(c));
  }
  report.status = all_pass ? "pass" : "fail";
  return report;
}

}  // namespace

CampaignReport run_theorem31_campaign(
    const std::vector<Function2>& functions,
    const std::vector<FactorableGridSequence>& grids,
    const PreservationCampaignParams& params) {
  CampaignReport report;
  report.theorem_id = "T3.1";
  report.config_echo["epsilon_in"] = params.epsilon_in;
  report.config_echo["horizon"] = params.horizon;
  report.config_echo["uc_pair_budget"] = params.uc_pair_budget;
  report.config_echo["seed"] = params.seed;

  bool all_pass = true;
  for (const Function2& f : functions) {
    for (const FactorableGridSequence& grid : grids) {
      if (!box_within(grid.domain(), f.domain())) continue;
      CampaignCase c = preservation_case(f, grid, params);
      all_pass = all_pass && c.counts_as_pass;
      report.cases.push_back(std::move(c));
    }
  }
  report.status = all_pass ? "pass" : "fail";
  return report;
}

CampaignReport run_theorem32_campaign(const std::vector<Function2>& functions,
                                      const std::vector<ConvergentGrid>& grids,
                                      const ConvergenceCampaignParams& params) {
  CampaignReport report;
  report.theorem_id = "T3.2";
  report.config_echo["epsilon"] = params.epsilon;
  report.config_echo["threshold"] = params.threshold;
  report.config_echo["horizon"] = params.horizon;

  bool all_pass = true;
  for (const Function2& f : functions) {
    for (const ConvergentGrid& cg : grids) {
      if (!box_within(cg.grid.domain(), f.domain())) continue;
      if (!f.domain().contains(cg.limit_u, cg.limit_v))
        throw DomainError("grid limit outside function domain", IndexPair{1, 1});

      GridLimitScan pre = grid_pringsheim_scan(cg.grid, cg.limit_u, cg.limit_v,
                                               params.epsilon, params.threshold,
                                               params.horizon);
      if (!pre.verified) {
        report.status = "refused";
        report.note = "grid " + cg.grid.label() +
                      " is not window-P-convergent to its declared limit";
        return report;
      }

      CampaignCase c;
      c.function_label = f.label();
      c.sequence_label = cg.grid.label();
      c.parameters["epsilon"] = params.epsilon;
      c.parameters["threshold"] = params.threshold;
      c.parameters["horizon"] = params.horizon;
      c.parameters["limit"] = Json::array({cg.limit_u, cg.limit_v});

      const ScalarDoubleSequence image = apply(f, cg.grid);
      const double f_limit = f(cg.limit_u, cg.limit_v);
      c.parameters["image_limit"] = f_limit;

      WitnessSearchResult wit = find_witness(
          interleave_with_limit(image, f_limit), params.epsilon, params.horizon);
      c.artifacts["interleaved_witness"] = witness_artifact(wit);

      ConvergenceReport rep = check_pringsheim(image, f_limit, params.epsilon,
                                               params.threshold, params.horizon);
      c.artifacts["image_pringsheim"] = rep.to_json();

      c.counts_as_pass = wit.found() && rep.status == Status::verified;
      c.verdict = c.counts_as_pass ? "pass" : "fail";
      all_pass = all_pass && c.counts_as_pass;
      report.cases.push_back(std::move(c));
    }
  }
  report.status = all_pass ? "pass" : "fail";
  return report;
}

CampaignReport run_theorem33_falsification(const Function2& f,
                                           const FalsificationParams& params) {
  CampaignReport report;
  report.theorem_id = "T3.3";
  report.config_echo["function"] = f.label();
  report.config_echo["epsilon"] = params.epsilon;
  report.config_echo["horizon"] = params.horizon;
  report.config_echo["grid_epsilon"] = params.grid_epsilon;
  report.config_echo["pair_budget"] = params.pair_budget;
  report.config_echo["max_scales"] = params.max_scales;
  report.config_echo["min_scales"] = params.min_scales;
  report.config_echo["seed"] = params.seed;

  const Harvest harvest = harvest_violation_pairs(f, params);
  {
    CampaignCase c;
    c.function_label = f.label();
    c.sequence_label = "violation-pairs";
    c.parameters["productive_scales"] = harvest.productive_scales;
    c.parameters["pairs"] = harvest.pairs.size();
    c.counts_as_pass = harvest.productive_scales >= params.min_scales;
    c.verdict = c.counts_as_pass ? "pass" : "inconclusive";
    report.cases.push_back(std::move(c));
  }
  if (harvest.productive_scales < params.min_scales) {
    report.status = "inconclusive";
    report.note = "no violation pairs at scale 1/" +
                  std::to_string(1LL << harvest.productive_scales) +
                  "; cannot falsify uniform continuity";
    return report;
  }

  // Only pairs whose offset cannot inflate the assembled grid's spread.
  std::vector<HarvestedPair> fine;
  for (const HarvestedPair& hp : harvest.pairs)
    if (hp.pair.scale_delta <= params.grid_epsilon / 8.0) fine.push_back(hp);

  const Cluster cluster =
      extract_cluster(f.domain(), fine, params.grid_epsilon / 8.0,
                      params.bisection_depth, params.min_cluster);
  {
    CampaignCase c;
    c.function_label = f.label();
    c.sequence_label = "bisection-cluster";
    c.parameters["candidates"] = fine.size();
    c.parameters["kept"] = cluster.members.size();
    c.parameters["depth"] = cluster.depth;
    c.parameters["cell"] = Json::array({cluster.cell_w, cluster.cell_h});
    c.counts_as_pass =
        static_cast<int>(cluster.members.size()) >= params.min_cluster;
    c.verdict = c.counts_as_pass ? "pass" : "inconclusive";
    report.cases.push_back(std::move(c));
  }
  if (static_cast<int>(cluster.members.size()) < params.min_cluster) {
    report.status = "inconclusive";
    report.note = "bisection could not isolate a usable cluster";
    return report;
  }

  // Finest strong pair from the cluster keeps the tail inside the cell; if
  // the cluster has none, fall back to a bare two-point grid built from any
  // strong fine pair.
  std::vector<HarvestedPair> prefix = cluster.members;
  std::stable_sort(prefix.begin(), prefix.end(),
                   [](const HarvestedPair& a, const HarvestedPair& b) {
                     return a.scale < b.scale;
                   });
  const ViolatingPair* tail = nullptr;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    if (strong_pair(f, it->pair, params.epsilon)) {
      tail = &it->pair;
      break;
    }
  }
  if (tail == nullptr) {
    prefix.clear();
    for (auto it = fine.rbegin(); it != fine.rend(); ++it) {
      if (strong_pair(f, it->pair, params.epsilon)) {
        tail = &it->pair;
        break;
      }
    }
  }
  {
    CampaignCase c;
    c.function_label = f.label();
    c.sequence_label = "strong-pair";
    c.parameters["found"] = tail != nullptr;
    if (tail != nullptr) {
      c.parameters["p"] = Json::array({tail->p.x, tail->p.y});
      c.parameters["q"] = Json::array({tail->q.x, tail->q.y});
      c.parameters["scale_delta"] = tail->scale_delta;
    }
    c.counts_as_pass = tail != nullptr;
    c.verdict = c.counts_as_pass ? "pass" : "inconclusive";
    report.cases.push_back(std::move(c));
  }
  if (tail == nullptr) {
    report.status = "inconclusive";
    report.note = "no violating pair survives single-axis moves";
    return report;
  }

  const FactorableGridSequence assembled = assemble_alternating_grid(
      prefix, *tail, f.domain(), "t33_assembled(" + f.label() + ")");

  WitnessSearchResult grid_wit =
      find_witness(assembled, params.grid_epsilon, params.horizon);
  {
    CampaignCase c;
    c.function_label = f.label();
    c.sequence_label = assembled.label();
    c.parameters["grid_epsilon"] = params.grid_epsilon;
    c.artifacts["grid_witness"] = witness_artifact(grid_wit);
    c.counts_as_pass = grid_wit.found();
    c.verdict = c.counts_as_pass ? "pass" : "fail";
    report.cases.push_back(std::move(c));
  }

  WitnessSearchResult image_wit =
      find_witness(apply(f, assembled), params.epsilon, params.horizon);
  {
    CampaignCase c;
    c.function_label = f.label();
    c.sequence_label = "image-of-" + assembled.label();
    c.parameters["epsilon"] = params.epsilon;
    c.artifacts["image_witness_search"] = witness_artifact(image_wit);
    c.counts_as_pass = !image_wit.found();
    c.verdict = c.counts_as_pass ? "pass" : "fail";
    report.cases.push_back(std::move(c));
  }

  const bool ok = grid_wit.found() && !image_wit.found();
  report.status = ok ? "pass" : "fail";
  if (ok)
    report.note = "assembled grid slowly oscillates while its image does not";
  return report;
}

CampaignReport run_theorem34_campaign(
    const FunctionFamily& family, const Function2& f,
    const std::vector<FactorableGridSequence>& grids,
    const UniformLimitCampaignParams& params) {
  return uniform_limit_campaign("T3.4", family, f, grids, params, false);
}

CampaignReport run_theorem35_campaign(
    const FunctionFamily& family, const Function2& f,
    const std::vector<FactorableGridSequence>& grids,
    const UniformLimitCampaignParams& params) {
  return uniform_limit_campaign("T3.5", family, f, grids, params, true);
}

// ---------------------------------------------------------------------------
// Families and stock configurations.
// ---------------------------------------------------------------------------

FunctionFamily make_reciprocal_perturbation_family(const Function2& base) {
  return FunctionFamily::single(
      base.label() + "+1/n", [base](Index n) {
        return Function2(base.label() + "+1/" + std::to_string(n),
                         [base, n](double x, double y) {
                           return base(x, y) + 1.0 / static_cast<double>(n);
                         },
                         base.domain());
      });
}

FunctionFamily make_reciprocal_sum_perturbation_family(const Function2& base) {
  return FunctionFamily::double_indexed(
      base.label() + "+1/(m+n)", [base](Index m, Index n) {
        return Function2(base.label() + "+1/(" + std::to_string(m) + "+" +
                             std::to_string(n) + ")",
                         [base, m, n](double x, double y) {
                           return base(x, y) + 1.0 / static_cast<double>(m + n);
                         },
                         base.domain());
      });
}

FunctionFamily make_row_only_perturbation_family(const Function2& base) {
  return FunctionFamily::double_indexed(
      base.label() + "+1/m", [base](Index m, Index) {
        return Function2(base.label() + "+1/" + std::to_string(m),
                         [base, m](double x, double y) {
                           return base(x, y) + 1.0 / static_cast<double>(m);
                         },
                         base.domain());
      });
}

FunctionFamily make_power_family() {
  const DomainBox unit = DomainBox::closed(0.0, 1.0, 0.0, 1.0);
  return FunctionFamily::single("x^n", [unit](Index n) {
    return Function2("x^" + std::to_string(n),
                     [n](double x, double) {
                       return std::pow(x, static_cast<double>(n));
                     },
                     unit);
  });
}

Function2 make_power_family_pointwise_limit() {
  return Function2("x^n-pointwise-limit",
                   [](double x, double) { return x < 1.0 ? 0.0 : 1.0; },
                   DomainBox::closed(0.0, 1.0, 0.0, 1.0));
}

CampaignReport run_stock_campaign(const std::string& theorem_id,
                                  const CampaignOverrides& overrides) {
  if (theorem_id == "T3.1") {
    PreservationCampaignParams params;
    if (overrides.epsilon) params.epsilon_in = *overrides.epsilon;
    if (overrides.horizon) params.horizon = *overrides.horizon;
    if (overrides.seed) params.seed = *overrides.seed;
    std::vector<Function2> fns;
    for (const std::string& name : function_gallery_names())
      fns.push_back(builtin_function(name));
    std::vector<FactorableGridSequence> grids{builtin_grid("recip_grid"),
                                              builtin_grid("log_grid")};
    return run_theorem31_campaign(fns, grids, params);
  }
  if (theorem_id == "T3.2") {
    ConvergenceCampaignParams params;
    if (overrides.epsilon) params.epsilon = *overrides.epsilon;
    if (overrides.horizon) params.horizon = *overrides.horizon;
    std::vector<Function2> fns{builtin_function("product"),
                               builtin_function("sum"),
                               builtin_function("ident_x")};
    std::vector<ConvergentGrid> grids;
    grids.push_back(ConvergentGrid{builtin_grid("recip_grid"), 0.0, 0.0});
    grids.push_back(ConvergentGrid{
        FactorableGridSequence(
            "shifted_recip_grid",
            [](Index k) { return 1.0 + 1.0 / static_cast<double>(k); },
            [](Index l) { return 2.0 + 1.0 / static_cast<double>(l); },
            DomainBox::closed(1.0, 2.0, 2.0, 3.0)),
        1.0, 2.0});
    grids.push_back(ConvergentGrid{
        FactorableGridSequence(
            "const_grid",
            [](Index) { return 0.5; }, [](Index) { return 0.25; },
            DomainBox::closed(0.5, 0.5, 0.25, 0.25)),
        0.5, 0.25});
    return run_theorem32_campaign(fns, grids, params);
  }
  if (theorem_id == "T3.3") {
    FalsificationParams params;
    if (overrides.epsilon) params.epsilon = *overrides.epsilon;
    if (overrides.horizon) params.horizon = *overrides.horizon;
    if (overrides.seed) params.seed = *overrides.seed;
    return run_theorem33_falsification(builtin_function("one_over_xy"), params);
  }
  if (theorem_id == "T3.4") {
    UniformLimitCampaignParams params;
    if (overrides.epsilon) params.epsilon = *overrides.epsilon;
    if (overrides.horizon) params.horizon = *overrides.horizon;
    if (overrides.seed) params.seed = *overrides.seed;
    const Function2 base = builtin_function("sum");
    std::vector<FactorableGridSequence> grids{builtin_grid("recip_grid"),
                                              builtin_grid("log_grid")};
    return run_theorem34_campaign(make_reciprocal_perturbation_family(base),
                                  base, grids, params);
  }
  if (theorem_id == "T3.5") {
    UniformLimitCampaignParams params;
    if (overrides.epsilon) params.epsilon = *overrides.epsilon;
    if (overrides.horizon) params.horizon = *overrides.horizon;
    if (overrides.seed) params.seed = *overrides.seed;
    const Function2 base = builtin_function("sum");
    std::vector<FactorableGridSequence> grids{builtin_grid("recip_grid"),
                                              builtin_grid("log_grid")};
    return run_theorem35_campaign(
        make_reciprocal_sum_perturbation_family(base), base, grids, params);
  }
  throw UnknownNameError("unknown campaign id: " + theorem_id +
                         " (expected T3.1 .. T3.5)");
}

}  // namespace doubleseq
