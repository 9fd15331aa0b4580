// campaign.hpp — theorem-verification campaigns and converse falsification.
//
// Campaigns treat theorem hypotheses as preconditions: when a hypothesis
// fails the campaign refuses to run instead of reporting a spurious red, so
// a failing campaign always means either an implementation bug or a genuine
// counterexample.

#pragma once

#include <string>
#include <vector>

#include "doubleseq/function2.hpp"
#include "doubleseq/oscillation.hpp"
#include "doubleseq/report.hpp"
#include "doubleseq/sequence.hpp"

namespace doubleseq {

struct CampaignCase {
  std::string sequence_label;
  std::string function_label;
  Json parameters;
  std::string verdict;  // pass | fail | expected-fail | inconclusive
  bool counts_as_pass = false;
  Json artifacts;  // embedded certificates / reports, re-checkable
};

struct CampaignReport {
  std::string theorem_id;
  std::string status = "pass";  // pass | fail | refused | inconclusive
  std::string note;
  std::vector<CampaignCase> cases;
  Json config_echo;

  /// Serializes with cases sorted by (function, sequence) label and a summary
  /// whose counts are recomputed from the case list.
  Json to_json() const;
  /// 0 = pass, 1 = fail, 2 = refused or inconclusive.
  int exit_code() const;
};

/// True when every point of `inner` lies in `outer` (edge-open flags
/// respected).
bool box_within(const DomainBox& inner, const DomainBox& outer);

// ---------------------------------------------------------------------------
// Campaigns.
// ---------------------------------------------------------------------------

struct PreservationCampaignParams {
  double epsilon_in = 0.05;
  Index horizon = 2000;
  int uc_pair_budget = 2048;
  std::uint64_t seed = 1;
};

/// Uniformly continuous (here: Lipschitz-tagged) functions must map grids
/// with a slow-oscillation witness at epsilon_in to images with a witness at
/// K * epsilon_in. Functions without a constant are first run through the
/// uniform-continuity falsifier; when it finds violations the image witness
/// search is expected to fail and the case is recorded as expected-fail, not
/// as a counterexample. Function/grid pairs whose domains do not nest are
/// skipped.
CampaignReport run_theorem31_campaign(
    const std::vector<Function2>& functions,
    const std::vector<FactorableGridSequence>& grids,
    const PreservationCampaignParams& params);

struct ConvergentGrid {
  FactorableGridSequence grid;
  double limit_u = 0.0;
  double limit_v = 0.0;
};

struct ConvergenceCampaignParams {
  double epsilon = 0.05;
  Index threshold = 100;
  Index horizon = 1000;
};

/// For each function and window-P-convergent grid: interleaves the image
/// with its limit value, demands a slow-oscillation witness for the
/// interleaved sequence, then checks the image P-converges to f(L_u, L_v).
/// Throws DomainError when a declared grid limit is outside the function's
/// domain; refuses when the P-convergence precondition fails on the window.
CampaignReport run_theorem32_campaign(const std::vector<Function2>& functions,
                                      const std::vector<ConvergentGrid>& grids,
                                      const ConvergenceCampaignParams& params);

struct FalsificationParams {
  double epsilon = 1.0;
  Index horizon = 1000;
  double grid_epsilon = 0.05;  // witness level for the assembled grid
  int pair_budget = 2048;      // samples per scale
  int pairs_per_scale = 8;
  int max_scales = 16;  // distance scales 1, 1/2, ..., 2^-(max_scales-1)
  int min_scales = 12;  // fewer productive scales => inconclusive
  int bisection_depth = 40;
  int min_cluster = 4;
  std::uint64_t seed = 1;
};

/// Converse direction: harvests pairs at distance < 1/n with value gap >=
/// epsilon for n = 1, 2, 4, ...; extracts a near-convergent cluster of them
/// by iterated bisection of the domain box; assembles a grid whose diagonal
/// alternates the paired points (extended periodically). The assembled grid
/// must have a slow-oscillation witness while its image under f fails the
/// witness search over the whole (alpha, delta, N) grid. Reports
/// inconclusive when the sampler cannot produce pairs at enough scales.
CampaignReport run_theorem33_falsification(const Function2& f,
                                           const FalsificationParams& params);

struct UniformLimitCampaignParams {
  double epsilon = 0.3;
  Index uc_threshold = 20;   // N (N1 for the double-indexed variant)
  Index uc_threshold2 = 20;  // N2, double-indexed variant only
  Index horizon = 1000;
  int sample_budget = 512;
  std::uint64_t seed = 1;
};

/// Uniform limit of witness-preserving members: refuses unless the family is
/// uniformly convergent to f at epsilon/3 on samples; then demands a witness
/// at epsilon/3 for the image under the member at the threshold and a witness
/// at epsilon for the image under f, reporting the eps/3 + eps/3 + eps/3
/// decomposition per case.
CampaignReport run_theorem34_campaign(
    const FunctionFamily& family, const Function2& f,
    const std::vector<FactorableGridSequence>& grids,
    const UniformLimitCampaignParams& params);

/// Double-indexed variant (uniform P-convergence of f_{m,n}).
CampaignReport run_theorem35_campaign(
    const FunctionFamily& family, const Function2& f,
    const std::vector<FactorableGridSequence>& grids,
    const UniformLimitCampaignParams& params);

// ---------------------------------------------------------------------------
// Stock configurations (used by the CLI and the regression suite).
// ---------------------------------------------------------------------------

struct CampaignOverrides {
  std::optional<double> epsilon;
  std::optional<Index> horizon;
  std::optional<std::uint64_t> seed;
};

/// Runs the stock configuration of the named campaign
/// (T3.1, T3.2, T3.3, T3.4 or T3.5). Throws UnknownNameError otherwise.
CampaignReport run_stock_campaign(const std::string& theorem_id,
                                  const CampaignOverrides& overrides = {});

/// f_n = base + 1/n on base's domain.
FunctionFamily make_reciprocal_perturbation_family(const Function2& base);
/// f_{m,n} = base + 1/(m+n).
FunctionFamily make_reciprocal_sum_perturbation_family(const Function2& base);
/// f_{m,n} = base + 1/m (not uniformly P-convergent at tight epsilon).
FunctionFamily make_row_only_perturbation_family(const Function2& base);
/// f_n(x, y) = x^n on [0,1]^2, plus its discontinuous pointwise limit
/// (0 for x < 1, 1 at x = 1) — the classic non-uniformly-convergent family.
FunctionFamily make_power_family();
Function2 make_power_family_pointwise_limit();

}  // namespace doubleseq
