#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "doubleseq/campaign.hpp"
#include "doubleseq/gallery.hpp"
#include "doubleseq/modulus.hpp"

using namespace doubleseq;

TEST_CASE("T3.1 stock campaign passes, recording expected-fails") {
  CampaignReport report = run_stock_campaign("T3.1");
  CHECK(report.status == "pass");
  CHECK(report.exit_code() == 0);

  Json j = report.to_json();
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["total"] == report.cases.size());

  bool saw_expected_fail = false;
  for (const CampaignCase& c : report.cases) {
    if (c.function_label == "one_over_xy" && c.sequence_label == "recip_grid") {
      CHECK(c.verdict == "expected-fail");
      saw_expected_fail = true;
    }
  }
  CHECK(saw_expected_fail);

  // Domain nesting keeps the open-box functions off log_grid.
  for (const CampaignCase& c : report.cases) {
    if (c.function_label == "one_over_xy" || c.function_label == "sin_recip_x")
      CHECK(c.sequence_label == "recip_grid");
  }
}

TEST_CASE("T3.1 fails when a grid lacks its required witness") {
  FactorableGridSequence jumpy(
      "jumpy_grid",
      [](Index k) { return k % 2 == 0 ? 0.9 : 0.1; },
      [](Index l) { return l % 2 == 0 ? 0.9 : 0.1; },
      DomainBox::closed(0.0, 1.0, 0.0, 1.0));
  PreservationCampaignParams params;
  params.horizon = 200;
  CampaignReport report =
      run_theorem31_campaign({builtin_function("sum")}, {jumpy}, params);
  CHECK(report.status == "fail");
  CHECK(report.exit_code() == 1);
}

TEST_CASE("T3.2 stock campaign passes with interleaved witnesses") {
  CampaignReport report = run_stock_campaign("T3.2");
  CHECK(report.status == "pass");
  CHECK(report.cases.size() == 9);  // 3 functions x 3 convergent grids
  for (const CampaignCase& c : report.cases) {
    CHECK(c.verdict == "pass");
    CHECK(c.artifacts["interleaved_witness"]["status"] == "witness-found");
    CHECK(c.artifacts["image_pringsheim"]["status"] == "verified");
  }
}

TEST_CASE("T3.2 throws DomainError when a limit escapes the domain") {
  std::vector<ConvergentGrid> grids;
  grids.push_back(ConvergentGrid{builtin_grid("recip_grid"), 0.0, 0.0});
  // 1/(xy) lives on (0,1]^2, so the limit (0,0) is outside.
  CHECK_THROWS_AS(run_theorem32_campaign({builtin_function("one_over_xy")},
                                         grids, ConvergenceCampaignParams{}),
                  DomainError);
}

TEST_CASE("T3.2 refuses when the declared limit is wrong") {
  std::vector<ConvergentGrid> grids;
  grids.push_back(ConvergentGrid{builtin_grid("recip_grid"), 0.5, 0.5});
  CampaignReport report = run_theorem32_campaign(
      {builtin_function("sum")}, grids, ConvergenceCampaignParams{});
  CHECK(report.status == "refused");
  CHECK(report.exit_code() == 2);
}

TEST_CASE("T3.3 falsification succeeds for 1/(xy)") {
  CampaignReport report = run_stock_campaign("T3.3");
  REQUIRE(report.status == "pass");
  REQUIRE(report.cases.size() == 5);
  for (const CampaignCase& c : report.cases) CHECK(c.counts_as_pass);
  // The assembled grid slowly oscillates; its image does not.
  CHECK(report.cases[3].artifacts["grid_witness"]["status"] == "witness-found");
  CHECK(report.cases[4].artifacts["image_witness_search"]["status"] ==
        "no-witness-found-on-grid");
}

TEST_CASE("T3.3 falsification also succeeds for sin(1/x)") {
  FalsificationParams params;
  CampaignReport report =
      run_theorem33_falsification(builtin_function("sin_recip_x"), params);
  CHECK(report.status == "pass");
}

TEST_CASE("T3.3 is inconclusive for a Lipschitz function") {
  FalsificationParams params;
  params.epsilon = 0.1;
  CampaignReport report =
      run_theorem33_falsification(builtin_function("sum"), params);
  CHECK(report.status == "inconclusive");
  CHECK(report.exit_code() == 2);
}

TEST_CASE("T3.4 stock campaign passes") {
  CampaignReport report = run_stock_campaign("T3.4");
  CHECK(report.status == "pass");
  CHECK(report.cases.size() == 2);
  for (const CampaignCase& c : report.cases) {
    CHECK(c.verdict == "pass");
    const Json& thirds = c.artifacts["epsilon_thirds"];
    CHECK(thirds["total_bound"].get<double>() <
          thirds["epsilon"].get<double>());
  }
}

TEST_CASE("T3.4 passes for the multiplicative perturbation family") {
  const Function2 base = builtin_function("sum");
  FunctionFamily family = FunctionFamily::single(
      "sum*(1+1/n)", [base](Index n) {
        return Function2("sum*(1+1/n)",
                         [base, n](double x, double y) {
                           return base(x, y) *
                                  (1.0 + 1.0 / static_cast<double>(n));
                         },
                         base.domain());
      });
  UniformLimitCampaignParams params;
  params.epsilon = 0.3;
  params.uc_threshold = 256;  // sup gap is 20/n on the box, need < 0.1
  CampaignReport report = run_theorem34_campaign(
      family, base, {builtin_grid("recip_grid")}, params);
  CHECK(report.status == "pass");
}

TEST_CASE("T3.4 refuses the power family on precondition failure") {
  UniformLimitCampaignParams params;
  params.epsilon = 0.3;
  params.uc_threshold = 10;
  CampaignReport report = run_theorem34_campaign(
      make_power_family(), make_power_family_pointwise_limit(),
      {builtin_grid("recip_grid")}, params);
  CHECK(report.status == "refused");
  CHECK(report.exit_code() == 2);
  CHECK(report.cases.empty());
}

TEST_CASE("T3.5 stock campaign passes") {
  CampaignReport report = run_stock_campaign("T3.5");
  CHECK(report.status == "pass");
  CHECK(report.cases.size() == 2);
}

TEST_CASE("T3.5 refuses the row-only perturbation at a tight epsilon") {
  const Function2 base = builtin_function("sum");
  UniformLimitCampaignParams params;
  params.epsilon = 0.2;  // eps/3 = 0.0667 < 1/10
  params.uc_threshold = 10;
  params.uc_threshold2 = 10;
  CampaignReport report = run_theorem35_campaign(
      make_row_only_perturbation_family(base), base,
      {builtin_grid("recip_grid")}, params);
  CHECK(report.status == "refused");
}

TEST_CASE("epsilon-thirds chain holds numerically for f + 1/n") {
  const Function2 f = builtin_function("sum");
  const FunctionFamily family = make_reciprocal_perturbation_family(f);
  const FactorableGridSequence grid = builtin_grid("recip_grid");
  const double eps = 0.3;
  const Index n0 = 20;

  UniformConvergenceVerdict ucv =
      check_uniform_convergence(family, f, eps / 3.0, n0, 256, 1);
  REQUIRE(ucv.verified_on_sample);

  const Function2 member = family.at(n0);
  const ScalarDoubleSequence member_image = apply(member, grid);
  const ScalarDoubleSequence limit_image = apply(f, grid);
  WitnessSearchResult w = find_witness(member_image, eps / 3.0, 400);
  REQUIRE(w.found());

  // Instantiate |f(x_kl) - f(x_st)| <= eps/3 + eps/3 + eps/3 on the
  // certified region.
  const Index n = w.witness->threshold;
  int checked = 0;
  for (Index k = n; k <= 400; k += 37) {
    for (Index l = n; l <= 400; l += 41) {
      const Index s = std::min<Index>(
          relative_window_end(k, w.witness->alpha), k + 50);
      const Index t = std::min<Index>(
          relative_window_end(l, w.witness->delta), l + 50);
      const double member_gap = std::fabs(member_image(k, l) - member_image(s, t));
      CHECK(member_gap < eps / 3.0);
      const double limit_gap = std::fabs(limit_image(k, l) - limit_image(s, t));
      CHECK(limit_gap <= 2.0 * ucv.sup_gap + member_gap + 1e-12);
      CHECK(limit_gap < eps);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("campaign reports serialize with consistent summaries") {
  CampaignReport report = run_stock_campaign("T3.4");
  Json j = report.to_json();
  CHECK(j["summary"]["total"].get<std::size_t>() == report.cases.size());
  std::size_t passed = 0;
  for (const CampaignCase& c : report.cases)
    if (c.counts_as_pass) ++passed;
  CHECK(j["summary"]["passed"].get<std::size_t>() == passed);
  // Cases arrive sorted by (function, sequence).
  const Json& cases = j["cases"];
  for (std::size_t i = 1; i < cases.size(); ++i) {
    const auto prev = std::make_pair(cases[i - 1]["function"].get<std::string>(),
                                     cases[i - 1]["sequence"].get<std::string>());
    const auto cur = std::make_pair(cases[i]["function"].get<std::string>(),
                                    cases[i]["sequence"].get<std::string>());
    CHECK(prev <= cur);
  }
  CHECK(Json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("unknown campaign ids are rejected") {
  CHECK_THROWS_AS(run_stock_campaign("T9.9"), UnknownNameError);
}
