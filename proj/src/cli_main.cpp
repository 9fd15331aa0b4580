#include "doubleseq/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "doubleseq/campaign.hpp"
#include "doubleseq/checks.hpp"
#include "doubleseq/function2.hpp"
#include "doubleseq/gallery.hpp"
#include "doubleseq/modulus.hpp"
#include "doubleseq/oscillation.hpp"
#include "doubleseq/spiral.hpp"

namespace doubleseq {

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 64;

int status_exit_code(Status s) {
  switch (s) {
    case Status::verified:
      return kExitVerified;
    case Status::violated:
    case Status::definitely_divergent:
      return kExitViolated;
    case Status::undetermined:
      return kExitUndetermined;
  }
  return kExitUndetermined;
}

struct OutputOptions {
  std::string format = "json";  // json | csv
  std::string path;             // empty = stdout
};

void emit(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + out.path);
  file << text;
}

void emit_report(const OutputOptions& out, const ConvergenceReport& report) {
  emit(out, out.format == "csv" ? report.to_csv() : report.to_json().dump(2));
}

void emit_json(const OutputOptions& out, const Json& j) {
  emit(out, j.dump(2));
}

std::vector<Index> parse_index_list(const std::string& csv) {
  std::vector<Index> xs;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    xs.push_back(static_cast<Index>(std::stoll(tok)));
  }
  return xs;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"doubleseq — finite-window certification of double-sequence "
               "convergence, slow oscillation, and preservation properties"};
  app.require_subcommand(1);

  OutputOptions out;
  app.add_option("--out", out.format, "Output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", out.path, "Write the report to a file");

  // ---- check-so ------------------------------------------------------
  auto* so = app.add_subcommand(
      "check-so", "Slow-oscillation certificate or witness search");
  std::string so_seq;
  double so_eps = 0.1;
  std::optional<double> so_alpha, so_delta;
  Index so_n = 1, so_h = 1000;
  so->add_option("--seq", so_seq, "Gallery sequence or grid name")->required();
  so->add_option("--eps", so_eps, "Epsilon")->required();
  so->add_option("--alpha", so_alpha, "Alpha (with --delta: direct check)");
  so->add_option("--delta", so_delta, "Delta (with --alpha: direct check)");
  so->add_option("--n", so_n, "Threshold N")->capture_default_str();
  so->add_option("--horizon", so_h, "Horizon H")->capture_default_str();

  // ---- check-cauchy ---------------------------------------------------
  auto* cauchy = app.add_subcommand("check-cauchy", "Window Cauchy check");
  std::string cy_seq;
  double cy_eps = 0.1;
  Index cy_n = 1, cy_h = 100;
  cauchy->add_option("--seq", cy_seq)->required();
  cauchy->add_option("--eps", cy_eps)->required();
  cauchy->add_option("--n", cy_n)->capture_default_str();
  cauchy->add_option("--horizon", cy_h)->capture_default_str();

  // ---- check-pringsheim ------------------------------------------------
  auto* pring = app.add_subcommand("check-pringsheim",
                                   "Window Pringsheim-limit check");
  std::string pr_seq;
  double pr_eps = 0.1, pr_limit = 0.0;
  Index pr_n = 1, pr_h = 100;
  pring->add_option("--seq", pr_seq)->required();
  pring->add_option("--limit", pr_limit, "Candidate limit L")->required();
  pring->add_option("--eps", pr_eps)->required();
  pring->add_option("--n", pr_n)->capture_default_str();
  pring->add_option("--horizon", pr_h)->capture_default_str();

  // ---- limit ----------------------------------------------------------
  auto* limit = app.add_subcommand("limit",
                                   "Estimate the Pringsheim limit on a window");
  std::string lm_seq;
  double lm_tol = 0.01;
  Index lm_h = 1000;
  limit->add_option("--seq", lm_seq)->required();
  limit->add_option("--tol", lm_tol, "Tail-box oscillation tolerance")
      ->capture_default_str();
  limit->add_option("--horizon", lm_h)->capture_default_str();

  // ---- spiral -----------------------------------------------------------
  auto* spiral = app.add_subcommand("spiral", "Spiral layout position of j");
  Index sp_j = 1;
  spiral->add_option("--j", sp_j, "Linear index")->required();

  // ---- subseq -----------------------------------------------------------
  auto* subseq = app.add_subcommand(
      "subseq", "Lay out a double subsequence on the spiral");
  std::string sub_seq_name;
  Index sub_count = 9;
  std::string sub_nj, sub_kj;
  subseq->add_option("--seq", sub_seq_name)->required();
  subseq->add_option("--count", sub_count, "Number of entries j = 1..count")
      ->capture_default_str();
  subseq->add_option("--nj", sub_nj, "Comma list n_1,n_2,... (default 1,2,3,...)");
  subseq->add_option("--kj", sub_kj, "Comma list k_1,k_2,... (default 1,2,3,...)");

  // ---- apply ------------------------------------------------------------
  auto* apply_cmd = app.add_subcommand(
      "apply", "Evaluate the image of a grid under a function");
  std::string ap_fn, ap_seq;
  Index ap_h = 8;
  apply_cmd->add_option("--fn", ap_fn, "Gallery function name")->required();
  apply_cmd->add_option("--seq", ap_seq, "Gallery grid name")->required();
  apply_cmd->add_option("--horizon", ap_h, "Emit k,l <= horizon")
      ->capture_default_str();

  // ---- uc-test ------------------------------------------------------------
  auto* uc = app.add_subcommand("uc-test",
                                "Uniform-continuity falsification sampling");
  std::string uc_fn;
  double uc_eps = 0.1;
  int uc_budget = 2048;
  std::uint64_t uc_seed = 1;
  uc->add_option("--fn", uc_fn)->required();
  uc->add_option("--eps", uc_eps)->required();
  uc->add_option("--budget", uc_budget, "Samples per scale")
      ->capture_default_str();
  uc->add_option("--seed", uc_seed)->capture_default_str();

  // ---- campaign -----------------------------------------------------------
  auto* campaign = app.add_subcommand("campaign",
                                      "Run a stock theorem campaign");
  std::string cp_id;
  std::optional<double> cp_eps;
  std::optional<Index> cp_h;
  std::optional<std::uint64_t> cp_seed;
  campaign->add_option("id", cp_id, "T3.1 | T3.2 | T3.3 | T3.4 | T3.5")
      ->required();
  campaign->add_option("--eps", cp_eps, "Override campaign epsilon");
  campaign->add_option("--horizon", cp_h, "Override campaign horizon");
  campaign->add_option("--seed", cp_seed, "Override campaign seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (so->parsed()) {
      BuiltinSequence seq = builtin(so_seq);
      if (so_alpha.has_value() != so_delta.has_value())
        throw InvalidParamsError("--alpha and --delta must be given together");
      if (so_alpha) {
        OscillationParams p{so_eps, *so_alpha, *so_delta, so_n, so_h};
        OscillationCertificate cert =
            std::holds_alternative<ScalarDoubleSequence>(seq)
                ? check_slowly_oscillating(std::get<ScalarDoubleSequence>(seq), p)
                : check_slowly_oscillating(std::get<FactorableGridSequence>(seq),
                                           p);
        emit_json(out, cert.to_json());
        return status_exit_code(cert.status);
      }
      WitnessSearchResult res =
          std::holds_alternative<ScalarDoubleSequence>(seq)
              ? find_witness(std::get<ScalarDoubleSequence>(seq), so_eps, so_h)
              : find_witness(std::get<FactorableGridSequence>(seq), so_eps,
                             so_h);
      emit_json(out, res.to_json());
      return res.found() ? kExitVerified : kExitUndetermined;
    }

    if (cauchy->parsed()) {
      ConvergenceReport r =
          check_cauchy(builtin_sequence(cy_seq), cy_eps, cy_n, cy_h);
      emit_report(out, r);
      return status_exit_code(r.status);
    }

    if (pring->parsed()) {
      ConvergenceReport r = check_pringsheim(builtin_sequence(pr_seq), pr_limit,
                                             pr_eps, pr_n, pr_h);
      emit_report(out, r);
      return status_exit_code(r.status);
    }

    if (limit->parsed()) {
      ConvergenceReport r =
          estimate_pringsheim_limit(builtin_sequence(lm_seq), lm_tol, lm_h);
      emit_report(out, r);
      return status_exit_code(r.status);
    }

    if (spiral->parsed()) {
      GridPos pos = spiral_position(sp_j);
      emit(out, "(" + std::to_string(pos.row) + "," + std::to_string(pos.col) +
                    ")");
      return kExitVerified;
    }

    if (subseq->parsed()) {
      SubsequenceSelector sel;
      if (sub_nj.empty() || sub_kj.empty()) {
        for (Index j = 1; j <= sub_count; ++j) {
          sel.n_seq.push_back(j);
          sel.k_seq.push_back(j);
        }
        if (!sub_nj.empty()) sel.n_seq = parse_index_list(sub_nj);
        if (!sub_kj.empty()) sel.k_seq = parse_index_list(sub_kj);
      } else {
        sel.n_seq = parse_index_list(sub_nj);
        sel.k_seq = parse_index_list(sub_kj);
      }
      SubsequenceMatrix m =
          build_double_subsequence(builtin_sequence(sub_seq_name), sel,
                                   sub_count);
      emit(out, out.format == "csv" ? m.to_csv() : m.to_json().dump(2));
      return kExitVerified;
    }

    if (apply_cmd->parsed()) {
      ScalarDoubleSequence image =
          apply(builtin_function(ap_fn), builtin_grid(ap_seq));
      if (out.format == "csv") {
        std::ostringstream csv;
        csv << "k,l,value\n";
        for (Index k = 1; k <= ap_h; ++k)
          for (Index l = 1; l <= ap_h; ++l)
            csv << k << "," << l << "," << Json(image(k, l)).dump() << "\n";
        emit(out, csv.str());
      } else {
        Json rows = Json::array();
        for (Index k = 1; k <= ap_h; ++k)
          for (Index l = 1; l <= ap_h; ++l)
            rows.push_back(Json::array({k, l, image(k, l)}));
        Json j;
        j["label"] = image.label();
        j["horizon"] = ap_h;
        j["values"] = rows;
        emit_json(out, j);
      }
      return kExitVerified;
    }

    if (uc->parsed()) {
      UniformContinuityVerdict v = test_uniform_continuity(
          builtin_function(uc_fn), uc_eps, uc_budget, uc_seed);
      emit_json(out, v.to_json());
      return v.violation_found ? kExitViolated : kExitVerified;
    }

    if (campaign->parsed()) {
      CampaignOverrides overrides;
      overrides.epsilon = cp_eps;
      overrides.horizon = cp_h;
      overrides.seed = cp_seed;
      CampaignReport report = run_stock_campaign(cp_id, overrides);
      emit_json(out, report.to_json());
      return report.exit_code();
    }
  } catch (const UnknownNameError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParamsError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSelectorError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidWindowError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUndetermined;
  }
  return kExitUsage;
}

}  // namespace doubleseq
