#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "doubleseq/checks.hpp"
#include "doubleseq/gallery.hpp"
#include "doubleseq/modulus.hpp"
#include "doubleseq/oscillation.hpp"

using namespace doubleseq;

namespace {

// Independent enumeration of the scan region in lexicographic order, used to
// cross-check pairs_checked and canonical counterexamples on small windows.
struct LexScan {
  std::uint64_t rank_of_first_violation = 0;
  std::uint64_t total = 0;
  bool violated = false;
  Index k = 0, l = 0, s = 0, t = 0;
};

LexScan lex_scan(const ScalarDoubleSequence& seq, const OscillationParams& p) {
  LexScan r;
  for (Index k = p.threshold; k <= p.horizon; ++k) {
    const Index s_end = relative_window_end(k, p.alpha);
    for (Index l = p.threshold; l <= p.horizon; ++l) {
      const Index t_end = relative_window_end(l, p.delta);
      for (Index s = k; s <= s_end; ++s) {
        for (Index t = l; t <= t_end; ++t) {
          ++r.total;
          if (!r.violated &&
              std::fabs(seq(k, l) - seq(s, t)) >= p.epsilon) {
            r.violated = true;
            r.rank_of_first_violation = r.total;
            r.k = k;
            r.l = l;
            r.s = s;
            r.t = t;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("constant sequences are slowly oscillating for any parameters") {
  OscillationParams p{0.001, 0.5, 0.25, 3, 60};
  OscillationCertificate cert =
      check_slowly_oscillating(make_constant_sequence(4.0), p);
  CHECK(cert.status == Status::verified);
  CHECK(cert.pairs_checked > 0);
}

TEST_CASE("log_max is slowly oscillating at eps 0.1 with 5% windows") {
  OscillationParams p{0.1, 0.05, 0.05, 2, 10000};
  OscillationCertificate cert =
      check_slowly_oscillating(builtin_sequence("log_max"), p);
  CHECK(cert.status == Status::verified);
}

TEST_CASE("alternating violates with the canonical smallest quadruple") {
  OscillationParams p{1.0, 0.5, 0.5, 4, 100};
  ScalarDoubleSequence alt = builtin_sequence("alternating");
  OscillationCertificate cert = check_slowly_oscillating(alt, p);
  REQUIRE(cert.status == Status::violated);
  REQUIRE(cert.counterexample.has_value());
  const CounterexamplePair& ce = *cert.counterexample;
  CHECK(ce.a.k == 4);
  CHECK(ce.a.l == 4);
  CHECK(ce.b.k == 4);
  CHECK(ce.b.l == 5);
  CHECK(ce.gap == 2.0);
  CHECK(std::fabs(alt(ce.a) - alt(ce.b)) >= p.epsilon);

  LexScan oracle = lex_scan(alt, p);
  REQUIRE(oracle.violated);
  CHECK(oracle.k == ce.a.k);
  CHECK(oracle.l == ce.a.l);
  CHECK(oracle.s == ce.b.k);
  CHECK(oracle.t == ce.b.l);
  CHECK(cert.pairs_checked == oracle.rank_of_first_violation);
}

TEST_CASE("verified pairs_checked equals the region size") {
  OscillationParams p{9.0, 0.5, 0.5, 1, 3};
  OscillationCertificate cert =
      check_slowly_oscillating(make_constant_sequence(0.0), p);
  REQUIRE(cert.status == Status::verified);
  // k-side windows: {1}, {2,3}, {3,4} -> weight 5; same for l.
  CHECK(cert.pairs_checked == 25);
  CHECK(lex_scan(make_constant_sequence(0.0), p).total == 25);
}

TEST_CASE("oscillation_modulus matches hand values") {
  CHECK(oscillation_modulus(make_constant_sequence(3.0), 0.3, 0.3, 1, 40) ==
        0.0);
  CHECK(oscillation_modulus(builtin_sequence("alternating"), 0.5, 0.5, 2, 100) ==
        2.0);
  const double m =
      oscillation_modulus(builtin_sequence("log_max"), 0.1, 0.1, 10, 1000);
  CHECK(m == doctest::Approx(std::log(1.1)).epsilon(1e-12));
  CHECK(m <= std::log(1.1) + 1e-12);
  CHECK(m >= std::log(11.0 / 10.0) - 1e-12);
}

TEST_CASE("engine and oracle agree across the gallery (randomized)") {
  std::mt19937_64 rng(2024);
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const char* names[] = {"log_max", "harmonic_sum", "alternating", "row_spike",
                         "const(1.5)"};
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Index h = 8 + static_cast<Index>(rng() % 120);
    const Index n = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(h));
    const double alpha = 0.03 + 0.45 * unit();
    const double delta = 0.03 + 0.45 * unit();
    const double eps = 0.01 + 2.4 * unit();
    ScalarDoubleSequence seq = builtin_sequence(names[trial % 5]);
    OscillationParams p{eps, alpha, delta, n, h};
    OscillationCertificate cert = check_slowly_oscillating(seq, p);
    const double mod = oscillation_modulus(seq, alpha, delta, n, h);
    CHECK((cert.status == Status::verified) == (mod < eps));
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("grid engine and grid oracle agree (randomized)") {
  std::mt19937_64 rng(99);
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Index h = 8 + static_cast<Index>(rng() % 100);
    const Index n = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(h));
    const double alpha = 0.05 + 0.4 * unit();
    const double delta = 0.05 + 0.4 * unit();
    const double eps = 0.005 + 0.6 * unit();
    FactorableGridSequence grid =
        builtin_grid(trial % 2 == 0 ? "recip_grid" : "log_grid");
    OscillationParams p{eps, alpha, delta, n, h};
    OscillationCertificate cert = check_slowly_oscillating(grid, p);
    const double mod = oscillation_modulus(grid, alpha, delta, n, h);
    CHECK((cert.status == Status::verified) == (mod < eps));
    if (cert.status == Status::violated) {
      const Point2 a = grid.point(cert.counterexample->a);
      const Point2 b = grid.point(cert.counterexample->b);
      CHECK(std::hypot(a.x - b.x, a.y - b.y) >= eps);
    }
  }
}

TEST_CASE("grid violation reports the canonical pair") {
  OscillationParams p{0.2, 0.5, 0.5, 1, 50};
  OscillationCertificate cert =
      check_slowly_oscillating(builtin_grid("recip_grid"), p);
  REQUIRE(cert.status == Status::violated);
  CHECK(cert.counterexample->a.k == 2);
  CHECK(cert.counterexample->a.l == 2);
  CHECK(cert.counterexample->b.k == 3);
  CHECK(cert.counterexample->b.l == 3);
}

TEST_CASE("modulus is monotone in alpha, delta and antitone in N") {
  const double alphas[] = {0.05, 0.1, 0.2, 0.4};
  for (const char* name : {"log_max", "harmonic_sum", "alternating"}) {
    ScalarDoubleSequence seq = builtin_sequence(name);
    double prev = -1.0;
    for (double a : alphas) {
      const double m = oscillation_modulus(seq, a, 0.1, 2, 40);
      CHECK(m >= prev);
      prev = m;
    }
    prev = -1.0;
    for (double d : alphas) {
      const double m = oscillation_modulus(seq, 0.1, d, 2, 40);
      CHECK(m >= prev);
      prev = m;
    }
    double prev_n = 1e300;
    for (Index n : {1, 4, 16}) {
      const double m = oscillation_modulus(seq, 0.2, 0.2, n, 40);
      CHECK(m <= prev_n);
      prev_n = m;
    }
  }
}

TEST_CASE("window Cauchy implies window slow oscillation") {
  std::mt19937_64 rng(5);
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const char* names[] = {"log_max", "harmonic_sum", "const(0.25)",
                         "alternating"};
  int implications = 0;
  for (int trial = 0; trial < 50; ++trial) {
    ScalarDoubleSequence seq = builtin_sequence(names[trial % 4]);
    const Index n = 2 + static_cast<Index>(rng() % 20);
    const Index h = n + 2 + static_cast<Index>(rng() % 60);
    const double alpha = 0.05 + 0.45 * unit();
    const double delta = 0.05 + 0.45 * unit();
    const double eps = 0.02 + 1.5 * unit();
    const Index outer = static_cast<Index>(std::ceil(
        (1.0 + std::max(alpha, delta)) * static_cast<double>(h)));
    ConvergenceReport cauchy = check_cauchy(seq, eps, n - 1, outer);
    if (cauchy.status != Status::verified) continue;
    ++implications;
    OscillationCertificate cert =
        check_slowly_oscillating(seq, {eps, alpha, delta, n, h});
    CHECK(cert.status == Status::verified);
  }
  CHECK(implications > 5);
}

TEST_CASE("find_witness: constant takes the first grid point") {
  WitnessSearchResult w = find_witness(make_constant_sequence(1.0), 0.01, 100);
  REQUIRE(w.found());
  CHECK(w.witness->alpha == 0.5);
  CHECK(w.witness->delta == 0.5);
  CHECK(w.witness->threshold == 1);
  CHECK(w.certificate->status == Status::verified);
}

TEST_CASE("find_witness: log_max gets a witness with log(1+alpha) < eps") {
  WitnessSearchResult w =
      find_witness(builtin_sequence("log_max"), 0.1, 2000);
  REQUIRE(w.found());
  CHECK(std::log1p(w.witness->alpha) < 0.1);
  CHECK(w.certificate->status == Status::verified);
  // Spot re-verification through the independent oracle on a sub-window.
  const double mod =
      oscillation_modulus(builtin_sequence("log_max"), w.witness->alpha,
                          w.witness->delta, w.witness->threshold, 150);
  CHECK(mod < 0.1);
}

TEST_CASE("find_witness: alternating has no witness on the grid") {
  WitnessSearchResult w = find_witness(builtin_sequence("alternating"), 1.0, 100);
  CHECK_FALSE(w.found());
  CHECK(w.to_json()["status"] == "no-witness-found-on-grid");
  CHECK(w.combos_tried > 0);
}

TEST_CASE("Example 3.1 separation at desk scale") {
  ScalarDoubleSequence lm = builtin_sequence("log_max");
  for (double eps : {1.0, 0.1, 0.01}) {
    WitnessSearchResult w = find_witness(lm, eps, 2000);
    CHECK(w.found());
  }
  for (Index n : {10, 100}) {
    CHECK(check_cauchy(lm, 1.0, n, 10 * n).status == Status::violated);
  }
}

TEST_CASE("invalid oscillation parameters are rejected") {
  ScalarDoubleSequence c = make_constant_sequence(0.0);
  CHECK_THROWS_AS(check_slowly_oscillating(c, {0.0, 0.5, 0.5, 1, 10}),
                  InvalidParamsError);
  CHECK_THROWS_AS(check_slowly_oscillating(c, {0.1, -0.5, 0.5, 1, 10}),
                  InvalidParamsError);
  CHECK_THROWS_AS(check_slowly_oscillating(c, {0.1, 0.5, 0.0, 1, 10}),
                  InvalidParamsError);
  CHECK_THROWS_AS(check_slowly_oscillating(c, {0.1, 0.5, 0.5, 0, 10}),
                  InvalidParamsError);
  CHECK_THROWS_AS(check_slowly_oscillating(c, {0.1, 0.5, 0.5, 11, 10}),
                  InvalidParamsError);
  CHECK_THROWS_AS(oscillation_modulus(c, 0.0, 0.1, 1, 10), InvalidParamsError);
}

TEST_CASE("certificate JSON carries the documented fields") {
  OscillationCertificate cert = check_slowly_oscillating(
      builtin_sequence("alternating"), {1.0, 0.5, 0.5, 4, 100});
  Json j = cert.to_json();
  for (const char* field : {"epsilon", "alpha", "delta", "threshold", "horizon",
                            "status", "counterexample", "pairs_checked"}) {
    CHECK(j.contains(field));
  }
  CHECK(Json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("oversized oscillation windows hit the cell budget") {
  setenv("DOUBLESEQ_MAX_CELLS", "10000", 1);
  OscillationCertificate cert = check_slowly_oscillating(
      make_constant_sequence(0.0), {0.1, 0.5, 0.5, 1, 500});
  CHECK(cert.status == Status::undetermined);
  unsetenv("DOUBLESEQ_MAX_CELLS");
}

TEST_CASE("block-mode scan agrees with the oracle on a structured sequence") {
  // Long windows force the block bookkeeping path; compare against the
  // quadruple loop on a sequence with mixed monotone/oscillating structure.
  ScalarDoubleSequence seq(
      "mix", [](Index k, Index l) {
        return std::log(static_cast<double>(std::max(k, l))) +
               0.03 * static_cast<double>(((k * 7 + l * 3) % 5) - 2);
      });
  for (double eps : {0.05, 0.12, 0.3, 0.7}) {
    OscillationParams p{eps, 0.9, 0.9, 1, 140};
    OscillationCertificate cert = check_slowly_oscillating(seq, p);
    const double mod = oscillation_modulus(seq, 0.9, 0.9, 1, 140);
    CHECK((cert.status == Status::verified) == (mod < eps));
    if (cert.status == Status::violated) {
      CHECK(std::fabs(seq(cert.counterexample->a) -
                      seq(cert.counterexample->b)) >= eps);
    }
  }
}
