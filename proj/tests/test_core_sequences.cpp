#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "doubleseq/checks.hpp"
#include "doubleseq/gallery.hpp"

using namespace doubleseq;

TEST_CASE("eval reads entries directly") {
  ScalarDoubleSequence log_max = builtin_sequence("log_max");
  CHECK(eval(log_max, {2, 3}) == std::log(3.0));
  CHECK(eval(log_max, {2, 3}) == doctest::Approx(1.0986).epsilon(1e-3));
  CHECK(eval(log_max, {1, 1}) == 0.0);
  ScalarDoubleSequence five = make_constant_sequence(5.0);
  CHECK(eval(five, {7, 9}) == 5.0);
  CHECK_THROWS_AS(eval(five, {0, 3}), InvalidParamsError);
}

TEST_CASE("gallery names resolve and unknown names are rejected") {
  CHECK_NOTHROW(builtin("log_max"));
  CHECK_NOTHROW(builtin("harmonic_sum"));
  CHECK_NOTHROW(builtin("alternating"));
  CHECK_NOTHROW(builtin("row_spike"));
  CHECK_NOTHROW(builtin("const(2.5)"));
  CHECK_NOTHROW(builtin("recip_grid"));
  CHECK_NOTHROW(builtin("log_grid"));
  CHECK_THROWS_AS(builtin("no_such_sequence"), UnknownNameError);
  CHECK_THROWS_AS(builtin_sequence("recip_grid"), UnknownNameError);
  CHECK_THROWS_AS(builtin_grid("log_max"), UnknownNameError);
  ScalarDoubleSequence c = builtin_sequence("const(2.5)");
  CHECK(c(3, 4) == 2.5);
}

TEST_CASE("log_max matches the row display: row 3 reads s3 s3 s3 s4") {
  ScalarDoubleSequence s = builtin_sequence("log_max");
  CHECK(s(3, 1) == std::log(3.0));
  CHECK(s(3, 2) == std::log(3.0));
  CHECK(s(3, 3) == std::log(3.0));
  CHECK(s(3, 4) == std::log(4.0));
}

TEST_CASE("check_cauchy: constant sequences are trivially Cauchy") {
  ConvergenceReport r =
      check_cauchy(make_constant_sequence(3.0), 1e-9, 1, 50);
  CHECK(r.status == Status::verified);
  CHECK_FALSE(r.counterexample.has_value());
}

TEST_CASE("check_cauchy: log_max violated with a self-evident quadruple") {
  ScalarDoubleSequence s = builtin_sequence("log_max");
  ConvergenceReport r = check_cauchy(s, 0.5, 10, 100);
  REQUIRE(r.status == Status::violated);
  REQUIRE(r.counterexample.has_value());
  const CounterexamplePair& ce = *r.counterexample;
  // Canonical: lexicographically smallest violating (k,l,s,t).
  CHECK(ce.a.k == 11);
  CHECK(ce.a.l == 11);
  CHECK(ce.b.k == 11);
  CHECK(ce.b.l == 19);
  // Re-evaluating the counterexample reproduces the inequality exactly.
  CHECK(std::fabs(s(ce.a) - s(ce.b)) >= 0.5);
  CHECK(s(ce.a) == ce.value_a[0]);
  CHECK(s(ce.b) == ce.value_b[0]);
}

TEST_CASE("check_cauchy: 1/(k+l) settles below 0.1 past N=20") {
  ConvergenceReport r =
      check_cauchy(builtin_sequence("harmonic_sum"), 0.1, 20, 1000);
  CHECK(r.status == Status::verified);
}

TEST_CASE("check_cauchy rejects an empty window") {
  CHECK_THROWS_AS(check_cauchy(make_constant_sequence(0.0), 0.1, 10, 10),
                  InvalidWindowError);
  CHECK_THROWS_AS(check_cauchy(make_constant_sequence(0.0), 0.1, 10, 5),
                  InvalidWindowError);
}

TEST_CASE("check_pringsheim examples") {
  ConvergenceReport c =
      check_pringsheim(make_constant_sequence(7.0), 7.0, 1e-12, 1, 100);
  CHECK(c.status == Status::verified);

  ConvergenceReport h =
      check_pringsheim(builtin_sequence("harmonic_sum"), 0.0, 0.01, 200, 10000);
  CHECK(h.status == Status::verified);

  ScalarDoubleSequence s = builtin_sequence("log_max");
  ConvergenceReport r = check_pringsheim(s, 3.0, 1.0, 10, 10000);
  REQUIRE(r.status == Status::violated);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->a.k == 11);
  CHECK(r.counterexample->a.l == 55);
  CHECK(std::fabs(s(r.counterexample->a) - 3.0) >= 1.0);
}

TEST_CASE("estimate_pringsheim_limit classifies the gallery") {
  ScalarDoubleSequence h = builtin_sequence("harmonic_sum");
  ConvergenceReport hr = estimate_pringsheim_limit(h, 0.01, 10000);
  CHECK(hr.status == Status::verified);
  REQUIRE(hr.limit.has_value());
  CHECK(std::fabs(*hr.limit) <= 0.01);
  CHECK(hr.threshold == 64);

  ConvergenceReport lr =
      estimate_pringsheim_limit(builtin_sequence("log_max"), 0.5, 10000);
  CHECK(lr.status == Status::definitely_divergent);
  CHECK(lr.threshold == 8);

  ConvergenceReport ar =
      estimate_pringsheim_limit(builtin_sequence("alternating"), 0.5, 100);
  CHECK(ar.status == Status::undetermined);
}

TEST_CASE("check_definitely_divergent examples") {
  ConvergenceReport lm = check_definitely_divergent(
      builtin_sequence("log_max"), DivergenceParams{2.0, 8, 8, 100});
  CHECK(lm.status == Status::verified);

  ConvergenceReport cz = check_definitely_divergent(
      make_constant_sequence(0.0), DivergenceParams{1.0, 1, 1, 50});
  CHECK(cz.status == Status::violated);

  ConvergenceReport rs = check_definitely_divergent(
      builtin_sequence("row_spike"), DivergenceParams{1.0, 1, 1, 100});
  REQUIRE(rs.status == Status::violated);
  CHECK(rs.counterexample->a.k == 2);
  CHECK(rs.counterexample->a.l == 2);

  CHECK_THROWS_AS(check_definitely_divergent(make_constant_sequence(0.0),
                                             DivergenceParams{1.0, 5, 5, 5}),
                  InvalidWindowError);
}

TEST_CASE("check_bounded examples") {
  CHECK(check_bounded(make_constant_sequence(3.0), 4.0, 100).status ==
        Status::verified);

  ConvergenceReport rs = check_bounded(builtin_sequence("row_spike"), 50.0, 100);
  REQUIRE(rs.status == Status::violated);
  CHECK(rs.counterexample->a.k == 50);  // x_{50,1} = 50 is not < 50
  CHECK(rs.counterexample->a.l == 1);

  CHECK(check_bounded(builtin_sequence("log_max"), 10.0, 1000).status ==
        Status::verified);
}

TEST_CASE("row_spike: P-convergent on windows yet unbounded") {
  ScalarDoubleSequence rs = builtin_sequence("row_spike");
  for (Index h : {10, 40, 100}) {
    CHECK(check_pringsheim(rs, 0.0, 0.1, 1, h).status == Status::verified);
    CHECK(check_pringsheim(rs, 0.0, 1e-9, 1, h).status == Status::verified);
    CHECK(check_bounded(rs, static_cast<double>(h), h).status ==
          Status::violated);
  }
  CHECK(check_pringsheim(rs, 0.0, 0.1, 10, 100).status == Status::verified);
  CHECK(check_bounded(rs, 50.0, 100).status == Status::violated);
}

TEST_CASE("Cauchy window implies Pringsheim stability at the corner value") {
  std::mt19937_64 rng(7);
  auto pick = [&rng](Index lo, Index hi) {
    return lo + static_cast<Index>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const char* names[] = {"harmonic_sum", "log_max", "const(2.0)", "alternating"};
  int cauchy_hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ScalarDoubleSequence s = builtin_sequence(names[trial % 4]);
    const Index n = pick(1, 40);
    const Index h = n + pick(2, 60);
    const double eps = 0.05 * static_cast<double>(pick(1, 40));
    ConvergenceReport cy = check_cauchy(s, eps, n, h);
    if (cy.status != Status::verified) continue;
    ++cauchy_hits;
    ConvergenceReport pr = check_pringsheim(s, s(h, h), 2.0 * eps, n, h);
    CHECK(pr.status == Status::verified);
  }
  CHECK(cauchy_hits > 10);  // the sample must actually exercise the property
}

TEST_CASE("window scans are deterministic over repeated runs") {
  ScalarDoubleSequence s = builtin_sequence("log_max");
  ConvergenceReport a = check_cauchy(s, 0.5, 10, 100);
  ConvergenceReport b = check_cauchy(s, 0.5, 10, 100);
  CHECK(a.to_json().dump() == b.to_json().dump());

  ConvergenceReport e1 = estimate_pringsheim_limit(s, 0.5, 500);
  ConvergenceReport e2 = estimate_pringsheim_limit(s, 0.5, 500);
  CHECK(e1.to_json().dump() == e2.to_json().dump());
}

TEST_CASE("cell budget turns oversized windows into undetermined reports") {
  // 40000^2 > 10^9 cells? No: 1.6e9 > budget 10^9.
  setenv("DOUBLESEQ_MAX_CELLS", "1000000", 1);
  ConvergenceReport r =
      check_cauchy(make_constant_sequence(0.0), 0.1, 1, 2000);
  CHECK(r.status == Status::undetermined);
  unsetenv("DOUBLESEQ_MAX_CELLS");
  ConvergenceReport ok =
      check_cauchy(make_constant_sequence(0.0), 0.1, 1, 2000);
  CHECK(ok.status == Status::verified);
}

TEST_CASE("report JSON has the documented shape and round-trips") {
  ScalarDoubleSequence s = builtin_sequence("log_max");
  ConvergenceReport r = check_cauchy(s, 0.5, 10, 100);
  Json j = r.to_json();
  CHECK(j.contains("status"));
  CHECK(j.contains("limit"));
  CHECK(j.contains("epsilon"));
  CHECK(j.contains("threshold"));
  CHECK(j.contains("horizon"));
  CHECK(j.contains("counterexample"));
  CHECK(j["counterexample"].is_array());
  CHECK(j["counterexample"].size() == 5);
  const std::string dumped = j.dump();
  CHECK(Json::parse(dumped).dump() == dumped);
}
