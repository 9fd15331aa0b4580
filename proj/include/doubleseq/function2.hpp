// function2.hpp — two-variable real functions over rectangular domains:
// application to grids, the interleaving construction, and sampling-based
// uniform-continuity / uniform-convergence falsifiers.
//
// The falsifiers are deterministic (seeded) samplers. They can only ever
// refute; "no violation found" is sampled evidence, never a proof.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "doubleseq/report.hpp"
#include "doubleseq/sequence.hpp"

namespace doubleseq {

/// Optional product form f(x,y) = g(x) * h(y).
struct Factorization {
  std::function<double(double)> g;
  std::function<double(double)> h;
};

class Function2 {
 public:
  using Evaluator = std::function<double(double, double)>;

  Function2(std::string label, Evaluator evaluator, DomainBox domain)
      : label_(std::move(label)),
        evaluator_(std::move(evaluator)),
        domain_(domain) {}

  double operator()(double x, double y) const { return evaluator_(x, y); }
  double operator()(Point2 p) const { return evaluator_(p.x, p.y); }

  const DomainBox& domain() const { return domain_; }
  const std::string& label() const { return label_; }

  const std::optional<Factorization>& factorization() const {
    return factorization_;
  }
  Function2& with_factorization(Factorization f) {
    factorization_ = std::move(f);
    return *this;
  }

  /// Analytic Lipschitz constant w.r.t. the planar metric, when one is known
  /// for the whole domain box.
  std::optional<double> lipschitz() const { return lipschitz_; }
  Function2& with_lipschitz(double k) {
    lipschitz_ = k;
    return *this;
  }

 private:
  std::string label_;
  Evaluator evaluator_;
  DomainBox domain_;
  std::optional<Factorization> factorization_;
  std::optional<double> lipschitz_;
};

/// Image sequence y_{k,l} = f(u_k, v_l). Lazy and pure; evaluation throws
/// DomainError (carrying the index) if a grid point escapes f's domain.
ScalarDoubleSequence apply(const Function2& f,
                           const FactorableGridSequence& grid);

/// y_{k,l} = seq((k+1)/2, (l+1)/2) when k and l are both odd, else the limit
/// value L. Rows and columns of L interleave the original entries.
ScalarDoubleSequence interleave_with_limit(const ScalarDoubleSequence& seq,
                                           double limit);

// ---------------------------------------------------------------------------
// Uniform continuity falsification.
// ---------------------------------------------------------------------------

struct ViolatingPair {
  Point2 p;
  Point2 q;
  double distance = 0.0;
  double gap = 0.0;
  double scale_delta = 0.0;  // the tested 1/n
};

struct UniformContinuityVerdict {
  bool violation_found = false;
  double epsilon = 0.0;
  /// Largest sampled scale delta = 1/n at which no pair was found.
  std::optional<double> delta_hat;
  std::optional<ViolatingPair> violating_pair;

  Json to_json() const;
};

/// Samples up to `budget` candidate pairs at planar distance < scale_delta
/// and returns the first with value gap >= epsilon, if any. Deterministic in
/// the seed; centers mix uniform and edge-biased draws.
std::optional<ViolatingPair> sample_violating_pair(const Function2& f,
                                                   double epsilon,
                                                   double scale_delta,
                                                   int budget,
                                                   std::uint64_t seed);

/// Walks scales delta = 1, 1/2, 1/4, ... For each scale it samples up to
/// pair_budget candidate pairs at planar distance < delta looking for a value
/// gap >= epsilon. The first scale with no pair found stops the walk (pairs
/// at finer scales would also satisfy the coarser distance bound):
/// no-violation-found with delta_hat = that scale. If every probed scale
/// produced a pair, the finest pair is reported as the violation.
UniformContinuityVerdict test_uniform_continuity(const Function2& f,
                                                 double epsilon,
                                                 int pair_budget = 2048,
                                                 std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Function families and uniform convergence on samples.
// ---------------------------------------------------------------------------

class FunctionFamily {
 public:
  enum class Kind { single, double_indexed };

  static FunctionFamily single(std::string label,
                               std::function<Function2(Index)> member) {
    FunctionFamily f;
    f.kind_ = Kind::single;
    f.label_ = std::move(label);
    f.member1_ = std::move(member);
    return f;
  }
  static FunctionFamily double_indexed(
      std::string label, std::function<Function2(Index, Index)> member) {
    FunctionFamily f;
    f.kind_ = Kind::double_indexed;
    f.label_ = std::move(label);
    f.member2_ = std::move(member);
    return f;
  }

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  Function2 at(Index n) const {
    if (kind_ != Kind::single)
      throw KindMismatchError("family is double-indexed");
    return member1_(n);
  }
  Function2 at(Index m, Index n) const {
    if (kind_ != Kind::double_indexed)
      throw KindMismatchError("family is single-indexed");
    return member2_(m, n);
  }

 private:
  FunctionFamily() = default;
  Kind kind_ = Kind::single;
  std::string label_;
  std::function<Function2(Index)> member1_;
  std::function<Function2(Index, Index)> member2_;
};

struct UniformConvergenceVerdict {
  bool verified_on_sample = false;
  double epsilon = 0.0;
  double sup_gap = 0.0;
  std::vector<Index> probed;  // flattened (m,n) pairs for double families
  std::optional<Index> violating_m;  // unset for single families
  std::optional<Index> violating_n;
  std::optional<Point2> violating_point;
  std::optional<double> violating_gap;

  Json to_json() const;
};

/// Estimates sup over sampled domain points of |f_n - f| for
/// n in {N, N+1, 2N, 4N}; verified-on-sample iff every estimate < epsilon.
/// Members and the limit are compared at a common point (comparing values at
/// two unrelated points would fail for every non-constant family).
UniformConvergenceVerdict check_uniform_convergence(const FunctionFamily& family,
                                                    const Function2& f,
                                                    double epsilon, Index n0,
                                                    int sample_budget = 512,
                                                    std::uint64_t seed = 1);

/// Double-indexed variant probing (m,n) in {N1, 2N1} x {N2, 2N2}.
UniformConvergenceVerdict check_uniform_convergence_double(
    const FunctionFamily& family, const Function2& f, double epsilon, Index n1,
    Index n2, int sample_budget = 512, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Gallery.
// ---------------------------------------------------------------------------

/// Named functions usable from the CLI:
///   sum          x + y        on [0,10]^2, Lipschitz 2
///   product      x * y        on [0,10]^2, Lipschitz 20
///   sin_sin      sin x sin y  on [0,10]^2, Lipschitz 2
///   const_one    1            on [0,10]^2, Lipschitz 1
///   ident_x      x            on [0,10]^2, Lipschitz 1
///   one_over_xy  1/(x*y)      on (0,1]^2, not uniformly continuous
///   sin_recip_x  sin(1/x)     on (0,1]^2, not uniformly continuous
Function2 builtin_function(const std::string& name);

std::vector<std::string> function_gallery_names();

}  // namespace doubleseq
