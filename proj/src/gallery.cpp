#include "doubleseq/gallery.hpp"

#include <cmath>
#include <cstdlib>

namespace doubleseq {

namespace {

bool parse_const(const std::string& name, double& out) {
  if (name == "const") {
    out = 1.0;
    return true;
  }
  if (name.rfind("const(", 0) == 0 && name.back() == ')') {
    const std::string body = name.substr(6, name.size() - 7);
    try {
      std::size_t pos = 0;
      double v = std::stod(body, &pos);
      if (pos != body.size()) return false;
      out = v;
      return true;
    } catch (...) {
      return false;
    }
  }
  return false;
}

}  // namespace

ScalarDoubleSequence make_constant_sequence(double c) {
  return ScalarDoubleSequence("const(" + std::to_string(c) + ")",
                              [c](Index, Index) { return c; });
}

BuiltinSequence builtin(const std::string& name) {
  if (name == "log_max") {
    return ScalarDoubleSequence("log_max", [](Index k, Index l) {
      return std::log(static_cast<double>(std::max(k, l)));
    });
  }
  if (name == "harmonic_sum") {
    return ScalarDoubleSequence("harmonic_sum", [](Index k, Index l) {
      return 1.0 / static_cast<double>(k + l);
    });
  }
  if (name == "alternating") {
    return ScalarDoubleSequence("alternating", [](Index k, Index l) {
      return ((k + l) % 2 == 0) ? 1.0 : -1.0;
    });
  }
  if (name == "row_spike") {
    // P-convergent to 0 on every window with threshold >= 1, yet unbounded.
    return ScalarDoubleSequence("row_spike", [](Index k, Index l) {
      return (l == 1) ? static_cast<double>(k) : 0.0;
    });
  }
  double c = 0.0;
  if (parse_const(name, c)) return make_constant_sequence(c);

  if (name == "recip_grid") {
    return FactorableGridSequence(
        "recip_grid",
        [](Index k) { return 1.0 / static_cast<double>(k); },
        [](Index l) { return 1.0 / static_cast<double>(l); },
        DomainBox::lower_open(0.0, 1.0, 0.0, 1.0));
  }
  if (name == "log_grid") {
    const double hi = 1.0 / std::log(2.0);
    return FactorableGridSequence(
        "log_grid",
        [](Index k) { return 1.0 / std::log(static_cast<double>(k + 1)); },
        [](Index l) { return 1.0 / std::log(static_cast<double>(l + 1)); },
        DomainBox::lower_open(0.0, hi, 0.0, hi));
  }
  throw UnknownNameError("unknown gallery name: " + name);
}

ScalarDoubleSequence builtin_sequence(const std::string& name) {
  BuiltinSequence b = builtin(name);
  if (auto* s = std::get_if<ScalarDoubleSequence>(&b)) return *s;
  throw UnknownNameError("gallery name '" + name +
                         "' is a grid, not a scalar sequence");
}

FactorableGridSequence builtin_grid(const std::string& name) {
  BuiltinSequence b = builtin(name);
  if (auto* g = std::get_if<FactorableGridSequence>(&b)) return *g;
  throw UnknownNameError("gallery name '" + name +
                         "' is a scalar sequence, not a grid");
}

std::vector<std::string> gallery_names() {
  return {"log_max",   "const",      "const(c)",  "harmonic_sum",
          "alternating", "row_spike", "recip_grid", "log_grid"};
}

}  // namespace doubleseq
