// gallery.hpp — builtin sequences and grids addressable by stable names.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "doubleseq/sequence.hpp"

namespace doubleseq {

using BuiltinSequence = std::variant<ScalarDoubleSequence, FactorableGridSequence>;

/// Looks up a gallery entry by name. Scalar sequences:
///   log_max       x_{k,l} = ln(max(k,l))
///   const         constant 1; "const(c)" selects the constant
///   harmonic_sum  x_{k,l} = 1/(k+l)
///   alternating   x_{k,l} = (-1)^{k+l}
///   row_spike     x_{k,1} = k, x_{k,l} = 0 for l >= 2
/// Grids:
///   recip_grid    u_k = 1/k, v_l = 1/l on (0,1] x (0,1]
///   log_grid      u_k = v_k = 1/ln(k+1)
/// Throws UnknownNameError for anything else.
BuiltinSequence builtin(const std::string& name);

/// As builtin(), but requires a scalar sequence.
ScalarDoubleSequence builtin_sequence(const std::string& name);

/// As builtin(), but requires a grid.
FactorableGridSequence builtin_grid(const std::string& name);

ScalarDoubleSequence make_constant_sequence(double c);

/// All gallery names, for diagnostics and CLI help.
std::vector<std::string> gallery_names();

}  // namespace doubleseq
