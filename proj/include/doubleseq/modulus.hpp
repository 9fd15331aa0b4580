// modulus.hpp — brute-force oscillation modulus (the oracle).

#pragma once

#include "doubleseq/sequence.hpp"

namespace doubleseq {

/// Supremum of |x_{k,l} - x_{s,t}| over the slow-oscillation region
/// k, l in [threshold, horizon], s in [k, floor((1+alpha)k)],
/// t in [l, floor((1+delta)l)].
///
/// Implemented as a plain quadruple loop with no shared machinery, so it can
/// serve as an independent oracle for check_slowly_oscillating:
/// verified there is equivalent to a modulus below epsilon here. Cost grows
/// like (alpha*H^2)*(delta*H^2); intended for desk-scale windows.
double oscillation_modulus(const ScalarDoubleSequence& seq, double alpha,
                           double delta, Index threshold, Index horizon);

/// Grid variant: supremum of planar distances between (u_k, v_l) and
/// (u_s, v_t) over the same region.
double oscillation_modulus(const FactorableGridSequence& grid, double alpha,
                           double delta, Index threshold, Index horizon);

}  // namespace doubleseq
