#pragma once

#include <variant>

#include "knotcomp/types.hpp"

namespace knotcomp {

/// Euclidean-style reduction of a twisted torus link to one whose component
/// count is given by a final-step formula.
///
/// Starting from (p, [q]_p, r, [s]_r), each non-terminal state is replaced by
///
///   q >= r:  (q, [p]_q, r, [-s]_r)          swap p and q
///   q <  r:  (r, [s + q]_r, q, [r - p]_q)   re-form the braid on r strands
///
/// until q = 0 or s = 0. Every state in the sequence has the same number of
/// components, and p strictly decreases between non-terminal states.

/// (p, [q]_p, r, [s]_r). Requires r >= 1.
ReductionState normalize(const TTLParams& params);

/// The successor of `state`, or the terminal rule when q = 0 or s = 0. QZero
/// takes precedence when both vanish (the two formulas then agree).
std::variant<ReductionState, Terminal> reduce_step(const ReductionState& state);

/// Final-step formula: p - r + gcd(r, s) when q = 0, else gcd(p, q).
Int terminal_count(const ReductionState& state);

/// The full reduction sequence. Requires r >= 1.
ReductionTrace trace(const TTLParams& params);

/// Number of components NC(p,q;r,s). r = 0 and r = 1 reduce to the torus link
/// T(p,q), which has gcd(p, q) components with gcd(p, 0) = p.
Int component_count(const TTLParams& params);

}  // namespace knotcomp
