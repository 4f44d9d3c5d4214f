#pragma once

#include <array>
#include <compare>
#include <string_view>
#include <vector>

#include "knotcomp/arith.hpp"

namespace knotcomp {

/// Parameters of the twisted torus link T(p,q;r,s): the closure of the
/// p-strand braid (s_1 ... s_{p-1})^q (s_1 ... s_{r-1})^s.
struct TTLParams {
  Int p = 1;
  Int q = 0;
  Int r = 0;
  Int s = 0;

  auto operator<=>(const TTLParams&) const = default;
};

/// Which rule produced a reduction state.
enum class Branch { Initial, SwapBranch, FormingBranch };

/// Which final-step formula closed a reduction.
enum class Terminal { QZero, SZero };

std::string_view to_string(Branch b);
std::string_view to_string(Terminal t);

/// One quadruple of the reduction sequence.
/// Invariants: p > q >= 0 and p >= r > s >= 0.
struct ReductionState {
  Int p = 1;
  Int q = 0;
  Int r = 1;
  Int s = 0;
  Branch branch = Branch::Initial;

  bool operator==(const ReductionState&) const = default;

  TTLParams params() const { return {p, q, r, s}; }
  bool is_terminal() const { return q == 0 || s == 0; }
};

struct ReductionTrace {
  std::vector<ReductionState> states;
  Terminal terminal = Terminal::QZero;
  Int count = 0;
};

/// One block (s_1 ... s_{p-1})^q of a T-link.
struct BlockParams {
  Int p = 1;
  Int q = 0;

  auto operator<=>(const BlockParams&) const = default;
};

/// Generalized T-link T(p1,q1;p2,q2;p3,q3) on max(p_i) strands.
struct TLink3Params {
  std::array<BlockParams, 3> pairs{};

  auto operator<=>(const TLink3Params&) const = default;

  Int strands() const;
};

/// Returns `params` if p >= 1 and 0 <= r <= p; throws ValidationError naming
/// the offending field otherwise.
const TTLParams& validate(const TTLParams& params);
const TLink3Params& validate(const TLink3Params& params);

/// Throws std::logic_error if `state` breaks the reduction invariants.
void check_invariants(const ReductionState& state);

}  // namespace knotcomp
