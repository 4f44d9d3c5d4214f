#include "knotcomp/ttl_engine.hpp"

#include <stdexcept>
#include <string>

namespace knotcomp {

ReductionState normalize(const TTLParams& params) {
  validate(params);
  if (params.r < 1)
    throw ValidationError("reduction requires r >= 1: r = " +
                          std::to_string(params.r));
  ReductionState st{params.p, residue(params.q, params.p), params.r,
                    residue(params.s, params.r), Branch::Initial};
  check_invariants(st);
  return st;
}

std::variant<ReductionState, Terminal> reduce_step(const ReductionState& st) {
  check_invariants(st);
  if (st.q == 0) return Terminal::QZero;
  if (st.s == 0) return Terminal::SZero;

  ReductionState next;
  if (st.q >= st.r) {
    next = {st.q, residue(st.p, st.q), st.r, residue(-st.s, st.r),
            Branch::SwapBranch};
  } else {
    // 0 < q < r <= p, so every sum below is bounded by 2p.
    next = {st.r, residue(st.s + st.q, st.r), st.q, residue(st.r - st.p, st.q),
            Branch::FormingBranch};
  }
  check_invariants(next);
  return next;
}

Int terminal_count(const ReductionState& st) {
  check_invariants(st);
  if (st.q == 0) return st.p - st.r + gcd_nn(st.r, st.s);
  if (st.s == 0) return gcd_nn(st.p, st.q);
  throw std::logic_error("terminal_count called on non-terminal state");
}

ReductionTrace trace(const TTLParams& params) {
  ReductionTrace out;
  out.states.push_back(normalize(params));
  for (;;) {
    auto step = reduce_step(out.states.back());
    if (auto* t = std::get_if<Terminal>(&step)) {
      out.terminal = *t;
      break;
    }
    out.states.push_back(std::get<ReductionState>(step));
  }
  out.count = terminal_count(out.states.back());
  return out;
}

Int component_count(const TTLParams& params) {
  validate(params);
  if (params.r <= 1) return gcd_nn(params.p, residue(params.q, params.p));
  return trace(params).count;
}

}  // namespace knotcomp
