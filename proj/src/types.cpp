#include "knotcomp/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace knotcomp {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Initial:
      return "Initial";
    case Branch::SwapBranch:
      return "SwapBranch";
    case Branch::FormingBranch:
      return "FormingBranch";
  }
  return "?";
}

std::string_view to_string(Terminal t) {
  return t == Terminal::QZero ? "QZero" : "SZero";
}

Int TLink3Params::strands() const {
  return std::max({pairs[0].p, pairs[1].p, pairs[2].p});
}

const TTLParams& validate(const TTLParams& params) {
  if (params.p < 1)
    throw ValidationError("p < 1: p = " + std::to_string(params.p));
  if (params.r < 0)
    throw ValidationError("r < 0: r = " + std::to_string(params.r));
  if (params.r > params.p)
    throw ValidationError("r > p: r = " + std::to_string(params.r) +
                          ", p = " + std::to_string(params.p));
  return params;
}

const TLink3Params& validate(const TLink3Params& params) {
  for (std::size_t i = 0; i < params.pairs.size(); ++i) {
    if (params.pairs[i].p < 1)
      throw ValidationError("p" + std::to_string(i + 1) + " < 1: p" +
                            std::to_string(i + 1) + " = " +
                            std::to_string(params.pairs[i].p));
  }
  return params;
}

void check_invariants(const ReductionState& st) {
  if (!(st.p > st.q && st.q >= 0 && st.p >= st.r && st.r > st.s && st.s >= 0))
    throw std::logic_error("reduction state (" + std::to_string(st.p) + ", " +
                           std::to_string(st.q) + ", " + std::to_string(st.r) +
                           ", " + std::to_string(st.s) +
                           ") violates p > q >= 0, p >= r > s >= 0");
}

}  // namespace knotcomp
