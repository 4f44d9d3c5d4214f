#include "knotcomp/tlink3_engine.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "knotcomp/ttl_engine.hpp"

namespace knotcomp {

namespace {

bool descending(const TLink3Params& t) {
  return t.pairs[0].p >= t.pairs[1].p && t.pairs[1].p >= t.pairs[2].p;
}

bool is_standard(const TLink3Params& t) {
  if (!descending(t)) return false;
  for (const auto& b : t.pairs)
    if (b.p < 1 || b.q < 0 || b.q >= b.p) return false;
  return true;
}

TLink3Params rotate(const TLink3Params& t, std::size_t k) {
  TLink3Params out;
  for (std::size_t i = 0; i < 3; ++i) out.pairs[i] = t.pairs[(i + k) % 3];
  return out;
}

}  // namespace

TLink3Standard::TLink3Standard(const TLink3Params& params) : params_(params) {
  if (!is_standard(params))
    throw ValidationError("T-link is not in standard form");
}

TLink3Standard standard_form(const TLink3Params& params) {
  validate(params);

  // The inverse braid word reverses the blocks and inverts each crossing.
  TLink3Params inverted;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& b = params.pairs[2 - i];
    inverted.pairs[i] = {b.p, checked_neg(b.q)};
  }

  std::optional<TLink3Params> best;
  const std::array<const TLink3Params*, 2> bases{&params, &inverted};
  for (const TLink3Params* base : bases) {
    for (std::size_t k = 0; k < 3; ++k) {
      TLink3Params cand = rotate(*base, k);
      if (!descending(cand)) continue;
      for (auto& b : cand.pairs) b.q = residue(b.q, b.p);
      if (!best || cand < *best) best = cand;
    }
  }
  // Some rotation of three beads is either ascending or descending.
  if (!best) throw std::logic_error("no descending necklace candidate");
  return TLink3Standard(*best);
}

std::variant<TLink3Params, Terminal3> reduce_step3(const TLink3Standard& sf) {
  for (std::size_t i = 0; i < 3; ++i)
    if (sf[i].q == 0) return Terminal3{i};

  const auto& [p1, q1] = sf[0];
  const auto& [p2, q2] = sf[1];
  const auto& [p3, q3] = sf[2];
  TLink3Params next;
  if (q1 >= p2)
    next.pairs = {{{q1, -p1}, {p2, q2}, {p3, q3}}};
  else
    next.pairs = {{{q1, p2 - p1}, {p2, q1 + q2}, {p3, q3}}};
  return next;
}

Int terminal_count3(const TLink3Standard& sf, std::size_t index) {
  if (index > 2 || sf[index].q != 0)
    throw std::logic_error("terminal_count3: block " + std::to_string(index) +
                           " has nonzero twist");
  const auto& b1 = sf[0];
  const auto& b2 = sf[1];
  const auto& b3 = sf[2];
  switch (index) {
    case 0:
      return b1.p - b2.p + component_count({b2.p, b2.q, b3.p, b3.q});
    case 1:
      return component_count({b1.p, b1.q, b3.p, b3.q});
    default:
      return component_count({b1.p, b1.q, b2.p, b2.q});
  }
}

TLink3Trace trace3(const TLink3Params& params) {
  TLink3Trace out;
  out.steps.push_back({params, standard_form(params)});
  for (;;) {
    auto step = reduce_step3(out.steps.back().standard);
    if (auto* t = std::get_if<Terminal3>(&step)) {
      out.terminal = *t;
      break;
    }
    const auto& raw = std::get<TLink3Params>(step);
    out.steps.push_back({raw, standard_form(raw)});
  }
  out.count = terminal_count3(out.steps.back().standard, out.terminal.index);
  return out;
}

Int component_count3(const TLink3Params& params) { return trace3(params).count; }

}  // namespace knotcomp
