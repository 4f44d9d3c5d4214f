#include "knotcomp/formulas.hpp"

#include <stdexcept>
#include <string>

namespace knotcomp {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::R2: return "R2";
    case Rule::GcdGeR: return "GcdGeR";
    case Rule::T33a: return "T33a";
    case Rule::T33b: return "T33b";
    case Rule::T34a: return "T34a";
    case Rule::T34b: return "T34b";
    case Rule::T34c: return "T34c";
    case Rule::T35a: return "T35a";
    case Rule::T35b: return "T35b";
    case Rule::T35c: return "T35c";
    case Rule::T36a: return "T36a";
    case Rule::T36b: return "T36b";
    case Rule::T36c: return "T36c";
  }
  return "?";
}

FormulaResult formula_r2(Int p, Int q, Int s) {
  if (p < 2) throw ValidationError("r = 2 formula requires p >= 2");
  const Int g = gcd_nn(p, q);
  if (residue(s, 2) == 0) return FormulaResult::of(Rule::R2, g);
  return FormulaResult::of(Rule::R2, g == 1 ? 2 : g - 1);
}

FormulaResult formula_gcd_ge_r(Int p, Int q, Int r, Int s) {
  if (p < 1 || r < 1) return FormulaResult::none(Rule::GcdGeR);
  const Int g = gcd_nn(p, q);
  if (g < r) return FormulaResult::none(Rule::GcdGeR);
  return FormulaResult::of(Rule::GcdGeR, g - r + gcd_nn(r, residue(s, r)));
}

std::vector<FormulaResult> s_eq_q_cases(Int p, Int q, Int r, TwistSign sign) {
  std::vector<FormulaResult> out;
  if (q <= 0 || r <= 0 || p < r) return out;

  const bool plus = sign == TwistSign::Plus;
  const Int two_q = checked_mul(2, q);
  const Int q_plus_1 = checked_add(q, 1);
  const Int pq = residue(p, q);
  const Int k = residue(r, two_q);
  auto add = [&](Rule rule, Int count) {
    out.push_back(FormulaResult::of(rule, count));
  };

  if (pq != 0) {
    if (plus && (k == 1 || k == q || k == two_q - 1))
      add(Rule::T33a, gcd_nn(p, q));
    if (!plus && r > q) add(Rule::T33b, r - q + gcd_nn(q, r - p));
  }

  if (pq == 1) {
    if (plus && 1 <= k && k <= q) add(Rule::T34a, gcd_nn(k, 1 - q));
    if (plus && q + 1 <= k && k <= two_q - 1)
      add(Rule::T34b, gcd_nn(k + 2, q_plus_1));
    if (!plus && 1 < r && r <= q) add(Rule::T34c, gcd_nn(r, q_plus_1));
  }

  if (pq == q - 1) {
    if (plus && 1 <= k && k <= q) add(Rule::T35a, gcd_nn(k, q_plus_1));
    if (plus && q + 1 <= k && k <= two_q - 1)
      add(Rule::T35b, gcd_nn(k - 2, q - 1));
    if (!plus && r < q) add(Rule::T35c, gcd_nn(r, 1 - q));
  }

  if (pq == 0) {
    const Int tail = gcd_nn(k, q);
    add(Rule::T36a, plus ? checked_abs(q - k) + tail : checked_abs(r - q) + tail);
  }
  if (k == 0 && pq != 0)
    add(Rule::T36b, plus ? q + gcd_nn(q, p) : r - q + gcd_nn(q, p));
  if (pq == k) add(Rule::T36c, plus ? gcd_nn(r, two_q) : r);

  return out;
}

FormulaResult formula_s_eq_q(Int p, Int q, Int r, TwistSign sign) {
  auto cases = s_eq_q_cases(p, q, r, sign);
  if (cases.empty()) return FormulaResult::none(Rule::T33a);
  for (const auto& c : cases) {
    if (c.count != cases.front().count)
      throw std::logic_error(
          "s = +-q formulas disagree on (" + std::to_string(p) + ", " +
          std::to_string(q) + ", " + std::to_string(r) + "): " +
          std::string(to_string(cases.front().rule)) + " = " +
          std::to_string(cases.front().count) + ", " +
          std::string(to_string(c.rule)) + " = " + std::to_string(c.count));
  }
  return cases.front();
}

}  // namespace knotcomp
