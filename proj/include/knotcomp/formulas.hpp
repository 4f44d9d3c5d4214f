#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "knotcomp/types.hpp"

namespace knotcomp {

/// Closed-form component counts for special families of T(p,q;r,s).
///
/// Each rule carries its own applicability predicate; callers get
/// `applicable == false` rather than an exception when the predicate fails.
enum class Rule {
  R2,      // r = 2
  GcdGeR,  // gcd(p,q) >= r
  T33a,    // s = q, r = 1, q or 2q-1 mod 2q, p != 0 mod q
  T33b,    // s = -q, r > q, p != 0 mod q
  T34a,    // s = q, [p]_q = 1, 1 <= [r]_2q <= q
  T34b,    // s = q, [p]_q = 1, q+1 <= [r]_2q <= 2q-1
  T34c,    // s = -q, [p]_q = 1, 1 < r <= q
  T35a,    // s = q, [p]_q = q-1, 1 <= [r]_2q <= q
  T35b,    // s = q, [p]_q = q-1, q+1 <= [r]_2q <= 2q-1
  T35c,    // s = -q, [p]_q = q-1, r < q
  T36a,    // [p]_q = 0
  T36b,    // [r]_2q = 0, [p]_q != 0
  T36c,    // [p]_q = [r]_2q
};

std::string_view to_string(Rule rule);

enum class TwistSign { Plus, Minus };

struct FormulaResult {
  bool applicable = false;
  Int count = 0;
  Rule rule = Rule::R2;

  static FormulaResult none(Rule rule) { return {false, 0, rule}; }
  static FormulaResult of(Rule rule, Int count) { return {true, count, rule}; }
};

/// NC(p,q;2,s). Throws ValidationError for p < 2.
FormulaResult formula_r2(Int p, Int q, Int s);

/// NC(p,q;r,s) = gcd(p,q) - r + gcd(r,s) when gcd(p,q) >= r >= 1.
FormulaResult formula_gcd_ge_r(Int p, Int q, Int r, Int s);

/// Every s = +-q sub-case whose predicate holds, in rule order.
std::vector<FormulaResult> s_eq_q_cases(Int p, Int q, Int r, TwistSign sign);

/// The s = +-q value. When several sub-cases apply they must agree; a
/// disagreement throws std::logic_error.
FormulaResult formula_s_eq_q(Int p, Int q, Int r, TwistSign sign);

}  // namespace knotcomp
