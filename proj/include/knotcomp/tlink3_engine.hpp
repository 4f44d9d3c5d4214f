#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "knotcomp/types.hpp"

namespace knotcomp {

/// A three-block T-link with p1 >= p2 >= p3 >= 1 and p_i > q_i >= 0.
class TLink3Standard {
 public:
  /// Throws ValidationError unless `params` is already in standard form.
  explicit TLink3Standard(const TLink3Params& params);

  const TLink3Params& params() const { return params_; }
  const BlockParams& operator[](std::size_t i) const { return params_.pairs[i]; }

  bool operator==(const TLink3Standard&) const = default;

 private:
  TLink3Params params_;
};

/// Index (0-based) of the first block whose twist vanished.
struct Terminal3 {
  std::size_t index = 0;
  bool operator==(const Terminal3&) const = default;
};

/// Rotate the block necklace (or reverse it, inverting every block) so the
/// strand counts descend, then reduce each q_i mod p_i. Among the admissible
/// candidates the lexicographically smallest is returned.
TLink3Standard standard_form(const TLink3Params& params);

/// One reduction on a standard-form T-link. The raw successor is not in
/// standard form; callers re-standardize it.
///   q1 >= p2:  (q1, -p1; p2, q2; p3, q3)
///   p2 >  q1:  (q1, p2 - p1; p2, q1 + q2; p3, q3)
std::variant<TLink3Params, Terminal3> reduce_step3(const TLink3Standard& std_form);

/// Final step when block `index` has q = 0; dispatches to the twisted torus
/// engine on the two surviving blocks.
Int terminal_count3(const TLink3Standard& std_form, std::size_t index);

struct TLink3Step {
  TLink3Params raw;
  TLink3Standard standard;
};

struct TLink3Trace {
  std::vector<TLink3Step> steps;
  Terminal3 terminal;
  Int count = 0;
};

TLink3Trace trace3(const TLink3Params& params);
Int component_count3(const TLink3Params& params);

}  // namespace knotcomp
