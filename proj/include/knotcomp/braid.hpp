#pragma once

#include <vector>

#include "knotcomp/perm_oracle.hpp"
#include "knotcomp/types.hpp"

namespace knotcomp {

/// Letter k > 0 is the generator sigma_k, -k its inverse.
struct BraidWord {
  Int strands = 1;
  std::vector<Int> letters;

  bool operator==(const BraidWord&) const = default;
};

inline constexpr Int kMaxBraidLetters = Int{1} << 24;

/// Appends (sigma_first ... sigma_{first+width-2})^exponent. Negative
/// exponents append the inverse word (reversed, inverted letters).
void append_block(BraidWord& word, Int first, Int width, Int exponent);

/// (s_1 ... s_{p-1})^q (s_1 ... s_{r-1})^s on p strands.
BraidWord ttl_braid_word(const TTLParams& params);

/// Like ttl_braid_word, but the twist block starts at generator `first`
/// (1 <= first <= p - r + 1).
BraidWord shifted_ttl_braid_word(const TTLParams& params, Int first);

/// The three blocks on max(p_i) strands.
BraidWord tlink_braid_word(const TLink3Params& params);

/// Throws ValidationError if a letter is zero or names a missing generator.
void validate(const BraidWord& word);

/// Strand permutation of the closure: letters are read left to right, and
/// each one swaps the strands at positions |k|-1 and |k|.
StrandPermutation braid_permutation(const BraidWord& word);

}  // namespace knotcomp
