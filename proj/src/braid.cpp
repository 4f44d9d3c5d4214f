#include "knotcomp/braid.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace knotcomp {

void append_block(BraidWord& word, Int first, Int width, Int exponent) {
  const Int block_len = width - 1;
  if (block_len <= 0 || exponent == 0) return;
  const Int reps = checked_abs(exponent);
  const Int total =
      checked_add(static_cast<Int>(word.letters.size()), checked_mul(reps, block_len));
  if (total > kMaxBraidLetters)
    throw ValidationError("braid word would have " + std::to_string(total) +
                          " letters (limit " + std::to_string(kMaxBraidLetters) +
                          ")");
  word.letters.reserve(static_cast<std::size_t>(total));
  const Int last = first + block_len - 1;
  for (Int rep = 0; rep < reps; ++rep) {
    if (exponent > 0)
      for (Int k = first; k <= last; ++k) word.letters.push_back(k);
    else
      for (Int k = last; k >= first; --k) word.letters.push_back(-k);
  }
}

BraidWord shifted_ttl_braid_word(const TTLParams& params, Int first) {
  validate(params);
  if (params.p > kMaxOracleStrands)
    throw ValidationError("strand count " + std::to_string(params.p) +
                          " exceeds limit " + std::to_string(kMaxOracleStrands));
  if (first < 1 || (params.r > 0 && first > params.p - params.r + 1))
    throw ValidationError("twist block start " + std::to_string(first) +
                          " out of range");
  BraidWord word{params.p, {}};
  append_block(word, 1, params.p, params.q);
  append_block(word, first, params.r, params.s);
  return word;
}

BraidWord ttl_braid_word(const TTLParams& params) {
  return shifted_ttl_braid_word(params, 1);
}

BraidWord tlink_braid_word(const TLink3Params& params) {
  validate(params);
  BraidWord word{params.strands(), {}};
  if (word.strands > kMaxOracleStrands)
    throw ValidationError("strand count " + std::to_string(word.strands) +
                          " exceeds limit " + std::to_string(kMaxOracleStrands));
  for (const auto& b : params.pairs) append_block(word, 1, b.p, b.q);
  return word;
}

void validate(const BraidWord& word) {
  if (word.strands < 1 || word.strands > kMaxOracleStrands)
    throw ValidationError("invalid strand count " + std::to_string(word.strands));
  for (Int k : word.letters) {
    if (k == 0 || k == std::numeric_limits<Int>::min() ||
        checked_abs(k) > word.strands - 1)
      throw ValidationError("invalid braid letter " + std::to_string(k) +
                            " on " + std::to_string(word.strands) + " strands");
  }
}

StrandPermutation braid_permutation(const BraidWord& word) {
  validate(word);
  const auto n = static_cast<std::size_t>(word.strands);
  // at[pos] = the strand currently at position pos.
  std::vector<std::size_t> at(n);
  std::iota(at.begin(), at.end(), std::size_t{0});
  for (Int k : word.letters) {
    const auto pos = static_cast<std::size_t>(k < 0 ? -k : k);
    std::swap(at[pos - 1], at[pos]);
  }
  std::vector<std::size_t> images(n);
  for (std::size_t pos = 0; pos < n; ++pos) images[at[pos]] = pos;
  return StrandPermutation(std::move(images));
}

}  // namespace knotcomp
