#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "knotcomp/types.hpp"

namespace knotcomp {

/// Brute-force component counting: a braid closure has one component per
/// cycle of the permutation carrying each strand's top position to its bottom
/// position. Independent of the reduction engines.

/// Largest strand count the oracle will materialize.
inline constexpr Int kMaxOracleStrands = Int{1} << 24;

/// A bijection on {0, ..., N-1}; images()[i] is where strand i ends up.
class StrandPermutation {
 public:
  /// Identity on n strands.
  explicit StrandPermutation(std::size_t n = 0);
  /// Throws ValidationError unless `images` is a bijection on its index set.
  explicit StrandPermutation(std::vector<std::size_t> images);

  std::size_t size() const { return images_.size(); }
  std::span<const std::size_t> images() const { return images_; }
  std::size_t operator()(std::size_t i) const { return images_[i]; }

  /// Apply *this first, then `next`: i -> next(this(i)).
  StrandPermutation then(const StrandPermutation& next) const;
  StrandPermutation inverse() const;

  bool operator==(const StrandPermutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

/// Disjoint cycles, each sorted ascending, ordered by smallest element.
struct ComponentPartition {
  std::vector<std::vector<std::size_t>> cycles;

  bool operator==(const ComponentPartition&) const = default;
};

/// i -> [i - q]_p for i < p, identity on p..n-1. The strand map of the block
/// (s_1 ... s_{p-1})^q.
StrandPermutation torus_block_perm(Int p, Int q, Int n);

/// sigma(i) = [i - q]_p followed by tau(i) = [i - s]_r on i < r.
StrandPermutation ttl_permutation(const TTLParams& params);

/// The three block maps on max(p_i) strands, first block applied first.
StrandPermutation tlink_permutation(const TLink3Params& params);

std::size_t cycle_count(const StrandPermutation& perm);
ComponentPartition component_partition(const StrandPermutation& perm);

}  // namespace knotcomp
