#include "knotcomp/perm_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace knotcomp {

namespace {

void check_strand_count(Int n) {
  if (n < 1) throw ValidationError("strand count must be >= 1");
  if (n > kMaxOracleStrands)
    throw ValidationError("strand count " + std::to_string(n) +
                          " exceeds oracle limit " +
                          std::to_string(kMaxOracleStrands));
}

}  // namespace

StrandPermutation::StrandPermutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), std::size_t{0});
}

StrandPermutation::StrandPermutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    std::size_t j = images_[i];
    if (j >= images_.size() || hit[j])
      throw ValidationError("not a bijection: image " + std::to_string(j) +
                            " of strand " + std::to_string(i));
    hit[j] = true;
  }
}

StrandPermutation StrandPermutation::then(const StrandPermutation& next) const {
  if (next.size() != size())
    throw ValidationError("cannot compose permutations of different degree");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = next.images_[images_[i]];
  StrandPermutation result;
  result.images_ = std::move(out);
  return result;
}

StrandPermutation StrandPermutation::inverse() const {
  StrandPermutation result(size());
  for (std::size_t i = 0; i < size(); ++i) result.images_[images_[i]] = i;
  return result;
}

StrandPermutation torus_block_perm(Int p, Int q, Int n) {
  check_strand_count(n);
  if (p < 1) throw ValidationError("block strand count p < 1");
  if (p > n)
    throw ValidationError("block strand count p = " + std::to_string(p) +
                          " exceeds N = " + std::to_string(n));
  const Int shift = residue(q, p);
  std::vector<std::size_t> images(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) {
    Int j = i < p ? (i >= shift ? i - shift : i - shift + p) : i;
    images[static_cast<std::size_t>(i)] = static_cast<std::size_t>(j);
  }
  return StrandPermutation(std::move(images));
}

StrandPermutation ttl_permutation(const TTLParams& params) {
  validate(params);
  auto sigma = torus_block_perm(params.p, params.q, params.p);
  if (params.r == 0) return sigma;
  return sigma.then(torus_block_perm(params.r, params.s, params.p));
}

StrandPermutation tlink_permutation(const TLink3Params& params) {
  validate(params);
  const Int n = params.strands();
  auto perm = torus_block_perm(params.pairs[0].p, params.pairs[0].q, n);
  for (std::size_t i = 1; i < params.pairs.size(); ++i)
    perm = perm.then(torus_block_perm(params.pairs[i].p, params.pairs[i].q, n));
  return perm;
}

std::size_t cycle_count(const StrandPermutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = perm(i)) seen[i] = true;
  }
  return cycles;
}

ComponentPartition component_partition(const StrandPermutation& perm) {
  ComponentPartition out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.cycles.emplace_back();
    for (std::size_t i = start; !seen[i]; i = perm(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    std::sort(cycle.begin(), cycle.end());
  }
  return out;
}

}  // namespace knotcomp
