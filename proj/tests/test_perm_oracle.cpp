#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "knotcomp/perm_oracle.hpp"

using namespace knotcomp;
using Images = std::vector<std::size_t>;

namespace {

Images images_of(const StrandPermutation& perm) {
  return {perm.images().begin(), perm.images().end()};
}

TLink3Params tlink(Int p1, Int q1, Int p2, Int q2, Int p3, Int q3) {
  TLink3Params t;
  t.pairs = {{{p1, q1}, {p2, q2}, {p3, q3}}};
  return t;
}

}  // namespace

TEST(StrandPermutation, RejectsNonBijection) {
  EXPECT_THROW(StrandPermutation(Images{0, 0, 1}), ValidationError);
  EXPECT_THROW(StrandPermutation(Images{0, 3, 1}), ValidationError);
  EXPECT_NO_THROW(StrandPermutation(Images{2, 0, 1}));
}

TEST(TorusBlockPerm, Examples) {
  EXPECT_EQ(images_of(torus_block_perm(5, 4, 5)), (Images{1, 2, 3, 4, 0}));
  EXPECT_EQ(torus_block_perm(3, 0, 5), StrandPermutation(5));
  EXPECT_EQ(images_of(torus_block_perm(2, 1, 4)), (Images{1, 0, 2, 3}));
  EXPECT_EQ(torus_block_perm(4, -1, 4), torus_block_perm(4, 3, 4));
}

TEST(TorusBlockPerm, Errors) {
  EXPECT_THROW(torus_block_perm(5, 1, 4), ValidationError);
  EXPECT_THROW(torus_block_perm(0, 1, 4), ValidationError);
  EXPECT_THROW(torus_block_perm(2, 1, kMaxOracleStrands + 1), ValidationError);
}

TEST(TtlPermutation, Examples) {
  EXPECT_EQ(images_of(ttl_permutation({5, 4, 3, 2})), (Images{2, 0, 3, 4, 1}));
  for (Int p = 1; p <= 6; ++p)
    for (Int r = 0; r <= p; ++r)
      EXPECT_EQ(ttl_permutation({p, 0, r, 0}), StrandPermutation(static_cast<std::size_t>(p)));
  const auto t = ttl_permutation({4, 2, 2, 0});
  EXPECT_EQ(images_of(t), (Images{2, 3, 0, 1}));
  EXPECT_EQ(cycle_count(t), 2u);
  EXPECT_THROW(ttl_permutation({3, 1, 4, 1}), ValidationError);
}

TEST(TlinkPermutation, Examples) {
  EXPECT_EQ(images_of(tlink_permutation(tlink(4, 2, 3, 1, 2, 1))), (Images{0, 3, 2, 1}));
  EXPECT_EQ(tlink_permutation(tlink(3, 0, 2, 0, 2, 0)), StrandPermutation(3));
  for (Int p = 1; p <= 6; ++p)
    for (Int q = -p; q <= p; ++q)
      EXPECT_EQ(tlink_permutation(tlink(p, q, 1, 0, 1, 0)), torus_block_perm(p, q, p));
}

TEST(CycleCount, Examples) {
  EXPECT_EQ(cycle_count(StrandPermutation(5)), 5u);
  EXPECT_EQ(cycle_count(StrandPermutation(Images{1, 2, 3, 4, 0})), 1u);
  EXPECT_EQ(cycle_count(ttl_permutation({9, 6, 7, 4})), 3u);
  EXPECT_EQ(cycle_count(StrandPermutation(0)), 0u);
}

TEST(ComponentPartition, Examples) {
  using Cycles = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(component_partition(StrandPermutation(3)).cycles, (Cycles{{0}, {1}, {2}}));
  EXPECT_EQ(component_partition(StrandPermutation(Images{1, 0, 2})).cycles,
            (Cycles{{0, 1}, {2}}));
  EXPECT_EQ(component_partition(ttl_permutation({5, 4, 3, 2})).cycles,
            (Cycles{{0, 1, 2, 3, 4}}));
  EXPECT_EQ(component_partition(tlink_permutation(tlink(4, 2, 3, 1, 2, 1))).cycles,
            (Cycles{{0}, {1, 3}, {2}}));
}

TEST(ComponentPartition, CoversEveryStrandOnce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Images img(1 + trial % 23);
    std::iota(img.begin(), img.end(), std::size_t{0});
    std::shuffle(img.begin(), img.end(), rng);
    const StrandPermutation perm(img);
    const auto part = component_partition(perm);
    ASSERT_EQ(part.cycles.size(), cycle_count(perm));
    std::set<std::size_t> seen;
    for (const auto& c : part.cycles) {
      ASSERT_FALSE(c.empty());
      for (auto i : c) ASSERT_TRUE(seen.insert(i).second);
    }
    ASSERT_EQ(seen.size(), img.size());
  }
}

TEST(CycleCount, InvariantUnderInverseAndConjugation) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 19;
    Images a(n), b(n);
    std::iota(a.begin(), a.end(), std::size_t{0});
    std::iota(b.begin(), b.end(), std::size_t{0});
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const StrandPermutation pa(a), pb(b);
    ASSERT_EQ(cycle_count(pa), cycle_count(pa.inverse()));
    ASSERT_EQ(pa.then(pa.inverse()), StrandPermutation(n));
    ASSERT_EQ(cycle_count(pa.then(pb)), cycle_count(pb.then(pa)));
    ASSERT_EQ(cycle_count(pb.inverse().then(pa).then(pb)), cycle_count(pa));
  }
}

TEST(CycleCount, TorusLinkIsGcd) {
  for (Int p = 1; p <= 30; ++p)
    for (Int q = -2 * p; q <= 2 * p; ++q)
      ASSERT_EQ(static_cast<Int>(cycle_count(torus_block_perm(p, q, p))),
                gcd_nn(p, residue(q, p)));
}

TEST(TtlPermutation, AgreesWithBraidExpansion) {
  for (Int p = 1; p <= 9; ++p)
    for (Int q = -p; q <= 2 * p; ++q)
      for (Int r = 0; r <= p; ++r)
        for (Int s = -r; s <= 2 * r; ++s)
          ASSERT_EQ(images_of(ttl_permutation({p, q, r, s})),
                    knotcomp::testing::brute_images(p, {{p, q}, {r, s}}));
}
