#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotcomp/types.hpp"

namespace knotcomp {

/// Exhaustive sweeps over bounded parameter lattices, cross-checking the
/// reduction engines against the permutation oracle, the component-count
/// identities, and the closed-form formulas.

enum class Suite {
  OracleTtl,
  OracleTlink,
  Lemmas,
  Formulas,
  GcdDivisibility,
  KnotFamily,
};

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

struct SweepBounds {
  /// Twisted torus sweep: p in [2, p_max], r in [1, p], q in [-p, 2p],
  /// s in [-r, 2r].
  Int p_max = 25;
  /// T-link sweep: p_i in [1, tlink_p_max], q_i in [-p_i, p_i].
  Int tlink_p_max = 10;
  /// Knot family T(2n+3, 2n+2; 2n+1, 2n), n in [1, n_max].
  Int n_max = 50;
  /// Torus-link recovery with r in {0, 1}: p in [1, torus_p_max].
  Int torus_p_max = 30;
  /// T(p,q;r,r) family: p in [1, family_p_max].
  Int family_p_max = 20;
  /// Twist-block shift identity, checked through braid words: p <= this.
  Int shift_p_max = 8;
  unsigned jobs = 1;
};

struct Failure {
  std::string check;
  std::vector<Int> params;
  Int expected = 0;
  Int got = 0;
  std::string detail;

  bool operator==(const Failure&) const = default;
};

struct SweepReport {
  std::string suite;
  std::size_t checked = 0;
  std::map<std::string, std::size_t> checks_by_name;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  /// Failures recorded under `check`.
  std::size_t failures_for(std::string_view check) const;
};

/// Runs `suite`. Work is split across `bounds.jobs` threads; the report is
/// identical for every job count.
SweepReport run_suite(Suite suite, const SweepBounds& bounds);

/// Worker count from KNOTCOMP_JOBS, or `fallback` when unset or invalid.
unsigned jobs_from_env(unsigned fallback = 1);

}  // namespace knotcomp
