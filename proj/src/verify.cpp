#include "knotcomp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "knotcomp/braid.hpp"
#include "knotcomp/formulas.hpp"
#include "knotcomp/perm_oracle.hpp"
#include "knotcomp/tlink3_engine.hpp"
#include "knotcomp/ttl_engine.hpp"

namespace knotcomp {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::OracleTtl, "oracle-ttl"},
    {Suite::OracleTlink, "oracle-tlink"},
    {Suite::Lemmas, "lemmas"},
    {Suite::Formulas, "formulas"},
    {Suite::GcdDivisibility, "gcd-divisibility"},
    {Suite::KnotFamily, "knot-family"},
};

/// Per-work-unit results; merged in unit order.
struct Collector {
  std::size_t checked = 0;
  std::map<std::string, std::size_t> by_name;
  std::vector<Failure> failures;

  bool expect_eq(const std::string& check, std::vector<Int> params, Int expected,
                 Int got, std::string detail = {}) {
    ++checked;
    ++by_name[check];
    if (expected == got) return true;
    failures.push_back({check, std::move(params), expected, got, std::move(detail)});
    return false;
  }

  bool expect(const std::string& check, std::vector<Int> params, bool cond,
              std::string detail = {}) {
    return expect_eq(check, std::move(params), 1, cond ? 1 : 0, std::move(detail));
  }
};

using UnitFn = std::function<void(Int unit, Collector&)>;

/// Runs fn over units [first, last] on up to `jobs` threads.
SweepReport run_units(std::string_view suite, Int first, Int last, unsigned jobs,
                      const UnitFn& fn) {
  const Int n_units = last >= first ? last - first + 1 : 0;
  std::vector<Collector> parts(static_cast<std::size_t>(n_units));
  std::atomic<Int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (Int u; (u = next.fetch_add(1)) < n_units;) {
      try {
        fn(first + u, parts[static_cast<std::size_t>(u)]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const unsigned n_threads =
      static_cast<unsigned>(std::clamp<Int>(jobs, 1, std::max<Int>(n_units, 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.suite = std::string(suite);
  for (auto& part : parts) {
    report.checked += part.checked;
    for (const auto& [name, n] : part.by_name) report.checks_by_name[name] += n;
    std::move(part.failures.begin(), part.failures.end(),
              std::back_inserter(report.failures));
  }
  return report;
}

void merge_into(SweepReport& into, SweepReport&& from) {
  into.checked += from.checked;
  for (const auto& [name, n] : from.checks_by_name) into.checks_by_name[name] += n;
  std::move(from.failures.begin(), from.failures.end(),
            std::back_inserter(into.failures));
}

Int oracle_count(const TTLParams& t) {
  return static_cast<Int>(cycle_count(ttl_permutation(t)));
}

Int oracle_count(const TLink3Params& t) {
  return static_cast<Int>(cycle_count(tlink_permutation(t)));
}

std::vector<Int> flat(const TTLParams& t) { return {t.p, t.q, t.r, t.s}; }

std::vector<Int> flat(const TLink3Params& t) {
  return {t.pairs[0].p, t.pairs[0].q, t.pairs[1].p,
          t.pairs[1].q, t.pairs[2].p, t.pairs[2].q};
}

/// Calls fn on every tuple of the twisted torus lattice with strand count p,
/// ordered by (q, r, s).
template <typename Fn>
void for_each_ttl(Int p, Fn&& fn) {
  for (Int q = -p; q <= 2 * p; ++q)
    for (Int r = 1; r <= p; ++r)
      for (Int s = -r; s <= 2 * r; ++s) fn(TTLParams{p, q, r, s});
}

template <typename Fn>
void for_each_tlink(Int p1, Int p_max, Fn&& fn) {
  TLink3Params t;
  for (Int q1 = -p1; q1 <= p1; ++q1)
    for (Int p2 = 1; p2 <= p_max; ++p2)
      for (Int q2 = -p2; q2 <= p2; ++q2)
        for (Int p3 = 1; p3 <= p_max; ++p3)
          for (Int q3 = -p3; q3 <= p3; ++q3) {
            t.pairs = {{{p1, q1}, {p2, q2}, {p3, q3}}};
            fn(t);
          }
}

void check_trace(const TTLParams& t, Collector& c) {
  const auto tr = trace(t);
  bool ok = !tr.states.empty();
  std::string why;
  for (std::size_t i = 0; ok && i < tr.states.size(); ++i) {
    const auto& st = tr.states[i];
    if (!(st.p > st.q && st.q >= 0 && st.p >= st.r && st.r > st.s && st.s >= 0)) {
      ok = false;
      why = "state " + std::to_string(i + 1) + " breaks invariants";
    } else if (st.is_terminal() != (i + 1 == tr.states.size())) {
      ok = false;
      why = "terminal state not last";
    } else if (i + 1 < tr.states.size() && !tr.states[i + 1].is_terminal() &&
               !(tr.states[i + 1].p < st.p)) {
      ok = false;
      why = "p did not decrease after state " + std::to_string(i + 1);
    }
  }
  if (ok) {
    const auto& last = tr.states.back();
    const Int expected = last.q == 0 ? last.p - last.r + gcd_nn(last.r, last.s)
                                     : gcd_nn(last.p, last.q);
    ok = expected == tr.count &&
         tr.terminal == (last.q == 0 ? Terminal::QZero : Terminal::SZero);
    if (!ok) why = "count does not match terminal formula";
  }
  c.expect("trace-invariants", flat(t), ok, why);
}

SweepReport oracle_ttl(const SweepBounds& b) {
  return run_units("oracle-ttl", 2, b.p_max, b.jobs, [](Int p, Collector& c) {
    for_each_ttl(p, [&](const TTLParams& t) {
      const Int oracle = oracle_count(t);
      c.expect_eq("oracle", flat(t), oracle, component_count(t));
      // tau then sigma is conjugate to sigma then tau.
      const auto reversed = torus_block_perm(t.r, t.s, t.p)
                                .then(torus_block_perm(t.p, t.q, t.p));
      c.expect_eq("oracle-order", flat(t), oracle,
                  static_cast<Int>(cycle_count(reversed)));
      check_trace(t, c);
    });
  });
}

void check_tlink(const TLink3Params& t, Collector& c) {
  const Int oracle = oracle_count(t);
  const auto tr = trace3(t);
  c.expect_eq("oracle", flat(t), oracle, tr.count);

  const auto& sf = tr.steps.front().standard;
  c.expect("standard-form-idempotent", flat(t), standard_form(sf.params()) == sf);
  c.expect_eq("standard-form-count", flat(t), oracle, oracle_count(sf.params()));

  bool shrinking = true;
  for (std::size_t i = 0; i + 1 < tr.steps.size(); ++i) {
    const bool last = i + 2 == tr.steps.size();
    if (!(tr.steps[i + 1].standard.params().strands() <
          tr.steps[i].standard.params().strands()) &&
        !last)
      shrinking = false;
  }
  c.expect("termination", flat(t), shrinking);
}

SweepReport oracle_tlink(const SweepBounds& b) {
  return run_units("oracle-tlink", 1, b.tlink_p_max, b.jobs,
                   [&](Int p1, Collector& c) {
                     for_each_tlink(p1, b.tlink_p_max,
                                    [&](const TLink3Params& t) { check_tlink(t, c); });
                   });
}

void check_identity(Collector& c, const std::string& name, const TTLParams& lhs,
                    const TTLParams& rhs) {
  auto detail = "vs (" + std::to_string(rhs.p) + ", " + std::to_string(rhs.q) +
                ", " + std::to_string(rhs.r) + ", " + std::to_string(rhs.s) + ")";
  c.expect_eq(name, flat(lhs), oracle_count(lhs), oracle_count(rhs), detail);
  c.expect_eq(name + "/engine", flat(lhs), component_count(lhs),
              component_count(rhs), detail);
}

SweepReport lemmas(const SweepBounds& b) {
  auto report =
      run_units("lemmas", 2, b.p_max, b.jobs, [&](Int p, Collector& c) {
        for_each_ttl(p, [&](const TTLParams& t) {
          const auto [p_, q, r, s] = t;
          for (Int k = -1; k <= 1; ++k)
            for (Int l = -1; l <= 1; ++l)
              if (k != 0 || l != 0)
                check_identity(c, "full-twist", t, {p, q + k * p, r, s + l * r});

          check_identity(c, "mirror", t, {p, -q, r, -s});

          const Int oracle = oracle_count(t);
          if (residue(q, p) == 0)
            c.expect_eq("final-step-q", flat(t), oracle, p - r + gcd_nn(r, s));
          if (residue(s, r) == 0)
            c.expect_eq("final-step-s", flat(t), oracle, gcd_nn(p, q));

          if (p >= q && q >= r) {
            check_identity(c, "swap", t, {q, p, r, -s});
            check_identity(c, "swap", t, {q, -p, r, s});
          }
          if (r > q && q > 0) check_identity(c, "forming", t, {r, s + q, q, r - p});

          if (p <= b.shift_p_max) {
            for (Int first = 2; first <= p - r + 1; ++first) {
              const auto word = shifted_ttl_braid_word(t, first);
              c.expect_eq("shift", flat(t), oracle,
                          static_cast<Int>(cycle_count(braid_permutation(word))),
                          "twist block at generator " + std::to_string(first));
            }
          }
        });
      });

  merge_into(report, run_units("lemmas", 1, b.torus_p_max, b.jobs,
                               [](Int p, Collector& c) {
                                 for (Int q = -p; q <= 2 * p; ++q)
                                   for (Int s = -3; s <= 3; ++s)
                                     for (Int r = 0; r <= std::min<Int>(p, 1); ++r) {
                                       const TTLParams t{p, q, r, s};
                                       const Int g = gcd_nn(p, q);
                                       c.expect_eq("torus-recovery", flat(t), g,
                                                   component_count(t));
                                       c.expect_eq("torus-recovery/oracle", flat(t),
                                                   g, oracle_count(t));
                                     }
                               }));
  return report;
}

void check_formula(Collector& c, const TTLParams& t, const FormulaResult& f,
                   Int engine, Int oracle) {
  if (!f.applicable) return;
  const std::string name(to_string(f.rule));
  c.expect_eq(name, flat(t), oracle, f.count, "formula vs oracle");
  c.expect_eq(name + "/engine", flat(t), engine, f.count, "formula vs engine");
}

SweepReport formulas(const SweepBounds& b) {
  auto report =
      run_units("formulas", 2, b.p_max, b.jobs, [](Int p, Collector& c) {
        for_each_ttl(p, [&](const TTLParams& t) {
          const auto [p_, q, r, s] = t;
          const Int engine = component_count(t);
          const Int oracle = oracle_count(t);
          if (r == 2) check_formula(c, t, formula_r2(p, q, s), engine, oracle);
          check_formula(c, t, formula_gcd_ge_r(p, q, r, s), engine, oracle);
        });
        // s = +-q swept on its own: the r < q cases fall outside s in [-r, 2r].
        for (Int q = 1; q <= 2 * p; ++q)
          for (Int r = 1; r <= p; ++r)
            for (auto sign : {TwistSign::Plus, TwistSign::Minus}) {
              const TTLParams t{p, q, r, sign == TwistSign::Plus ? q : -q};
              const auto cases = s_eq_q_cases(p, q, r, sign);
              if (cases.empty()) continue;
              const Int engine = component_count(t);
              const Int oracle = oracle_count(t);
              for (const auto& f : cases) check_formula(c, t, f, engine, oracle);
            }
      });

  merge_into(report, run_units("formulas", 1, b.family_p_max, b.jobs,
                               [](Int p, Collector& c) {
                                 for (Int q = -p; q <= 2 * p; ++q)
                                   for (Int r = 1; r <= p; ++r) {
                                     if (gcd_nn(q, r) != 1) continue;
                                     const TTLParams t{p, q, r, r};
                                     c.expect_eq("ttl-rr-family", flat(t),
                                                 gcd_nn(p, q), oracle_count(t));
                                     c.expect_eq("ttl-rr-family/engine", flat(t),
                                                 gcd_nn(p, q), component_count(t));
                                   }
                               }));
  return report;
}

SweepReport gcd_divisibility(const SweepBounds& b) {
  auto report = run_units("gcd-divisibility", 2, b.p_max, b.jobs,
                          [](Int p, Collector& c) {
                            for_each_ttl(p, [&](const TTLParams& t) {
                              const Int g = gcd_nn(t.p, t.q, t.r, t.s);
                              const Int n = component_count(t);
                              c.expect("gcd-ttl", flat(t), n >= 1 && n % g == 0,
                                       "count " + std::to_string(n) + ", gcd " +
                                           std::to_string(g));
                            });
                          });
  merge_into(report,
             run_units("gcd-divisibility", 1, b.tlink_p_max, b.jobs,
                       [&](Int p1, Collector& c) {
                         for_each_tlink(p1, b.tlink_p_max, [&](const TLink3Params& t) {
                           const auto& [x, y, z] = t.pairs;
                           const Int g = gcd_nn(x.p, x.q, y.p, y.q, z.p, z.q);
                           const Int n = component_count3(t);
                           c.expect("gcd-tlink", flat(t), n >= 1 && n % g == 0,
                                    "count " + std::to_string(n) + ", gcd " +
                                        std::to_string(g));
                         });
                       }));
  return report;
}

SweepReport knot_family(const SweepBounds& b) {
  return run_units("knot-family", 1, b.n_max, b.jobs, [](Int n, Collector& c) {
    const TTLParams t{2 * n + 3, 2 * n + 2, 2 * n + 1, 2 * n};
    const Int engine = component_count(t);
    const Int oracle = oracle_count(t);
    c.expect_eq("knot-family", flat(t), 1, engine != 1 ? engine : oracle,
                engine != 1 ? "engine" : "oracle");
  });
}

}  // namespace

std::string_view to_string(Suite suite) {
  for (const auto& [s, name] : kSuiteNames)
    if (s == suite) return name;
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames)
    if (n == name) return s;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> out;
    for (const auto& entry : kSuiteNames) out.push_back(entry.first);
    return out;
  }();
  return suites;
}

std::size_t SweepReport::failures_for(std::string_view check) const {
  return static_cast<std::size_t>(std::count_if(
      failures.begin(), failures.end(),
      [&](const Failure& f) { return f.check == check; }));
}

SweepReport run_suite(Suite suite, const SweepBounds& bounds) {
  switch (suite) {
    case Suite::OracleTtl: return oracle_ttl(bounds);
    case Suite::OracleTlink: return oracle_tlink(bounds);
    case Suite::Lemmas: return lemmas(bounds);
    case Suite::Formulas: return formulas(bounds);
    case Suite::GcdDivisibility: return gcd_divisibility(bounds);
    case Suite::KnotFamily: return knot_family(bounds);
  }
  throw std::logic_error("unknown suite");
}

unsigned jobs_from_env(unsigned fallback) {
  const char* env = std::getenv("KNOTCOMP_JOBS");
  if (env == nullptr) return fallback;
  std::string_view text(env);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    return fallback;
  return value;
}

}  // namespace knotcomp
