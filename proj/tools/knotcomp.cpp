// knotcomp: component counts of twisted torus links and three-block T-links.
//
//   knotcomp nc 5 4 3 2
//   knotcomp trace 9 6 7 4 --json
//   knotcomp oracle tlink 4 2 3 1 2 1
//   knotcomp braid ttl 3 -1 2 0
//   knotcomp verify oracle-ttl --p-max 10 --jobs 4 --format csv
//
// Exit codes: 0 ok, 2 usage or invalid parameters, 3 arithmetic overflow,
// 4 verification failures.

#include <charconv>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "knotcomp/braid.hpp"
#include "knotcomp/io.hpp"
#include "knotcomp/perm_oracle.hpp"
#include "knotcomp/tlink3_engine.hpp"
#include "knotcomp/ttl_engine.hpp"
#include "knotcomp/verify.hpp"

namespace {

using knotcomp::Int;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitVerifyFailed = 4;

Int parse_int(const std::string& text) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw knotcomp::OverflowError("integer out of 64-bit range: " + text);
  if (ec != std::errc{} || ptr != last || first == last)
    throw knotcomp::ValidationError("not an integer: '" + text + "'");
  return value;
}

std::vector<Int> parse_ints(const std::vector<std::string>& args,
                            std::size_t expected, const std::string& what) {
  if (args.size() != expected)
    throw knotcomp::ValidationError(what + " takes " + std::to_string(expected) +
                                    " integers, got " + std::to_string(args.size()));
  std::vector<Int> out;
  for (const auto& a : args) out.push_back(parse_int(a));
  return out;
}

knotcomp::TTLParams ttl_args(const std::vector<std::string>& args) {
  auto v = parse_ints(args, 4, "a twisted torus link (p q r s)");
  return knotcomp::validate(knotcomp::TTLParams{v[0], v[1], v[2], v[3]});
}

knotcomp::TLink3Params tlink_args(const std::vector<std::string>& args) {
  auto v = parse_ints(args, 6, "a T-link (p1 q1 p2 q2 p3 q3)");
  knotcomp::TLink3Params t;
  t.pairs = {{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}}};
  return knotcomp::validate(t);
}

/// First positional selects "ttl" or "tlink"; the rest are its integers.
struct LinkSpec {
  bool is_tlink = false;
  knotcomp::TTLParams ttl;
  knotcomp::TLink3Params tlink;
};

LinkSpec link_spec(const std::vector<std::string>& args) {
  if (args.empty()) throw knotcomp::ValidationError("expected 'ttl' or 'tlink'");
  std::vector<std::string> rest(args.begin() + 1, args.end());
  LinkSpec spec;
  if (args[0] == "ttl") {
    spec.ttl = ttl_args(rest);
  } else if (args[0] == "tlink") {
    spec.is_tlink = true;
    spec.tlink = tlink_args(rest);
  } else {
    throw knotcomp::ValidationError("unknown link kind '" + args[0] +
                                    "' (expected ttl or tlink)");
  }
  return spec;
}

void print(const knotcomp::Json& j) { std::cout << j.dump() << '\n'; }

int cmd_nc(const std::vector<std::string>& args, bool json) {
  const auto params = ttl_args(args);
  const Int count = knotcomp::component_count(params);
  if (json)
    print({{"params", knotcomp::to_json(params)}, {"count", count}});
  else
    std::cout << count << '\n';
  return kExitOk;
}

int cmd_trace(const std::vector<std::string>& args, bool json) {
  const auto params = ttl_args(args);
  const auto tr = knotcomp::trace(params);
  if (json) {
    print(knotcomp::to_json(params, tr));
    return kExitOk;
  }
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    const auto& st = tr.states[i];
    std::cout << i + 1 << '\t' << st.p << '\t' << st.q << '\t' << st.r << '\t'
              << st.s << '\t' << knotcomp::to_string(st.branch) << '\n';
  }
  std::cout << knotcomp::format_terminal(tr) << '\n';
  return kExitOk;
}

int cmd_oracle(const std::vector<std::string>& args, bool json) {
  const auto spec = link_spec(args);
  const auto perm = spec.is_tlink ? knotcomp::tlink_permutation(spec.tlink)
                                  : knotcomp::ttl_permutation(spec.ttl);
  const auto partition = knotcomp::component_partition(perm);
  const auto count = knotcomp::cycle_count(perm);
  if (json) {
    print({{"kind", spec.is_tlink ? "tlink" : "ttl"},
           {"params", spec.is_tlink ? knotcomp::to_json(spec.tlink)
                                    : knotcomp::to_json(spec.ttl)},
           {"count", count},
           {"partition", knotcomp::to_json(partition)}});
  } else {
    std::cout << count << '\n' << knotcomp::format_partition(partition) << '\n';
  }
  return kExitOk;
}

int cmd_braid(const std::vector<std::string>& args) {
  const auto spec = link_spec(args);
  const auto word = spec.is_tlink ? knotcomp::tlink_braid_word(spec.tlink)
                                  : knotcomp::ttl_braid_word(spec.ttl);
  print(knotcomp::to_json(word));
  return kExitOk;
}

int cmd_verify(const std::string& suite_name, knotcomp::SweepBounds bounds,
               const std::string& format) {
  const auto suite = knotcomp::parse_suite(suite_name);
  if (!suite) throw knotcomp::ValidationError("unknown suite '" + suite_name + "'");
  const auto report = knotcomp::run_suite(*suite, bounds);
  if (format == "json") {
    print(knotcomp::to_json(report));
  } else if (format == "csv") {
    knotcomp::write_csv(std::cout, report);
  } else {
    std::cout << report.suite << ": " << report.checked << " checks, "
              << report.failures.size() << " failures\n";
    for (const auto& f : report.failures) {
      std::cout << "  FAIL " << f.check << " (";
      for (std::size_t i = 0; i < f.params.size(); ++i)
        std::cout << (i ? ", " : "") << f.params[i];
      std::cout << ") expected " << f.expected << " got " << f.got;
      if (!f.detail.empty()) std::cout << " [" << f.detail << ']';
      std::cout << '\n';
    }
  }
  std::cerr << report.suite << ": " << report.checked << " checks, "
            << report.failures.size() << " failures\n";
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Component counts of twisted torus links T(p,q;r,s) and "
               "three-block T-links"};
  app.require_subcommand(1);

  bool json = false;
  std::vector<std::string> args;

  auto* nc = app.add_subcommand("nc", "Number of components of T(p,q;r,s)");
  nc->add_option("params", args, "p q r s")->required()->expected(4);
  nc->add_flag("--json", json, "Emit JSON");

  auto* tr = app.add_subcommand("trace", "Reduction sequence for T(p,q;r,s), r >= 1");
  tr->add_option("params", args, "p q r s")->required()->expected(4);
  tr->add_flag("--json", json, "Emit JSON");

  auto* orc = app.add_subcommand(
      "oracle", "Cycle count and partition of the strand permutation "
                "(ttl p q r s | tlink p1 q1 p2 q2 p3 q3)");
  orc->add_option("link", args)->required()->expected(5, 7);
  orc->add_flag("--json", json, "Emit JSON");

  auto* br = app.add_subcommand(
      "braid", "Braid word as JSON (ttl p q r s | tlink p1 q1 p2 q2 p3 q3)");
  br->add_option("link", args)->required()->expected(5, 7);

  std::string suite;
  std::string format = "text";
  knotcomp::SweepBounds bounds;
  bounds.jobs = knotcomp::jobs_from_env(1);
  auto* vf = app.add_subcommand("verify", "Exhaustive verification sweep");
  vf->add_option("suite", suite,
                 "oracle-ttl | oracle-tlink | lemmas | formulas | "
                 "gcd-divisibility | knot-family")
      ->required();
  vf->add_option("--p-max", bounds.p_max, "Twisted torus sweep: largest p")
      ->check(CLI::Range(Int{2}, Int{1000}));
  vf->add_option("--tlink-p-max", bounds.tlink_p_max, "T-link sweep: largest p_i")
      ->check(CLI::Range(Int{1}, Int{100}));
  vf->add_option("--n-max", bounds.n_max, "Knot family: largest n")
      ->check(CLI::Range(Int{1}, Int{1000000}));
  vf->add_option("--torus-p-max", bounds.torus_p_max, "Torus recovery: largest p")
      ->check(CLI::Range(Int{1}, Int{1000}));
  vf->add_option("--family-p-max", bounds.family_p_max,
                 "T(p,q;r,r) family: largest p")
      ->check(CLI::Range(Int{1}, Int{1000}));
  vf->add_option("--shift-p-max", bounds.shift_p_max,
                 "Twist-block shift identity: largest p")
      ->check(CLI::Range(Int{0}, Int{100}));
  vf->add_option("--jobs", bounds.jobs, "Worker threads (default $KNOTCOMP_JOBS or 1)")
      ->check(CLI::Range(1u, 4096u));
  vf->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (nc->parsed()) return cmd_nc(args, json);
    if (tr->parsed()) return cmd_trace(args, json);
    if (orc->parsed()) return cmd_oracle(args, json);
    if (br->parsed()) return cmd_braid(args);
    if (vf->parsed()) return cmd_verify(suite, bounds, format);
  } catch (const knotcomp::OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const knotcomp::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
