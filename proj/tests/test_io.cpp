#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "knotcomp/io.hpp"
#include "knotcomp/ttl_engine.hpp"

using namespace knotcomp;

TEST(Io, TraceJsonRoundTrips) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> any(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int trial = 0; trial < 500; ++trial) {
    const Int p = 1 + std::abs(any(rng)) % 1'000'000'000'000LL;
    const Int r = 1 + std::abs(any(rng)) % p;
    const TTLParams t{p, any(rng), r, any(rng)};
    const auto tr = trace(t);
    const auto text = to_json(t, tr).dump();
    const auto back = Json::parse(text);
    ASSERT_EQ(ttl_params_from_json(back.at("params")), t);
    const auto tr2 = trace_from_json(back);
    ASSERT_EQ(tr2.states, tr.states);
    ASSERT_EQ(tr2.terminal, tr.terminal);
    ASSERT_EQ(tr2.count, tr.count);
  }
}

TEST(Io, TraceJsonFieldNames) {
  const auto j = to_json(TTLParams{5, 4, 3, 2}, trace({5, 4, 3, 2}));
  EXPECT_EQ(j.dump(),
            R"({"params":{"p":5,"q":4,"r":3,"s":2},"trace":[)"
            R"({"i":1,"p":5,"q":4,"r":3,"s":2,"branch":"Initial"},)"
            R"({"i":2,"p":4,"q":1,"r":3,"s":1,"branch":"SwapBranch"},)"
            R"({"i":3,"p":3,"q":2,"r":1,"s":0,"branch":"FormingBranch"}],)"
            R"("terminal":"SZero","count":1})");
}

TEST(Io, BraidAndTlinkRoundTrip) {
  const BraidWord w{4, {1, -3, 2}};
  EXPECT_EQ(braid_word_from_json(Json::parse(to_json(w).dump())), w);
  TLink3Params t;
  t.pairs = {{{4, -2}, {3, 7}, {1, 0}}};
  EXPECT_EQ(tlink_params_from_json(Json::parse(to_json(t).dump())), t);
}

TEST(Io, ReportRoundTrip) {
  SweepReport r;
  r.suite = "lemmas";
  r.checked = 12;
  r.checks_by_name = {{"mirror", 8}, {"swap", 4}};
  r.failures = {{"swap", {6, 4, 3, 2}, 1, 2, "vs (4, 6, 3, -2)"}};
  const auto back = report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back.suite, r.suite);
  EXPECT_EQ(back.checked, r.checked);
  EXPECT_EQ(back.checks_by_name, r.checks_by_name);
  EXPECT_EQ(back.failures, r.failures);
}

TEST(Io, Formatting) {
  ComponentPartition part{{{0}, {1, 3}, {2}}};
  EXPECT_EQ(format_partition(part), "[{0},{1,3},{2}]");
  EXPECT_EQ(format_terminal(trace({5, 4, 3, 2})), "SZero gcd(3,2)=1");
  EXPECT_EQ(format_terminal(trace({6, 0, 3, 2})), "QZero 6-3+gcd(3,2)=4");
}

TEST(Io, Csv) {
  SweepReport r;
  r.suite = "formulas";
  r.failures = {{"T34a", {7, 3, 2, 3}, 2, 1, "formula vs oracle, note"}};
  std::ostringstream out;
  write_csv(out, r);
  EXPECT_EQ(out.str(),
            "suite,check,params,expected,got,detail\n"
            "formulas,T34a,7 3 2 3,2,1,\"formula vs oracle, note\"\n");
}
