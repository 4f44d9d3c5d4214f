#include "knotcomp/io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace knotcomp {

namespace {

Branch parse_branch(const std::string& name) {
  for (auto b : {Branch::Initial, Branch::SwapBranch, Branch::FormingBranch})
    if (to_string(b) == name) return b;
  throw std::invalid_argument("unknown branch " + name);
}

Terminal parse_terminal(const std::string& name) {
  if (name == "QZero") return Terminal::QZero;
  if (name == "SZero") return Terminal::SZero;
  throw std::invalid_argument("unknown terminal " + name);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

Json to_json(const TTLParams& t) {
  return {{"p", t.p}, {"q", t.q}, {"r", t.r}, {"s", t.s}};
}

Json to_json(const TLink3Params& t) {
  Json pairs = Json::array();
  for (const auto& b : t.pairs) pairs.push_back({{"p", b.p}, {"q", b.q}});
  return {{"pairs", pairs}};
}

Json to_json(const ReductionState& st, std::size_t index) {
  return {{"i", index},      {"p", st.p}, {"q", st.q},
          {"r", st.r},      {"s", st.s}, {"branch", to_string(st.branch)}};
}

Json to_json(const TTLParams& params, const ReductionTrace& tr) {
  Json states = Json::array();
  for (std::size_t i = 0; i < tr.states.size(); ++i)
    states.push_back(to_json(tr.states[i], i + 1));
  return {{"params", to_json(params)},
          {"trace", states},
          {"terminal", to_string(tr.terminal)},
          {"count", tr.count}};
}

Json to_json(const ComponentPartition& partition) {
  return partition.cycles;
}

Json to_json(const BraidWord& word) {
  return {{"strands", word.strands}, {"letters", word.letters}};
}

Json to_json(const SweepReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"check", f.check},
                        {"params", f.params},
                        {"expected", f.expected},
                        {"got", f.got},
                        {"detail", f.detail}});
  }
  Json by_name = Json::object();
  for (const auto& [name, n] : report.checks_by_name) by_name[name] = n;
  return {{"suite", report.suite},
          {"checked", report.checked},
          {"checks", by_name},
          {"failures", failures}};
}

TTLParams ttl_params_from_json(const Json& j) {
  return {j.at("p").get<Int>(), j.at("q").get<Int>(), j.at("r").get<Int>(),
          j.at("s").get<Int>()};
}

TLink3Params tlink_params_from_json(const Json& j) {
  const auto& pairs = j.at("pairs");
  if (pairs.size() != 3) throw std::invalid_argument("expected three pairs");
  TLink3Params t;
  for (std::size_t i = 0; i < 3; ++i)
    t.pairs[i] = {pairs[i].at("p").get<Int>(), pairs[i].at("q").get<Int>()};
  return t;
}

ReductionTrace trace_from_json(const Json& j) {
  ReductionTrace tr;
  for (const auto& st : j.at("trace")) {
    tr.states.push_back({st.at("p").get<Int>(), st.at("q").get<Int>(),
                         st.at("r").get<Int>(), st.at("s").get<Int>(),
                         parse_branch(st.at("branch").get<std::string>())});
  }
  tr.terminal = parse_terminal(j.at("terminal").get<std::string>());
  tr.count = j.at("count").get<Int>();
  return tr;
}

BraidWord braid_word_from_json(const Json& j) {
  return {j.at("strands").get<Int>(), j.at("letters").get<std::vector<Int>>()};
}

SweepReport report_from_json(const Json& j) {
  SweepReport report;
  report.suite = j.at("suite").get<std::string>();
  report.checked = j.at("checked").get<std::size_t>();
  for (const auto& [name, n] : j.at("checks").items())
    report.checks_by_name[name] = n.get<std::size_t>();
  for (const auto& f : j.at("failures")) {
    report.failures.push_back({f.at("check").get<std::string>(),
                               f.at("params").get<std::vector<Int>>(),
                               f.at("expected").get<Int>(), f.at("got").get<Int>(),
                               f.at("detail").get<std::string>()});
  }
  return report;
}

std::string format_partition(const ComponentPartition& partition) {
  std::ostringstream out;
  out << '[';
  for (std::size_t c = 0; c < partition.cycles.size(); ++c) {
    if (c) out << ',';
    out << '{';
    for (std::size_t i = 0; i < partition.cycles[c].size(); ++i)
      out << (i ? "," : "") << partition.cycles[c][i];
    out << '}';
  }
  out << ']';
  return out.str();
}

std::string format_terminal(const ReductionTrace& tr) {
  const auto& st = tr.states.back();
  std::ostringstream out;
  out << to_string(tr.terminal) << ' ';
  if (tr.terminal == Terminal::QZero)
    out << st.p << '-' << st.r << "+gcd(" << st.r << ',' << st.s << ")=";
  else
    out << "gcd(" << st.p << ',' << st.q << ")=";
  out << tr.count;
  return out.str();
}

void write_csv(std::ostream& out, const SweepReport& report) {
  out << "suite,check,params,expected,got,detail\n";
  for (const auto& f : report.failures) {
    std::string params;
    for (std::size_t i = 0; i < f.params.size(); ++i)
      params += (i ? " " : "") + std::to_string(f.params[i]);
    out << csv_field(report.suite) << ',' << csv_field(f.check) << ',' << params
        << ',' << f.expected << ',' << f.got << ',' << csv_field(f.detail) << '\n';
  }
}

}  // namespace knotcomp
