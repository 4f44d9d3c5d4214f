#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "knotcomp/braid.hpp"
#include "knotcomp/perm_oracle.hpp"
#include "knotcomp/types.hpp"
#include "knotcomp/verify.hpp"

namespace knotcomp {

/// Machine-readable output. Field names are stable: p, q, r, s, count,
/// trace[], branch, terminal.

using Json = nlohmann::ordered_json;

Json to_json(const TTLParams& params);
Json to_json(const TLink3Params& params);
Json to_json(const ReductionState& state, std::size_t index);
Json to_json(const TTLParams& params, const ReductionTrace& trace);
Json to_json(const ComponentPartition& partition);
Json to_json(const BraidWord& word);
Json to_json(const SweepReport& report);

TTLParams ttl_params_from_json(const Json& j);
TLink3Params tlink_params_from_json(const Json& j);
ReductionTrace trace_from_json(const Json& j);
BraidWord braid_word_from_json(const Json& j);
SweepReport report_from_json(const Json& j);

/// "[{0,2},{1,3}]"
std::string format_partition(const ComponentPartition& partition);

/// The closing formula of a trace, e.g. "SZero gcd(3,2)=1" or
/// "QZero 6-3+gcd(3,2)=4".
std::string format_terminal(const ReductionTrace& trace);

/// Header "suite,check,params,expected,got,detail", then one row per failure.
/// Parameters are space-separated inside their field.
void write_csv(std::ostream& out, const SweepReport& report);

}  // namespace knotcomp
