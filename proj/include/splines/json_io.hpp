#pragma once

#include "splines/arith.hpp"
#include "splines/cycle_basis.hpp"
#include "splines/graph.hpp"
#include "splines/oracle.hpp"
#include "splines/spline.hpp"

#include <json.hpp>

#include <optional>

namespace splines::io {

using json = nlohmann::json;

/// Largest magnitude emitted as a plain JSON number (2^53 - 1). Anything
/// wider is written as a decimal string.
inline constexpr long kMaxSafeInteger = 9007199254740991L;

json to_json(const Integer& value);
json to_json(std::span<const Integer> values);

/// Accepts a JSON integer or a decimal string. Throws UsageError otherwise.
Integer integer_from_json(const json& j);
std::vector<Integer> integers_from_json(const json& j);

/// Graph documents:
///   {"family":"cycle","labels":[...]}
///   {"family":"star","labels":[...]}
///   {"family":"wheel","rim":[...],"spokes":[...]}
///   {"family":"complete","c3":[...],"stars":[[...],...]}
///   {"family":"general","vertices":N,"edges":[[u,v,label],...]}
/// Unknown fields are rejected.
EdgeLabeledGraph graph_from_json(const json& j);
json graph_to_json(const EdgeLabeledGraph& g);

/// {"values":[g1,...,gn]}
Spline spline_from_json(const json& j);
json spline_to_json(const Spline& s);

json verdict_to_json(const Verdict& v);
json basis_to_json(const FlowUpBasis& basis);
json decomposition_to_json(const DecompositionResult& d);
json enumeration_to_json(const EnumerationReport& report);
json crt_to_json(const std::optional<CrtSolution>& solution, const char* value_key);

} // namespace splines::io
