#pragma once

// Basic-graph-pattern join shared by the rule engine and the query
// evaluator: nested-loop extension of variable bindings, deterministic
// because Graph::match yields canonical order.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aias/rdf.hpp"

namespace aias::detail {

using Binding = std::map<std::string, Term>;

// All total assignments of the patterns' variables that turn every
// pattern into a triple of `g`. Repeated variables must agree.
std::vector<Binding> join_patterns(const Graph& g, std::span<const TriplePattern> patterns);

}  // namespace aias::detail
