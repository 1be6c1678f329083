#pragma once

// Basic-graph-pattern select queries: parse "SELECT ... WHERE { ... }"
// documents and evaluate them with multiset semantics over a graph
// snapshot. Callers wanting inference run the reasoner first.

#include <string_view>
#include <vector>

#include "aias/rdf.hpp"

namespace aias {

struct Query {
  PrefixMap prefixes;                  // document prefixes over the base map
  std::vector<Variable> projection;    // resolved also for "SELECT *"
  bool select_all = false;
  std::vector<TriplePattern> patterns;
  bool distinct = false;
};

// Rows bind exactly the projected variables, sorted canonically by their
// terms left to right; duplicates are adjacent (and absent under DISTINCT).
struct SolutionSequence {
  std::vector<Variable> variables;
  std::vector<std::vector<Term>> rows;

  bool operator==(const SolutionSequence&) const = default;
};

// Grammar: optional "PREFIX label: <iri>" lines; "SELECT" "DISTINCT"?
// (variables | "*"); "WHERE {" "."-separated triple patterns "}" using
// prefixed names, "?var", the "a" keyword, and literal objects. Throws
// ParseError, UnboundPrefixError, or UnprojectableVariableError.
Query parse_query(std::string_view text, const PrefixMap& base_prefixes);

// Natural join of all pattern matches, projected to the query's
// variables; repeated variables must bind consistently.
SolutionSequence evaluate_query(const Graph& graph, const Query& query);

}  // namespace aias
