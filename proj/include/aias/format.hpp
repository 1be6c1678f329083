#pragma once

// Text rendering of reports and query results for the CLI and logs.

#include <string>

#include "aias/query.hpp"
#include "aias/rdf.hpp"
#include "aias/shapes.hpp"

namespace aias {

// "conforms: true|false" followed by one line per result:
// "SEVERITY focus=<term> path=<term> check=<id>: message".
std::string print_report(const ValidationReport& report, const PrefixMap& prefixes);

// Column-aligned table with a header row of variable names.
std::string format_table(const SolutionSequence& solutions, const PrefixMap& prefixes);

// Tab-separated values with a header row of variable names.
std::string format_tsv(const SolutionSequence& solutions, const PrefixMap& prefixes);

}  // namespace aias
