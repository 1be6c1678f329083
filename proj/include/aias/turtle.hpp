#pragma once

// Turtle-subset reader and writer: the exchange format for graphs,
// schemas, shapes, and the example corpus. Supported syntax: prefix
// directives ("@prefix"/"PREFIX"), the "a" keyword, ";" predicate lists,
// "," object lists, labeled and anonymous blank nodes, string literals
// with "^^" datatype or "@lang", and integer/decimal/boolean shorthand.
// Collections, @base, and long strings are outside the subset and fail
// with a ParseError.

#include <string>
#include <string_view>

#include "aias/rdf.hpp"

namespace aias {

// Parses a document into a graph, recording its prefix declarations.
// Deterministic, including the labels assigned to anonymous blank nodes.
Graph parse_turtle(std::string_view document);

// Writes prefix declarations in table order, then triples grouped by
// subject in canonical term order. Blank nodes are always written with
// labels (never "[ ]"), renamed to b0, b1, ... in order of first
// appearance; output re-parses to an isomorphic graph.
std::string serialize_turtle(const Graph& graph);

// Renders a single term the way the serializer would, shortening IRIs
// against the given prefix table.
std::string term_to_turtle(const Term& term, const PrefixMap& prefixes);

}  // namespace aias
