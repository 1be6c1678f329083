#pragma once

// The stamping-machine example: a deterministic ground knowledge graph
// describing a drive-belt condition-classification setup, plus the
// competency-question suite with frozen expected answers and the example
// rule and shape documents.

#include <string>
#include <vector>

#include "aias/query.hpp"
#include "aias/rdf.hpp"
#include "aias/vocab.hpp"

namespace aias {

inline constexpr std::string_view kStampingNamespace =
    "https://w3id.org/aias/examples/stamping#";

// Ground graph (no blank nodes); two builds are identical, not merely
// isomorphic.
Graph build_stamping_graph(const NamespaceConfig& config = {});

struct CompetencyCase {
  std::string id;  // "q1" .. "q4"
  std::string question;
  std::string query_text;
  SolutionSequence expected;
  bool requires_inference = false;
  // q1 additionally carries a type-constrained variant of its query.
  std::string variant_query_text;
  SolutionSequence variant_expected;
};

std::vector<CompetencyCase> competency_suite(const NamespaceConfig& config = {});

// Rule document with the cloud-design rule in both its training and
// inference variants.
std::string stamping_rules_text(const NamespaceConfig& config = {});

// Shape document constraining communications to at least two
// communicatesWith links.
std::string communication_shapes_text(const NamespaceConfig& config = {});

}  // namespace aias
