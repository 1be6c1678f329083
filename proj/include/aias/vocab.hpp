#pragma once

// Built-in ontology design patterns and the alignment ontology, shipped
// as embedded Turtle documents, plus the built-in well-formedness checks
// (L1 communication arity, L2 assignment endpoints, L3 system tasks).

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "aias/rdf.hpp"
#include "aias/shapes.hpp"

namespace aias {

inline constexpr std::array<std::string_view, 4> kBuiltinSchemas = {"vdi3682", "iso7489",
                                                                    "iso22989", "aias"};

// Namespace IRIs for the built-in vocabularies. Overridable because only
// the prefixes, never full IRIs, are fixed by convention.
struct NamespaceConfig {
  std::string aias = "https://w3id.org/aias#";
  std::string vdi3682 = "https://w3id.org/aias/vdi3682#";
  std::string iso7489 = "https://w3id.org/aias/iso7489#";
  std::string iso22989 = "https://w3id.org/aias/iso22989#";

  Iri term(std::string_view schema, std::string_view local) const;
};

struct SchemaGraph {
  std::string name;
  Graph graph;
  Iri namespace_iri;
};

// The Turtle source of a built-in schema, with namespace overrides
// applied. Byte-identical across runs for a fixed configuration.
std::string schema_document(std::string_view name, const NamespaceConfig& config = {});

// Parses and validates one built-in schema. Throws UnknownSchemaError for
// names outside kBuiltinSchemas.
SchemaGraph load_builtin_schema(std::string_view name, const NamespaceConfig& config = {});

// Union of the four built-in schema graphs with all prefixes registered.
Graph merged_schema(const NamespaceConfig& config = {});

// Class/property declarations and the axiom edges between classes,
// extracted from a schema graph. Equivalence pairs are stored
// symmetrically.
struct VocabularyIndex {
  std::set<Iri> classes;
  std::set<Iri> properties;
  std::set<std::pair<Iri, Iri>> subclass_edges;      // (sub, super)
  std::set<std::pair<Iri, Iri>> equivalence_pairs;

  static VocabularyIndex from_schema(const Graph& schema);
};

// All classes reachable from `cls` by reversed subclass edges,
// excluding `cls` itself. Throws UnknownClassError for undeclared classes.
std::set<Iri> list_subclasses(const VocabularyIndex& index, const Iri& cls);

// Built-in AIAS checks over the schema closure of `data`:
//   L1 (error)   every communication has at least two communicatesWith links;
//   L2 (warning) every assignment is referenced by at least one function
//                and at least one component;
//   L3 (warning) every AI system has at least one task.
ValidationReport lint_aias(const Graph& data, const NamespaceConfig& config = {});

}  // namespace aias
