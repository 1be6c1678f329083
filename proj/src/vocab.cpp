#include "aias/vocab.hpp"

#include <algorithm>

#include "aias/error.hpp"
#include "aias/reasoner.hpp"
#include "aias/turtle.hpp"
#include "vocab_data.hpp"

namespace aias {

namespace {

struct Defaults {
  static constexpr std::string_view aias = "https://w3id.org/aias#";
  static constexpr std::string_view vdi3682 = "https://w3id.org/aias/vdi3682#";
  static constexpr std::string_view iso7489 = "https://w3id.org/aias/iso7489#";
  static constexpr std::string_view iso22989 = "https://w3id.org/aias/iso22989#";
};

std::string_view builtin_text(std::string_view name) {
  if (name == "vdi3682") return detail::kVdi3682Ttl;
  if (name == "iso7489") return detail::kIso7489Ttl;
  if (name == "iso22989") return detail::kIso22989Ttl;
  if (name == "aias") return detail::kAiasTtl;
  throw UnknownSchemaError("unknown built-in schema: \"" + std::string(name) + "\"");
}

void replace_all(std::string& text, std::string_view from, std::string_view to) {
  if (from == to) return;
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

const std::string& namespace_of(const NamespaceConfig& config, std::string_view schema) {
  if (schema == "aias") return config.aias;
  if (schema == "vdi3682") return config.vdi3682;
  if (schema == "iso7489") return config.iso7489;
  if (schema == "iso22989") return config.iso22989;
  throw UnknownSchemaError("unknown built-in schema: \"" + std::string(schema) + "\"");
}

// Predicates a schema graph may use.
bool axiom_predicate(const std::string& p) {
  return p == iris::rdf_type || p == iris::rdfs_subclass_of || p == iris::owl_equivalent_class ||
         p == iris::rdfs_domain || p == iris::rdfs_range;
}

void validate_schema(const SchemaGraph& schema, const NamespaceConfig& config) {
  for (const Triple& t : schema.graph) {
    if (!axiom_predicate(t.predicate.value)) {
      throw MalformedSchemaError("schema " + schema.name + " uses non-axiom predicate " +
                                 t.predicate.value);
    }
    const auto* subject = std::get_if<Iri>(&t.subject);
    if (subject == nullptr) {
      throw MalformedSchemaError("schema " + schema.name + " declares a non-IRI subject");
    }
    bool in_own = subject->value.starts_with(schema.namespace_iri.value);
    if (schema.name == "aias") {
      // Alignment statements may reference the imported patterns.
      bool in_imported = subject->value.starts_with(config.vdi3682) ||
                         subject->value.starts_with(config.iso7489) ||
                         subject->value.starts_with(config.iso22989);
      if (!in_own && !in_imported) {
        throw MalformedSchemaError("alignment subject outside known namespaces: " +
                                   subject->value);
      }
    } else if (!in_own) {
      throw MalformedSchemaError("schema " + schema.name + " declares foreign subject " +
                                 subject->value);
    }
  }
}

}  // namespace

Iri NamespaceConfig::term(std::string_view schema, std::string_view local) const {
  return Iri(namespace_of(*this, schema) + std::string(local));
}

std::string schema_document(std::string_view name, const NamespaceConfig& config) {
  std::string text(builtin_text(name));
  replace_all(text, Defaults::vdi3682, config.vdi3682);
  replace_all(text, Defaults::iso7489, config.iso7489);
  replace_all(text, Defaults::iso22989, config.iso22989);
  // The bare AIAS namespace is a prefix of nothing else, but substitute it
  // last in case an override shadows one of the longer defaults.
  replace_all(text, Defaults::aias, config.aias);
  return text;
}

SchemaGraph load_builtin_schema(std::string_view name, const NamespaceConfig& config) {
  SchemaGraph schema{std::string(name), parse_turtle(schema_document(name, config)),
                     Iri(namespace_of(config, name))};
  validate_schema(schema, config);
  return schema;
}

Graph merged_schema(const NamespaceConfig& config) {
  Graph merged;
  for (std::string_view name : kBuiltinSchemas) {
    merged.merge(load_builtin_schema(name, config).graph);
  }
  return merged;
}

VocabularyIndex VocabularyIndex::from_schema(const Graph& schema) {
  VocabularyIndex index;
  for (const Triple& t : schema) {
    const auto* subject = std::get_if<Iri>(&t.subject);
    const auto* object = std::get_if<Iri>(&t.object);
    if (subject == nullptr) continue;
    const std::string& p = t.predicate.value;
    if (p == iris::rdf_type && object != nullptr) {
      if (object->value == iris::owl_class) index.classes.insert(*subject);
      if (object->value == iris::owl_object_property) index.properties.insert(*subject);
    } else if (p == iris::rdfs_subclass_of && object != nullptr) {
      index.subclass_edges.emplace(*subject, *object);
    } else if (p == iris::owl_equivalent_class && object != nullptr) {
      index.equivalence_pairs.emplace(*subject, *object);
      index.equivalence_pairs.emplace(*object, *subject);
    }
  }
  return index;
}

std::set<Iri> list_subclasses(const VocabularyIndex& index, const Iri& cls) {
  if (!index.classes.contains(cls)) {
    throw UnknownClassError("class not declared in the vocabulary: " + cls.value);
  }
  std::set<Iri> out;
  std::vector<Iri> frontier{cls};
  while (!frontier.empty()) {
    Iri current = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& [sub, super] : index.subclass_edges) {
      if (super == current && !out.contains(sub) && sub != cls) {
        out.insert(sub);
        frontier.push_back(sub);
      }
    }
  }
  return out;
}

namespace {

std::vector<Term> instances_of(const Graph& closure, const Iri& cls) {
  std::vector<Term> out;
  for (const Triple& t :
       closure.match(TriplePattern{Variable("x"), Term(Iri(iris::rdf_type)), Term(cls)})) {
    out.push_back(t.subject);
  }
  return out;
}

std::size_t count_objects(const Graph& g, const Term& subject, const Iri& predicate) {
  return g.match(TriplePattern{subject, Term(predicate), Variable("o")}).size();
}

}  // namespace

ValidationReport lint_aias(const Graph& data, const NamespaceConfig& config) {
  Graph closure = schema_closure(data, merged_schema(config)).closure;

  const Iri communication = config.term("iso7489", "Communication");
  const Iri assignment = config.term("vdi3682", "Assignment");
  const Iri ai_system = config.term("iso22989", "AISystem");
  const Iri communicates_with = config.term("aias", "communicatesWith");
  const Iri is_assigned_to = config.term("aias", "isAssignedTo");
  const Iri has_task = config.term("iso22989", "hasTask");
  const Iri function_class = config.term("aias", "Function");
  const Iri component_class = config.term("aias", "Component");

  ValidationReport report;

  // L1: every communication links at least two components.
  for (const Term& focus : instances_of(closure, communication)) {
    std::size_t links = count_objects(closure, focus, communicates_with);
    if (links < 2) {
      report.results.push_back(ValidationResult{
          Severity::Error, focus, communicates_with, "L1", ">= 2", std::to_string(links),
          "communication must link at least 2 components via communicatesWith", "L1"});
    }
  }

  // L2: every assignment is referenced by a function and by a component.
  for (const Term& focus : instances_of(closure, assignment)) {
    bool has_function = false;
    bool has_component = false;
    for (const Triple& t :
         closure.match(TriplePattern{Variable("s"), Term(is_assigned_to), focus})) {
      if (closure.contains(Triple(t.subject, Iri(iris::rdf_type), function_class))) {
        has_function = true;
      }
      if (closure.contains(Triple(t.subject, Iri(iris::rdf_type), component_class))) {
        has_component = true;
      }
    }
    if (!has_function || !has_component) {
      std::string missing = !has_function && !has_component ? "a function and a component"
                            : !has_function                 ? "a function"
                                                            : "a component";
      report.results.push_back(ValidationResult{
          Severity::Warning, focus, is_assigned_to, "L2",
          ">= 1 function and >= 1 component",
          std::string(has_function ? "function present" : "no function") + ", " +
              (has_component ? "component present" : "no component"),
          "assignment is not referenced by " + missing + " via isAssignedTo", "L2"});
    }
  }

  // L3: every AI system carries at least one task.
  for (const Term& focus : instances_of(closure, ai_system)) {
    std::size_t tasks = count_objects(closure, focus, has_task);
    if (tasks == 0) {
      report.results.push_back(ValidationResult{Severity::Warning, focus, has_task, "L3", ">= 1",
                                                "0", "AI system declares no task via hasTask",
                                                "L3"});
    }
  }

  return report;
}

}  // namespace aias
