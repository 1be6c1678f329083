#pragma once

// Schema-closure inference (subclass, equivalence, domain/range) and a
// forward-chaining engine for Horn rules with class and property atoms.
// Both compute a least fixpoint over immutable graph snapshots; rule and
// triple ordering never change the result.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aias/rdf.hpp"

namespace aias {

using RuleTerm = std::variant<Variable, Iri>;  // rule constants are IRIs

struct ClassAtom {
  Iri class_iri;
  RuleTerm term;
};

struct PropertyAtom {
  Iri property;
  RuleTerm subject;
  RuleTerm object;
};

using Atom = std::variant<ClassAtom, PropertyAtom>;

// A range-restricted Horn rule: every head variable occurs in the body.
struct Rule {
  std::string id;
  std::vector<Atom> body;
  std::vector<Atom> head;
};

struct RuleSet {
  std::vector<Rule> rules;
};

struct InferenceResult {
  Graph closure;   // input plus inferred
  Graph inferred;  // only the newly derived triples
  std::size_t iterations = 0;
  // inferred triple -> producing rule id or axiom id
  // ("axiom:subclass" | "axiom:equivalence" | "axiom:domain" | "axiom:range")
  std::map<Triple, std::string> provenance;
};

// Least fixpoint of subclass transitivity, equivalence (symmetric,
// transitive, and implying mutual subclass), type propagation, and
// domain/range typing. Only instance-level type triples are materialized;
// literals never receive types. Throws MalformedSchemaError when the
// schema graph uses a non-axiom predicate.
InferenceResult schema_closure(const Graph& data, const Graph& schema);

// Rule document grammar: "#" comments, optional "PREFIX label: <iri>"
// lines, atoms "C(?x)" / "P(?x, ?y)" over prefixed names, "^"-separated
// body, "->", head atoms; a rule ends at "." or at the end of its line.
// Constants are prefixed names without "?". Throws ParseError,
// UnboundPrefixError, or UnsafeRuleError.
RuleSet parse_rules(std::string_view text, const PrefixMap& base_prefixes);

// Schema closure plus forward chaining of all rules to the joint least
// fixpoint. Head atoms whose instantiation would be ill-formed (literal
// in a subject position) are skipped.
InferenceResult apply_rules(const Graph& data, const RuleSet& rules, const Graph& schema);

}  // namespace aias
