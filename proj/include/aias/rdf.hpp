#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aias {

// Well-known IRIs used across the toolkit.
namespace iris {
inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl_ns = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view sh_ns = "http://www.w3.org/ns/shacl#";

inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view rdfs_subclass_of =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view rdfs_domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view rdfs_range = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view rdfs_label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view owl_equivalent_class =
    "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr std::string_view owl_class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view owl_object_property =
    "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace iris

// An absolute IRI. The text must be non-empty and contain a scheme
// separator; beyond that IRIs compare as exact strings (no normalization).
struct Iri {
  std::string value;

  explicit Iri(std::string v);
  explicit Iri(std::string_view v) : Iri(std::string(v)) {}
  explicit Iri(const char* v) : Iri(std::string(v)) {}

  auto operator<=>(const Iri&) const = default;
};

// A blank node with a graph-scoped label.
struct BlankNode {
  std::string label;

  explicit BlankNode(std::string l);

  auto operator<=>(const BlankNode&) const = default;
};

// A literal: lexical form plus datatype, optionally a language tag.
// A language-tagged literal always has the rdf:langString datatype.
struct Literal {
  std::string lexical;
  Iri datatype;
  std::string language;

  static Literal plain(std::string lexical);
  static Literal typed(std::string lexical, Iri datatype);
  static Literal tagged(std::string lexical, std::string language);

  auto operator<=>(const Literal&) const = default;

 private:
  Literal(std::string lex, Iri dt, std::string lang);
};

// Alternative order doubles as the canonical kind order: Iri < BlankNode
// < Literal, then lexicographic on the text fields.
using Term = std::variant<Iri, BlankNode, Literal>;

bool is_iri(const Term& t);
bool is_blank(const Term& t);
bool is_literal(const Term& t);

// A single statement. Literal subjects and non-IRI predicates are
// rejected at construction.
struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  Triple(Term s, Iri p, Term o);

  auto operator<=>(const Triple&) const = default;
};

// A named query/rule variable. Occurrences sharing a name denote the
// same variable.
struct Variable {
  std::string name;

  explicit Variable(std::string n);

  auto operator<=>(const Variable&) const = default;
};

using PatternTerm = std::variant<Term, Variable>;

// A triple pattern: each position is either a concrete term or a variable.
struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

// Ordered prefix table. Labels are unique; re-binding a label replaces
// the namespace but keeps the original position.
class PrefixMap {
 public:
  void bind(std::string label, std::string namespace_iri);
  const std::string* find(std::string_view label) const;
  bool contains(std::string_view label) const;

  std::span<const std::pair<std::string, std::string>> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Longest-namespace match producing "label:local", or nullopt when no
  // namespace applies or the local part would not survive re-parsing.
  std::optional<std::string> shorten(std::string_view iri) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Expands "label:local" against the prefix table.
Iri expand_curie(const PrefixMap& prefixes, std::string_view curie);

// An in-memory triple store with set semantics and a prefix table.
// Construction is single-writer; a fully built graph is an immutable
// snapshot that downstream engines only read.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  // Returns true iff the triple was absent before.
  bool insert(Triple t);
  // Returns true iff the triple was present.
  bool remove(const Triple& t);
  bool contains(const Triple& t) const { return triples_.contains(t); }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }
  const std::set<Triple>& triples() const { return triples_; }

  PrefixMap& prefixes() { return prefixes_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  // All triples whose non-variable pattern positions match, in canonical
  // order. Repeated variables are position-wise wildcards here; joins
  // enforce consistency.
  std::vector<Triple> match(const TriplePattern& pattern) const;

  // Set union. Blank labels of `other` that collide with labels already
  // present are renamed; prefix labels already bound keep their binding.
  void merge(const Graph& other);

  std::set<std::string> blank_labels() const;

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  std::set<Triple> triples_;
  PrefixMap prefixes_;
};

// True iff some bijection on blank-node labels maps one triple set onto
// the other. Ground graphs compare as sets.
bool graph_isomorphic(const Graph& a, const Graph& b);

}  // namespace aias
