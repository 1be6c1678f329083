#include "aias/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "aias/error.hpp"

namespace aias {

Iri::Iri(std::string v) : value(std::move(v)) {
  if (value.empty() || value.find(':') == std::string::npos) {
    throw RdfError("invalid IRI (empty or missing scheme separator): \"" + value + "\"");
  }
}

BlankNode::BlankNode(std::string l) : label(std::move(l)) {
  if (label.empty()) {
    throw RdfError("blank node label must be non-empty");
  }
}

Literal::Literal(std::string lex, Iri dt, std::string lang)
    : lexical(std::move(lex)), datatype(std::move(dt)), language(std::move(lang)) {}

Literal Literal::plain(std::string lexical) {
  return Literal(std::move(lexical), Iri(iris::xsd_string), "");
}

Literal Literal::typed(std::string lexical, Iri datatype) {
  return Literal(std::move(lexical), std::move(datatype), "");
}

Literal Literal::tagged(std::string lexical, std::string language) {
  if (language.empty()) {
    throw RdfError("language-tagged literal requires a non-empty tag");
  }
  return Literal(std::move(lexical), Iri(iris::rdf_lang_string), std::move(language));
}

bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

Triple::Triple(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (is_literal(subject)) {
    throw RdfError("triple subject must be an IRI or blank node");
  }
}

Variable::Variable(std::string n) : name(std::move(n)) {
  if (name.empty()) {
    throw RdfError("variable name must be non-empty");
  }
}

void PrefixMap::bind(std::string label, std::string namespace_iri) {
  for (auto& [l, ns] : entries_) {
    if (l == label) {
      ns = std::move(namespace_iri);
      return;
    }
  }
  entries_.emplace_back(std::move(label), std::move(namespace_iri));
}

const std::string* PrefixMap::find(std::string_view label) const {
  for (const auto& [l, ns] : entries_) {
    if (l == label) return &ns;
  }
  return nullptr;
}

bool PrefixMap::contains(std::string_view label) const { return find(label) != nullptr; }

namespace {

// Conservative local-name syntax: anything matching this re-parses as the
// local part of a prefixed name in the Turtle subset.
bool safe_local_part(std::string_view local) {
  if (local.empty()) return false;
  auto head = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  auto tail = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
  };
  if (!head(local.front())) return false;
  return std::all_of(local.begin() + 1, local.end(), tail);
}

}  // namespace

std::optional<std::string> PrefixMap::shorten(std::string_view iri) const {
  const std::pair<std::string, std::string>* best = nullptr;
  for (const auto& entry : entries_) {
    const auto& ns = entry.second;
    if (ns.empty() || !iri.starts_with(ns)) continue;
    if (!safe_local_part(iri.substr(ns.size()))) continue;
    if (best == nullptr || ns.size() > best->second.size()) best = &entry;
  }
  if (best == nullptr) return std::nullopt;
  return best->first + ":" + std::string(iri.substr(best->second.size()));
}

Iri expand_curie(const PrefixMap& prefixes, std::string_view curie) {
  auto first = curie.find(':');
  if (first == std::string_view::npos || curie.find(':', first + 1) != std::string_view::npos) {
    throw MalformedCurieError("malformed curie: \"" + std::string(curie) + "\"");
  }
  auto label = curie.substr(0, first);
  const std::string* ns = prefixes.find(label);
  if (ns == nullptr) {
    throw UnboundPrefixError("unbound prefix: \"" + std::string(label) + "\"");
  }
  return Iri(*ns + std::string(curie.substr(first + 1)));
}

bool Graph::insert(Triple t) { return triples_.insert(std::move(t)).second; }

bool Graph::remove(const Triple& t) { return triples_.erase(t) > 0; }

namespace {

bool position_matches(const PatternTerm& p, const Term& t) {
  if (std::holds_alternative<Variable>(p)) return true;
  return std::get<Term>(p) == t;
}

bool position_matches(const PatternTerm& p, const Iri& predicate) {
  if (std::holds_alternative<Variable>(p)) return true;
  return std::get<Term>(p) == Term(predicate);
}

}  // namespace

std::vector<Triple> Graph::match(const TriplePattern& pattern) const {
  std::vector<Triple> out;
  for (const Triple& t : triples_) {
    if (position_matches(pattern.subject, t.subject) &&
        position_matches(pattern.predicate, t.predicate) &&
        position_matches(pattern.object, t.object)) {
      out.push_back(t);
    }
  }
  return out;
}

std::set<std::string> Graph::blank_labels() const {
  std::set<std::string> labels;
  for (const Triple& t : triples_) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) labels.insert(b->label);
    if (const auto* b = std::get_if<BlankNode>(&t.object)) labels.insert(b->label);
  }
  return labels;
}

void Graph::merge(const Graph& other) {
  std::set<std::string> used = blank_labels();
  std::set<std::string> incoming = other.blank_labels();

  std::map<std::string, std::string> rename;
  for (const std::string& label : incoming) {
    if (!used.contains(label)) {
      used.insert(label);
      continue;
    }
    for (int k = 1;; ++k) {
      std::string candidate = label + "_" + std::to_string(k);
      if (!used.contains(candidate) && !incoming.contains(candidate)) {
        rename.emplace(label, candidate);
        used.insert(candidate);
        break;
      }
    }
  }

  auto mapped = [&rename](const Term& t) -> Term {
    if (const auto* b = std::get_if<BlankNode>(&t)) {
      auto it = rename.find(b->label);
      if (it != rename.end()) return BlankNode(it->second);
    }
    return t;
  };

  for (const Triple& t : other) {
    triples_.insert(Triple(mapped(t.subject), t.predicate, mapped(t.object)));
  }
  for (const auto& [label, ns] : other.prefixes().entries()) {
    if (!prefixes_.contains(label)) prefixes_.bind(label, ns);
  }
}

namespace {

// One triple with its blank positions abstracted away, used to derive
// per-label candidate sets before the backtracking search.
struct BlankSignature {
  // (position, predicate, other-position summary) occurrences.
  std::multiset<std::string> entries;

  auto operator<=>(const BlankSignature&) const = default;
};

std::string term_key(const Term& t) {
  if (const auto* i = std::get_if<Iri>(&t)) return "I" + i->value;
  if (const auto* b = std::get_if<BlankNode>(&t)) {
    (void)b;
    return "B";  // blanks are anonymous in signatures
  }
  const auto& l = std::get<Literal>(t);
  return "L" + l.lexical + "\x1f" + l.datatype.value + "\x1f" + l.language;
}

std::map<std::string, BlankSignature> blank_signatures(const Graph& g) {
  std::map<std::string, BlankSignature> sigs;
  for (const std::string& label : g.blank_labels()) sigs[label];  // ensure presence
  for (const Triple& t : g) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) {
      sigs[b->label].entries.insert("S\x1f" + t.predicate.value + "\x1f" + term_key(t.object));
    }
    if (const auto* b = std::get_if<BlankNode>(&t.object)) {
      sigs[b->label].entries.insert("O\x1f" + t.predicate.value + "\x1f" + term_key(t.subject));
    }
  }
  return sigs;
}

Term apply_mapping(const Term& t, const std::map<std::string, std::string>& mapping) {
  if (const auto* b = std::get_if<BlankNode>(&t)) {
    return BlankNode(mapping.at(b->label));
  }
  return t;
}

bool search(const std::vector<std::string>& a_labels, std::size_t index,
            const std::map<std::string, std::vector<std::string>>& candidates,
            std::set<std::string>& taken, std::map<std::string, std::string>& mapping,
            const Graph& a, const Graph& b) {
  if (index == a_labels.size()) {
    for (const Triple& t : a) {
      if (!b.contains(Triple(apply_mapping(t.subject, mapping), t.predicate,
                             apply_mapping(t.object, mapping)))) {
        return false;
      }
    }
    return true;
  }
  const std::string& label = a_labels[index];
  for (const std::string& target : candidates.at(label)) {
    if (taken.contains(target)) continue;
    taken.insert(target);
    mapping[label] = target;
    if (search(a_labels, index + 1, candidates, taken, mapping, a, b)) return true;
    mapping.erase(label);
    taken.erase(target);
  }
  return false;
}

}  // namespace

bool graph_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;

  auto a_sigs = blank_signatures(a);
  auto b_sigs = blank_signatures(b);
  if (a_sigs.size() != b_sigs.size()) return false;

  if (a_sigs.empty()) return a.triples() == b.triples();

  // Ground portions must agree exactly.
  std::set<Triple> a_ground, b_ground;
  for (const Triple& t : a) {
    if (!is_blank(t.subject) && !is_blank(t.object)) a_ground.insert(t);
  }
  for (const Triple& t : b) {
    if (!is_blank(t.subject) && !is_blank(t.object)) b_ground.insert(t);
  }
  if (a_ground != b_ground) return false;

  std::map<std::string, std::vector<std::string>> candidates;
  for (const auto& [label, sig] : a_sigs) {
    auto& row = candidates[label];
    for (const auto& [target, target_sig] : b_sigs) {
      if (sig == target_sig) row.push_back(target);
    }
    if (row.empty()) return false;
  }

  // Most-constrained labels first.
  std::vector<std::string> order;
  order.reserve(candidates.size());
  for (const auto& [label, _] : candidates) order.push_back(label);
  std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    return candidates.at(x).size() < candidates.at(y).size();
  });

  std::set<std::string> taken;
  std::map<std::string, std::string> mapping;
  return search(order, 0, candidates, taken, mapping, a, b);
}

}  // namespace aias
