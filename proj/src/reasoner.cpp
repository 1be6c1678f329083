#include "aias/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "aias/error.hpp"
#include "bgp.hpp"
#include "scan.hpp"

namespace aias {

namespace {

constexpr const char* kAxiomSubclass = "axiom:subclass";
constexpr const char* kAxiomEquivalence = "axiom:equivalence";
constexpr const char* kAxiomDomain = "axiom:domain";
constexpr const char* kAxiomRange = "axiom:range";

struct SuperClass {
  Iri iri;
  bool via_equivalence;
};

// Axiom structures pulled out of a schema graph. Subclass reachability is
// the preorder over asserted subclass edges plus both directions of every
// equivalence, computed lazily per class.
class SchemaAxioms {
 public:
  explicit SchemaAxioms(const Graph& schema) {
    for (const Triple& t : schema) {
      const std::string& p = t.predicate.value;
      if (p == iris::rdf_type) continue;  // class/property declarations
      if (p == iris::rdfs_subclass_of) {
        add_edge(t, false);
      } else if (p == iris::owl_equivalent_class) {
        add_edge(t, true);
        add_edge_reversed(t);
      } else if (p == iris::rdfs_domain) {
        add_property_axiom(t, domains_);
      } else if (p == iris::rdfs_range) {
        add_property_axiom(t, ranges_);
      } else {
        throw MalformedSchemaError("schema graph uses non-axiom predicate: " + p);
      }
    }
  }

  // All strict superclasses of `cls` (transitive, mixing subclass and
  // equivalence edges), each tagged with the kind of edge that first
  // reached it. Deterministic: breadth-first over sorted adjacency.
  const std::vector<SuperClass>& supers(const Iri& cls) const {
    auto memo = memo_.find(cls);
    if (memo != memo_.end()) return memo->second;

    std::vector<SuperClass> out;
    std::set<Iri> seen{cls};
    std::deque<SuperClass> frontier;
    auto expand = [&](const Iri& from) {
      auto adj = edges_.find(from);
      if (adj == edges_.end()) return;
      for (const auto& [next, via_equiv] : adj->second) {
        if (seen.contains(next)) continue;
        seen.insert(next);
        frontier.push_back({next, via_equiv});
      }
    };
    expand(cls);
    while (!frontier.empty()) {
      SuperClass sc = frontier.front();
      frontier.pop_front();
      expand(sc.iri);
      out.push_back(std::move(sc));
    }
    return memo_.emplace(cls, std::move(out)).first->second;
  }

  const std::vector<Iri>* domain_classes(const Iri& property) const {
    auto it = domains_.find(property);
    return it == domains_.end() ? nullptr : &it->second;
  }
  const std::vector<Iri>* range_classes(const Iri& property) const {
    auto it = ranges_.find(property);
    return it == ranges_.end() ? nullptr : &it->second;
  }

 private:
  void add_edge(const Triple& t, bool via_equiv) {
    const auto* sub = std::get_if<Iri>(&t.subject);
    const auto* super = std::get_if<Iri>(&t.object);
    if (sub == nullptr || super == nullptr) return;
    auto& row = edges_[*sub];
    if (std::find_if(row.begin(), row.end(), [&](const auto& e) {
          return e.first == *super;
        }) == row.end()) {
      row.emplace_back(*super, via_equiv);
    }
  }

  void add_edge_reversed(const Triple& t) {
    const auto* sub = std::get_if<Iri>(&t.subject);
    const auto* super = std::get_if<Iri>(&t.object);
    if (sub == nullptr || super == nullptr) return;
    add_edge(Triple(*super, t.predicate, *sub), true);
  }

  static void add_property_axiom(const Triple& t, std::map<Iri, std::vector<Iri>>& into) {
    const auto* prop = std::get_if<Iri>(&t.subject);
    const auto* cls = std::get_if<Iri>(&t.object);
    if (prop == nullptr || cls == nullptr) return;
    auto& row = into[*prop];
    if (std::find(row.begin(), row.end(), *cls) == row.end()) row.push_back(*cls);
  }

  // class -> (superclass, edge reached via equivalence), sorted by key
  std::map<Iri, std::vector<std::pair<Iri, bool>>> edges_;
  std::map<Iri, std::vector<Iri>> domains_;
  std::map<Iri, std::vector<Iri>> ranges_;
  mutable std::map<Iri, std::vector<SuperClass>> memo_;
};

TriplePattern atom_pattern(const Atom& atom) {
  auto as_pattern = [](const RuleTerm& rt) -> PatternTerm {
    if (const auto* var = std::get_if<Variable>(&rt)) return *var;
    return Term(std::get<Iri>(rt));
  };
  if (const auto* cls = std::get_if<ClassAtom>(&atom)) {
    return TriplePattern{as_pattern(cls->term), Term(Iri(iris::rdf_type)),
                         Term(cls->class_iri)};
  }
  const auto& prop = std::get<PropertyAtom>(atom);
  return TriplePattern{as_pattern(prop.subject), Term(prop.property), as_pattern(prop.object)};
}

Term resolve(const RuleTerm& rt, const detail::Binding& binding) {
  if (const auto* var = std::get_if<Variable>(&rt)) return binding.at(var->name);
  return Term(std::get<Iri>(rt));
}

class Engine {
 public:
  Engine(const Graph& data, const RuleSet* rules, const Graph& schema)
      : axioms_(schema), data_(data), rules_(rules) {
    result_.closure = data;
    for (const auto& [label, ns] : schema.prefixes().entries()) {
      if (!result_.closure.prefixes().contains(label)) {
        result_.closure.prefixes().bind(label, ns);
      }
    }
  }

  InferenceResult run() {
    bool changed = true;
    while (changed) {
      ++result_.iterations;
      changed = axiom_pass();
      if (rules_ != nullptr) changed = rule_pass() || changed;
    }
    for (const auto& [label, ns] : result_.closure.prefixes().entries()) {
      result_.inferred.prefixes().bind(label, ns);
    }
    for (const Triple& t : result_.closure) {
      if (!data_.contains(t)) result_.inferred.insert(t);
    }
    return std::move(result_);
  }

 private:
  // Saturates domain/range typing and subclass/equivalence propagation
  // over the current closure. Complete in one sweep because derived type
  // triples are expanded transitively as they are queued.
  bool axiom_pass() {
    std::vector<std::pair<Triple, std::string>> pending;
    auto queue_type = [&](const Term& instance, const Iri& cls, const char* why) {
      queue_with_supers(pending, instance, cls, why);
    };

    for (const Triple& t : result_.closure) {
      if (t.predicate.value == iris::rdf_type) {
        if (const auto* cls = std::get_if<Iri>(&t.object)) {
          for (const SuperClass& super : axioms_.supers(*cls)) {
            queue_single(pending, t.subject, super.iri,
                         super.via_equivalence ? kAxiomEquivalence : kAxiomSubclass);
          }
        }
        continue;
      }
      if (const auto* domains = axioms_.domain_classes(t.predicate)) {
        for (const Iri& cls : *domains) queue_type(t.subject, cls, kAxiomDomain);
      }
      if (const auto* ranges = axioms_.range_classes(t.predicate)) {
        if (!is_literal(t.object)) {
          for (const Iri& cls : *ranges) queue_type(t.object, cls, kAxiomRange);
        }
      }
    }
    return commit(pending);
  }

  bool rule_pass() {
    std::vector<std::pair<Triple, std::string>> pending;
    for (const Rule& rule : rules_->rules) {
      std::vector<TriplePattern> body;
      body.reserve(rule.body.size());
      for (const Atom& atom : rule.body) body.push_back(atom_pattern(atom));

      for (const detail::Binding& binding : detail::join_patterns(result_.closure, body)) {
        for (const Atom& atom : rule.head) {
          if (const auto* cls = std::get_if<ClassAtom>(&atom)) {
            Term instance = resolve(cls->term, binding);
            if (is_literal(instance)) continue;  // would be an ill-formed subject
            queue_single(pending, instance, cls->class_iri, rule.id.c_str());
          } else {
            const auto& prop = std::get<PropertyAtom>(atom);
            Term subject = resolve(prop.subject, binding);
            if (is_literal(subject)) continue;
            pending.emplace_back(Triple(subject, prop.property, resolve(prop.object, binding)),
                                 rule.id);
          }
        }
      }
    }
    return commit(pending);
  }

  void queue_single(std::vector<std::pair<Triple, std::string>>& pending, const Term& instance,
                    const Iri& cls, const char* why) {
    pending.emplace_back(Triple(instance, Iri(iris::rdf_type), cls), why);
  }

  void queue_with_supers(std::vector<std::pair<Triple, std::string>>& pending,
                         const Term& instance, const Iri& cls, const char* why) {
    queue_single(pending, instance, cls, why);
    for (const SuperClass& super : axioms_.supers(cls)) {
      queue_single(pending, instance, super.iri,
                   super.via_equivalence ? kAxiomEquivalence : kAxiomSubclass);
    }
  }

  bool commit(std::vector<std::pair<Triple, std::string>>& pending) {
    bool changed = false;
    for (auto& [triple, why] : pending) {
      if (result_.closure.insert(triple)) {
        result_.provenance.emplace(std::move(triple), std::move(why));
        changed = true;
      }
    }
    return changed;
  }

  SchemaAxioms axioms_;
  const Graph& data_;
  const RuleSet* rules_;
  InferenceResult result_;
};

}  // namespace

InferenceResult schema_closure(const Graph& data, const Graph& schema) {
  return Engine(data, nullptr, schema).run();
}

InferenceResult apply_rules(const Graph& data, const RuleSet& rules, const Graph& schema) {
  return Engine(data, &rules, schema).run();
}

// ---------------------------------------------------------------------------
// Rule document parsing

namespace {

using detail::Cursor;

enum class RTok { Pname, Var, IriRef, Caret, Arrow, LParen, RParen, Comma, Dot, Word, Newline, Eof };

struct RToken {
  RTok kind;
  std::string text;
  std::string local;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<RToken> lex_rules(std::string_view text) {
  Cursor c(text);
  std::vector<RToken> out;
  auto push = [&out](RTok kind, std::size_t line, std::size_t col, std::string t = "",
                     std::string l = "") {
    out.push_back(RToken{kind, std::move(t), std::move(l), line, col});
  };
  while (true) {
    while (!c.at_end() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\r')) c.advance();
    if (!c.at_end() && c.peek() == '#') {
      while (!c.at_end() && c.peek() != '\n') c.advance();
    }
    std::size_t line = c.line(), col = c.column();
    if (c.at_end()) {
      push(RTok::Eof, line, col);
      return out;
    }
    char ch = c.peek();
    switch (ch) {
      case '\n': c.advance(); push(RTok::Newline, line, col); continue;
      case '^': c.advance(); push(RTok::Caret, line, col); continue;
      case '(': c.advance(); push(RTok::LParen, line, col); continue;
      case ')': c.advance(); push(RTok::RParen, line, col); continue;
      case ',': c.advance(); push(RTok::Comma, line, col); continue;
      case '.': c.advance(); push(RTok::Dot, line, col); continue;
      case '-':
        c.advance();
        if (c.peek() != '>') c.fail("expected \"->\"", "-");
        c.advance();
        push(RTok::Arrow, line, col);
        continue;
      case '?': {
        c.advance();
        std::string name;
        while (Cursor::is_name_char(c.peek())) name.push_back(c.advance());
        if (name.empty()) c.fail("expected variable name after \"?\"");
        push(RTok::Var, line, col, std::move(name));
        continue;
      }
      case '<': {
        c.advance();
        std::string iri;
        while (!c.at_end() && c.peek() != '>' && c.peek() != '\n') iri.push_back(c.advance());
        if (c.at_end() || c.peek() != '>') c.fail("unterminated IRI");
        c.advance();
        push(RTok::IriRef, line, col, std::move(iri));
        continue;
      }
      default:
        break;
    }
    if (Cursor::is_name_start(ch)) {
      std::string word;
      word.push_back(c.advance());
      while (Cursor::is_name_char(c.peek())) word.push_back(c.advance());
      if (c.peek() == ':') {
        c.advance();
        std::string local;
        while (Cursor::is_name_char(c.peek())) local.push_back(c.advance());
        push(RTok::Pname, line, col, std::move(word), std::move(local));
      } else {
        push(RTok::Word, line, col, std::move(word));
      }
      continue;
    }
    c.fail("unexpected character", std::string(1, ch));
  }
}

class RuleParser {
 public:
  RuleParser(std::string_view text, const PrefixMap& base) : tokens_(lex_rules(text)) {
    for (const auto& [label, ns] : base.entries()) prefixes_.bind(label, ns);
  }

  RuleSet run() {
    RuleSet set;
    while (true) {
      while (cur().kind == RTok::Newline) skip();
      if (cur().kind == RTok::Eof) break;
      if (cur().kind == RTok::Word && cur().text == "PREFIX") {
        parse_prefix_line();
        continue;
      }
      set.rules.push_back(parse_rule("rule" + std::to_string(set.rules.size() + 1)));
    }
    return set;
  }

 private:
  std::vector<RToken> tokens_;
  std::size_t index_ = 0;
  PrefixMap prefixes_;

  const RToken& cur() const { return tokens_[index_]; }
  void skip() { ++index_; }
  void skip_newlines() {
    while (cur().kind == RTok::Newline) skip();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(cur().line, cur().column, message, cur().text);
  }

  void parse_prefix_line() {
    skip();  // PREFIX
    if (cur().kind != RTok::Pname || !cur().local.empty()) fail("expected prefix label");
    std::string label = cur().text;
    skip();
    if (cur().kind != RTok::IriRef) fail("expected namespace IRI");
    prefixes_.bind(std::move(label), cur().text);
    skip();
  }

  Iri expand(const RToken& t) const {
    const std::string* ns = prefixes_.find(t.text);
    if (ns == nullptr) {
      throw UnboundPrefixError("unbound prefix \"" + t.text + ":\" at " +
                               std::to_string(t.line) + ":" + std::to_string(t.column));
    }
    return Iri(*ns + t.local);
  }

  RuleTerm parse_rule_term() {
    if (cur().kind == RTok::Var) {
      Variable v(cur().text);
      skip();
      return v;
    }
    if (cur().kind == RTok::Pname) {
      Iri iri = expand(cur());
      skip();
      return iri;
    }
    fail("expected variable or prefixed name");
  }

  Atom parse_atom() {
    if (cur().kind != RTok::Pname) fail("expected atom");
    Iri predicate = expand(cur());
    skip();
    if (cur().kind != RTok::LParen) fail("expected \"(\"");
    skip();
    skip_newlines();
    RuleTerm first = parse_rule_term();
    skip_newlines();
    if (cur().kind == RTok::Comma) {
      skip();
      skip_newlines();
      RuleTerm second = parse_rule_term();
      skip_newlines();
      if (cur().kind != RTok::RParen) fail("expected \")\"");
      skip();
      return PropertyAtom{std::move(predicate), std::move(first), std::move(second)};
    }
    if (cur().kind != RTok::RParen) fail("expected \",\" or \")\"");
    skip();
    return ClassAtom{std::move(predicate), std::move(first)};
  }

  Rule parse_rule(std::string id) {
    Rule rule;
    rule.id = std::move(id);

    // Body atoms up to "->"; newlines only continue a rule after "^".
    while (true) {
      rule.body.push_back(parse_atom());
      skip_newlines();
      if (cur().kind == RTok::Caret) {
        skip();
        skip_newlines();
        continue;
      }
      if (cur().kind == RTok::Arrow) {
        skip();
        skip_newlines();
        break;
      }
      fail("expected \"^\" or \"->\"");
    }

    // Head atoms up to ".", end of line, or end of input.
    while (true) {
      rule.head.push_back(parse_atom());
      if (cur().kind == RTok::Caret) {
        skip();
        skip_newlines();
        continue;
      }
      if (cur().kind == RTok::Dot) {
        skip();
        break;
      }
      if (cur().kind == RTok::Newline || cur().kind == RTok::Eof) break;
      fail("expected \"^\", \".\", or end of line");
    }

    check_safety(rule);
    return rule;
  }

  static void collect_variables(const std::vector<Atom>& atoms, std::set<std::string>& into) {
    auto add = [&into](const RuleTerm& rt) {
      if (const auto* var = std::get_if<Variable>(&rt)) into.insert(var->name);
    };
    for (const Atom& atom : atoms) {
      if (const auto* cls = std::get_if<ClassAtom>(&atom)) {
        add(cls->term);
      } else {
        const auto& prop = std::get<PropertyAtom>(atom);
        add(prop.subject);
        add(prop.object);
      }
    }
  }

  static void check_safety(const Rule& rule) {
    std::set<std::string> body_vars, head_vars;
    collect_variables(rule.body, body_vars);
    collect_variables(rule.head, head_vars);
    for (const std::string& v : head_vars) {
      if (!body_vars.contains(v)) {
        throw UnsafeRuleError("unsafe rule " + rule.id + ": head variable ?" + v +
                              " does not occur in the body");
      }
    }
  }
};

}  // namespace

RuleSet parse_rules(std::string_view text, const PrefixMap& base_prefixes) {
  return RuleParser(text, base_prefixes).run();
}

}  // namespace aias
