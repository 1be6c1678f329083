#include "bgp.hpp"

namespace aias::detail {

namespace {

PatternTerm substitute(const PatternTerm& p, const Binding& binding) {
  if (const auto* var = std::get_if<Variable>(&p)) {
    auto it = binding.find(var->name);
    if (it != binding.end()) return it->second;
  }
  return p;
}

// Extends `binding` with the variables of `pattern` bound against `t`;
// nullopt when a repeated variable would need two different terms.
std::optional<Binding> unify(const TriplePattern& pattern, const Triple& t, Binding binding) {
  auto bind_position = [&binding](const PatternTerm& p, const Term& value) {
    if (const auto* var = std::get_if<Variable>(&p)) {
      auto [it, fresh] = binding.try_emplace(var->name, value);
      return fresh || it->second == value;
    }
    return true;  // concrete position already matched
  };
  if (!bind_position(pattern.subject, t.subject)) return std::nullopt;
  if (!bind_position(pattern.predicate, Term(t.predicate))) return std::nullopt;
  if (!bind_position(pattern.object, t.object)) return std::nullopt;
  return binding;
}

}  // namespace

std::vector<Binding> join_patterns(const Graph& g, std::span<const TriplePattern> patterns) {
  std::vector<Binding> current{Binding{}};
  for (const TriplePattern& pattern : patterns) {
    std::vector<Binding> next;
    for (const Binding& binding : current) {
      TriplePattern grounded{substitute(pattern.subject, binding),
                             substitute(pattern.predicate, binding),
                             substitute(pattern.object, binding)};
      for (const Triple& t : g.match(grounded)) {
        if (auto extended = unify(pattern, t, binding)) {
          next.push_back(std::move(*extended));
        }
      }
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

}  // namespace aias::detail
