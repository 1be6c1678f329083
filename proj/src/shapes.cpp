#include "aias/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "aias/error.hpp"
#include "aias/reasoner.hpp"
#include "aias/turtle.hpp"

namespace aias {

namespace {

Iri sh(std::string_view local) { return Iri(std::string(iris::sh_ns) + std::string(local)); }

std::string term_text(const Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return iri->value;
  if (const auto* blank = std::get_if<BlankNode>(&t)) return "_:" + blank->label;
  return std::get<Literal>(t).lexical;
}

std::vector<Term> objects_of(const Graph& g, const Term& subject, const Iri& predicate) {
  std::vector<Term> out;
  for (const Triple& t : g.match(TriplePattern{subject, Term(predicate), Variable("o")})) {
    out.push_back(t.object);
  }
  return out;
}

long parse_count(const Term& value, const std::string& what) {
  const auto* lit = std::get_if<Literal>(&value);
  if (lit == nullptr || lit->datatype.value != iris::xsd_integer) {
    throw MalformedShapeError(what + " must be an integer literal");
  }
  long parsed = 0;
  auto [end, ec] =
      std::from_chars(lit->lexical.data(), lit->lexical.data() + lit->lexical.size(), parsed);
  if (ec != std::errc{} || end != lit->lexical.data() + lit->lexical.size() || parsed < 0) {
    throw MalformedShapeError(what + " must be a non-negative integer, got \"" + lit->lexical +
                              "\"");
  }
  return parsed;
}

Iri parse_iri_value(const Term& value, const std::string& what) {
  const auto* iri = std::get_if<Iri>(&value);
  if (iri == nullptr) throw MalformedShapeError(what + " must be an IRI");
  return *iri;
}

PropertyConstraint parse_property_node(const Graph& g, const Term& node) {
  std::optional<Iri> path;
  PropertyConstraint constraint{Iri("urn:aias:unset"), {}, {}, {}, {}};
  bool has_any = false;

  for (const Triple& t : g.match(TriplePattern{node, Variable("p"), Variable("o")})) {
    const std::string& p = t.predicate.value;
    if (p == iris::rdf_type) continue;
    if (p == sh("path").value) {
      path = parse_iri_value(t.object, "sh:path");
    } else if (p == sh("minCount").value) {
      constraint.min_count = parse_count(t.object, "sh:minCount");
      has_any = true;
    } else if (p == sh("maxCount").value) {
      constraint.max_count = parse_count(t.object, "sh:maxCount");
      has_any = true;
    } else if (p == sh("class").value) {
      constraint.class_constraint = parse_iri_value(t.object, "sh:class");
      has_any = true;
    } else if (p == sh("datatype").value) {
      constraint.datatype_constraint = parse_iri_value(t.object, "sh:datatype");
      has_any = true;
    } else {
      throw MalformedShapeError("unknown constraint predicate in property node: " + p);
    }
  }

  if (!path.has_value()) {
    throw MalformedShapeError("property node of shape " + term_text(node) + " has no sh:path");
  }
  if (!has_any) {
    throw MalformedShapeError("property node for path " + path->value + " has no constraints");
  }
  if (constraint.min_count && constraint.max_count &&
      *constraint.min_count > *constraint.max_count) {
    throw MalformedShapeError("sh:minCount exceeds sh:maxCount for path " + path->value);
  }
  constraint.path = *path;
  return constraint;
}

}  // namespace

bool ValidationReport::conforms() const {
  return std::none_of(results.begin(), results.end(),
                      [](const ValidationResult& r) { return r.severity == Severity::Error; });
}

std::vector<Shape> parse_shapes(const Graph& shape_graph) {
  std::vector<Shape> shapes;
  for (const Triple& decl : shape_graph.match(
           TriplePattern{Variable("s"), Term(Iri(iris::rdf_type)), Term(sh("NodeShape"))})) {
    Shape shape{decl.subject, Iri("urn:aias:unset"), {}, Severity::Error, ""};

    auto targets = objects_of(shape_graph, decl.subject, sh("targetClass"));
    if (targets.empty()) {
      throw MalformedShapeError("shape " + term_text(decl.subject) + " has no sh:targetClass");
    }
    if (targets.size() > 1) {
      throw MalformedShapeError("shape " + term_text(decl.subject) +
                                " has multiple sh:targetClass values");
    }
    shape.target_class = parse_iri_value(targets.front(), "sh:targetClass");

    for (const Term& node : objects_of(shape_graph, decl.subject, sh("property"))) {
      shape.constraints.push_back(parse_property_node(shape_graph, node));
    }

    if (const auto* iri = std::get_if<Iri>(&decl.subject)) {
      shape.check_id = shape_graph.prefixes().shorten(iri->value).value_or(iri->value);
    } else {
      shape.check_id = term_text(decl.subject);
    }
    shapes.push_back(std::move(shape));
  }
  return shapes;
}

namespace {

void check_focus(const Graph& closure, const Shape& shape, const Term& focus,
                 const PropertyConstraint& c, std::vector<ValidationResult>& out) {
  std::vector<Term> values = objects_of(closure, focus, c.path);

  auto result = [&](std::string constraint, std::string expected, std::string actual,
                    std::string message) {
    out.push_back(ValidationResult{shape.severity, focus, c.path, std::move(constraint),
                                   std::move(expected), std::move(actual), std::move(message),
                                   shape.check_id});
  };

  if (c.min_count && std::cmp_less(values.size(), *c.min_count)) {
    result("minCount", ">= " + std::to_string(*c.min_count), std::to_string(values.size()),
           "expected at least " + std::to_string(*c.min_count) + " value(s) on " + c.path.value +
               ", found " + std::to_string(values.size()));
  }
  if (c.max_count && std::cmp_greater(values.size(), *c.max_count)) {
    result("maxCount", "<= " + std::to_string(*c.max_count), std::to_string(values.size()),
           "expected at most " + std::to_string(*c.max_count) + " value(s) on " + c.path.value +
               ", found " + std::to_string(values.size()));
  }
  if (c.class_constraint) {
    for (const Term& value : values) {
      bool ok = !is_literal(value) &&
                closure.contains(Triple(value, Iri(iris::rdf_type), *c.class_constraint));
      if (!ok) {
        result("class", c.class_constraint->value, term_text(value),
               "value " + term_text(value) + " is not an instance of " +
                   c.class_constraint->value);
      }
    }
  }
  if (c.datatype_constraint) {
    for (const Term& value : values) {
      const auto* lit = std::get_if<Literal>(&value);
      if (lit == nullptr || lit->datatype != *c.datatype_constraint) {
        result("datatype", c.datatype_constraint->value, term_text(value),
               "value " + term_text(value) + " is not a literal of datatype " +
                   c.datatype_constraint->value);
      }
    }
  }
}

}  // namespace

ValidationReport validate(const Graph& data, const std::vector<Shape>& shapes,
                          const Graph& schema) {
  Graph closure = schema_closure(data, schema).closure;

  ValidationReport report;
  for (const Shape& shape : shapes) {
    auto focuses = closure.match(
        TriplePattern{Variable("f"), Term(Iri(iris::rdf_type)), Term(shape.target_class)});
    for (const Triple& typing : focuses) {
      for (const PropertyConstraint& c : shape.constraints) {
        check_focus(closure, shape, typing.subject, c, report.results);
      }
    }
  }
  return report;
}

Graph report_to_graph(const ValidationReport& report) {
  Graph g;
  g.prefixes().bind("sh", std::string(iris::sh_ns));
  g.prefixes().bind("xsd", std::string(iris::xsd_ns));

  BlankNode root("report");
  g.insert(Triple(root, Iri(iris::rdf_type), sh("ValidationReport")));
  g.insert(Triple(root, sh("conforms"),
                  Literal::typed(report.conforms() ? "true" : "false", Iri(iris::xsd_boolean))));

  int index = 0;
  for (const ValidationResult& r : report.results) {
    BlankNode node("r" + std::to_string(index++));
    g.insert(Triple(root, sh("result"), node));
    g.insert(Triple(node, Iri(iris::rdf_type), sh("ValidationResult")));
    g.insert(Triple(node, sh("focusNode"), r.focus));
    if (r.path) g.insert(Triple(node, sh("resultPath"), *r.path));
    g.insert(Triple(node, sh("resultMessage"), Literal::plain(r.message)));
    g.insert(Triple(node, sh("resultSeverity"),
                    r.severity == Severity::Error ? sh("Violation") : sh("Warning")));
  }
  return g;
}

}  // namespace aias
