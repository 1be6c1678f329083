#pragma once

// Shape-constraint validation: target-class shapes with per-property
// cardinality, class, and datatype constraints, evaluated against the
// schema closure of a data graph.

#include <optional>
#include <string>
#include <vector>

#include "aias/rdf.hpp"

namespace aias {

enum class Severity { Error, Warning };

struct PropertyConstraint {
  Iri path;
  std::optional<long> min_count;
  std::optional<long> max_count;
  std::optional<Iri> class_constraint;
  std::optional<Iri> datatype_constraint;
};

struct Shape {
  Term id;  // IRI or blank node of the shape declaration
  Iri target_class;
  std::vector<PropertyConstraint> constraints;
  Severity severity = Severity::Error;
  std::string check_id;  // report label; defaults to the shape id's text
};

struct ValidationResult {
  Severity severity = Severity::Error;
  Term focus;
  std::optional<Iri> path;
  std::string constraint;  // minCount | maxCount | class | datatype | lint id
  std::string expected;
  std::string actual;
  std::string message;
  std::string check_id;
};

struct ValidationReport {
  std::vector<ValidationResult> results;

  bool conforms() const;  // true iff no result carries error severity
};

// One Shape per node typed sh:NodeShape. Throws MalformedShapeError on
// missing targetClass or path, non-integer counts, min/max contradictions,
// and unrecognized predicates inside a property node.
std::vector<Shape> parse_shapes(const Graph& shape_graph);

// Validates all instances of each shape's target class (subclass
// instances included, via the closure over `schema`). Results are ordered
// by shape, then focus node in canonical term order.
ValidationReport validate(const Graph& data, const std::vector<Shape>& shapes,
                          const Graph& schema);

// Machine-readable report graph (one result node per entry with focus,
// path, message, and severity).
Graph report_to_graph(const ValidationReport& report);

}  // namespace aias
