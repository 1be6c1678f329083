#include "aias/format.hpp"

#include <algorithm>

#include "aias/turtle.hpp"

namespace aias {

std::string print_report(const ValidationReport& report, const PrefixMap& prefixes) {
  std::string out = report.conforms() ? "conforms: true\n" : "conforms: false\n";
  for (const ValidationResult& r : report.results) {
    out += r.severity == Severity::Error ? "ERROR" : "WARNING";
    out += " focus=" + term_to_turtle(r.focus, prefixes);
    if (r.path) out += " path=" + term_to_turtle(Term(*r.path), prefixes);
    out += " check=" + r.check_id + ": " + r.message + "\n";
  }
  return out;
}

namespace {

std::vector<std::vector<std::string>> render_cells(const SolutionSequence& solutions,
                                                   const PrefixMap& prefixes) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(solutions.rows.size());
  for (const auto& row : solutions.rows) {
    std::vector<std::string> line;
    line.reserve(row.size());
    for (const Term& t : row) line.push_back(term_to_turtle(t, prefixes));
    cells.push_back(std::move(line));
  }
  return cells;
}

}  // namespace

std::string format_table(const SolutionSequence& solutions, const PrefixMap& prefixes) {
  auto cells = render_cells(solutions, prefixes);

  std::vector<std::size_t> widths;
  widths.reserve(solutions.variables.size());
  for (const Variable& v : solutions.variables) widths.push_back(v.name.size());
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }

  auto emit_row = [&widths](std::string& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out += "\n";
  };

  std::string out;
  std::vector<std::string> header;
  header.reserve(solutions.variables.size());
  for (const Variable& v : solutions.variables) header.push_back(v.name);
  emit_row(out, header);

  std::string rule;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    rule += std::string(widths[i], '-');
    if (i + 1 < widths.size()) rule += "  ";
  }
  out += rule + "\n";

  for (const auto& row : cells) emit_row(out, row);
  return out;
}

std::string format_tsv(const SolutionSequence& solutions, const PrefixMap& prefixes) {
  std::string out;
  for (std::size_t i = 0; i < solutions.variables.size(); ++i) {
    out += solutions.variables[i].name;
    out += i + 1 < solutions.variables.size() ? "\t" : "\n";
  }
  for (const auto& row : render_cells(solutions, prefixes)) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      out += i + 1 < row.size() ? "\t" : "\n";
    }
  }
  return out;
}

}  // namespace aias
