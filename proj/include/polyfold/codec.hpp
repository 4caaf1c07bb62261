#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polyfold/decisions.hpp"
#include "polyfold/model.hpp"

namespace polyfold {

struct ParseError {
  int line = 0;
  int column = 0;
  std::string code;
  std::string message;
  std::string token;
};

struct ParseResult {
  bool ok = false;
  SimplePolyhedron polyhedron;
  std::vector<ParseError> errors;          // syntax / reference errors
  std::vector<ValidationIssue> validation;  // structural errors from validate()
};

// Parses the .spoly text format.  Collects all recoverable errors instead of
// stopping at the first; on success the polyhedron has passed validate().
ParseResult parse_spoly(const std::string& text);

// Canonical text form: declarations sorted by id, boundary words rotated to
// their minimal representative.  Byte-identical for structurally equal
// inputs.  Throws Error(kInvalidInput) if validation fails.
std::string emit_spoly(const SimplePolyhedron& p);

// Analysis report as JSON (sorted keys, UTF-8).
std::string emit_report_json(const AnalysisBundle& bundle);

// Order-insensitive normal form used by emission and by equality tests.
SimplePolyhedron canonicalized(const SimplePolyhedron& p);
bool structurally_equal(const SimplePolyhedron& a, const SimplePolyhedron& b);

}  // namespace polyfold
