#pragma once

#include <string_view>
#include <vector>

#include "arc/ast.hpp"
#include "arc/diagnostic.hpp"

namespace arc {

struct ParseResult {
  ModelUnit unit;
  Diagnostics diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

// Parses a `.arc` source. Syntax errors are reported as E0101 and the parser
// resynchronises at the next `;` or `}`, so one call can report several.
// Omitted port and instance names stay empty; filling them is sema's job.
ParseResult parse_model(std::string_view source, std::string_view file);

struct ExprParseResult {
  Expr expr;
  Diagnostics diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

// Parses a single expression, for tooling and tests.
ExprParseResult parse_expression(std::string_view source, std::string_view file = "<expr>");

struct StimulusResult {
  std::vector<Stimulus> stimuli;
  Diagnostics diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

// One `<port> <literal>` pair per line; blank lines and lines starting with
// `#` are skipped. Malformed lines are reported as E0105.
StimulusResult parse_stimulus(std::string_view source, std::string_view file = "<stimuli>");

}  // namespace arc
