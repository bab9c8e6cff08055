#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arc {

// 1-based line/column inside a named source file.
struct SourcePos {
  std::string file;
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  auto operator<=>(const SourcePos&) const = default;
  bool operator==(const SourcePos&) const = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourcePos pos;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline Diagnostic error(std::string code, SourcePos pos, std::string message) {
  return {Severity::Error, std::move(code), std::move(message), std::move(pos)};
}

inline Diagnostic warning(std::string code, SourcePos pos, std::string message) {
  return {Severity::Warning, std::move(code), std::move(message), std::move(pos)};
}

bool has_errors(const Diagnostics& diags);
std::size_t count_errors(const Diagnostics& diags);

// Sorts by position, then code, then message, and drops exact duplicates.
// Multiple instances of one component type elaborate the same declarations,
// so the same diagnostic may be produced more than once.
void normalize(Diagnostics& diags);

// `<severity> <code> <file>:<line>:<col> <message>`
std::string format(const Diagnostic& d);
std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

}  // namespace arc
