#include "arc/diagnostic.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace arc {

bool has_errors(const Diagnostics& diags) {
  return count_errors(diags) != 0;
}

std::size_t count_errors(const Diagnostics& diags) {
  return static_cast<std::size_t>(std::count_if(
      diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

void normalize(Diagnostics& diags) {
  auto key = [](const Diagnostic& d) {
    return std::tie(d.pos.file, d.pos.line, d.pos.column, d.code, d.message);
  };
  std::stable_sort(diags.begin(), diags.end(),
                   [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
}

std::string format(const Diagnostic& d) {
  std::string out = d.severity == Severity::Error ? "error " : "warning ";
  out += d.code;
  out += ' ';
  out += d.pos.file;
  out += ':';
  out += std::to_string(d.pos.line);
  out += ':';
  out += std::to_string(d.pos.column);
  out += ' ';
  out += d.message;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
  return os << format(d);
}

}  // namespace arc
