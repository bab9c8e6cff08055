#include "arc/frontend.hpp"

#include <fstream>
#include <sstream>

#include "arc/parser.hpp"

namespace arc {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

Program compile(std::span<const SourceFile> files) {
  std::vector<ModelUnit> units;
  Diagnostics parse_diags;
  for (const SourceFile& f : files) {
    ParseResult r = parse_model(f.text, f.path);
    parse_diags.insert(parse_diags.end(), r.diagnostics.begin(), r.diagnostics.end());
    units.push_back(std::move(r.unit));
  }
  Program prog = analyze(std::move(units));
  prog.diagnostics.insert(prog.diagnostics.end(), parse_diags.begin(), parse_diags.end());
  normalize(prog.diagnostics);
  return prog;
}

}  // namespace arc
