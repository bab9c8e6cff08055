#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "arc/arch.hpp"
#include "arc/frontend.hpp"
#include "arc/sim.hpp"

namespace arc::test {

inline std::filesystem::path data_dir() { return ARC_TEST_DATA_DIR; }

inline std::filesystem::path fixture(const std::string& rel) { return data_dir() / "fixtures" / rel; }

inline std::string slurp(const std::filesystem::path& p) {
  auto text = read_file(p.string());
  if (!text) throw std::runtime_error("cannot read " + p.string());
  return *text;
}

inline std::vector<std::filesystem::path> coffee_files() {
  return {fixture("coffee/CoffeeMachine.arc"), fixture("coffee/CoffeeProcessingUnit.arc"),
          fixture("coffee/BeanSensor.arc"), fixture("coffee/Display.arc")};
}

inline Program compile_paths(const std::vector<std::filesystem::path>& paths) {
  std::vector<SourceFile> files;
  for (const auto& p : paths) files.push_back({p.filename().string(), slurp(p)});
  return compile(files);
}

inline Program compile_text(const std::string& text, const std::string& file = "test.arc") {
  std::vector<SourceFile> files{{file, text}};
  return compile(files);
}

inline Program coffee_program() { return compile_paths(coffee_files()); }

// Elaborated + flattened architecture; owns nothing the program owns, so
// keep the program alive alongside it.
struct Built {
  ElaborateResult elab;
  FlattenResult flat;

  const ElaboratedArchitecture& arch() const { return elab.architecture; }
  const RoutingTable& routes() const { return flat.table; }
};

inline Built build(const Program& prog, const std::string& root) {
  Built b{elaborate(root, prog), {}};
  if (b.elab.ok()) b.flat = flatten(b.elab.architecture);
  return b;
}

inline bool has_code(const Diagnostics& diags, const std::string& code) {
  for (const auto& d : diags) {
    if (d.code == code) return true;
  }
  return false;
}

inline std::size_t count_code(const Diagnostics& diags, const std::string& code) {
  std::size_t n = 0;
  for (const auto& d : diags) n += d.code == code;
  return n;
}

}  // namespace arc::test
