#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arc/sema.hpp"

namespace arc {

struct SourceFile {
  std::string path;
  std::string text;
};

std::optional<std::string> read_file(const std::string& path);

// Parses every file and runs semantic analysis over all of them together.
// Parse diagnostics are merged into the returned program's diagnostics.
Program compile(std::span<const SourceFile> files);

}  // namespace arc
