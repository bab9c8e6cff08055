#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "arc/ast.hpp"
#include "arc/diagnostic.hpp"
#include "arc/types.hpp"

namespace arc {

// Global universe of component and enum types. Entries point into the
// ModelUnits passed to build_symbols, which must outlive the table.
struct SymbolTable {
  std::map<std::string, const ComponentDecl*> componentTypes;
  std::map<std::string, const EnumDecl*> enumTypes;

  const ComponentDecl* component(const std::string& name) const;
  const EnumDecl* enumeration(const std::string& name) const;

  // Built-in name or declared enum; nullopt if unknown.
  std::optional<MsgType> resolve_type(std::string_view name) const;
  bool has_member(const std::string& enumName, const std::string& member) const;
};

struct SymbolResult {
  SymbolTable table;
  Diagnostics diagnostics;
};

// E0201 duplicate component, E0202 duplicate enum (or an enum shadowing a
// built-in type), E0215 duplicate enum member. Type references are not
// checked here.
SymbolResult build_symbols(std::span<const ModelUnit> units);

}  // namespace arc
