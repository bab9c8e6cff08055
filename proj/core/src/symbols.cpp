#include "arc/symbols.hpp"

#include <set>

namespace arc {

const ComponentDecl* SymbolTable::component(const std::string& name) const {
  auto it = componentTypes.find(name);
  return it == componentTypes.end() ? nullptr : it->second;
}

const EnumDecl* SymbolTable::enumeration(const std::string& name) const {
  auto it = enumTypes.find(name);
  return it == enumTypes.end() ? nullptr : it->second;
}

std::optional<MsgType> SymbolTable::resolve_type(std::string_view name) const {
  if (auto t = builtin_type(name)) return t;
  if (enumTypes.count(std::string(name))) return MsgType::enumeration(std::string(name));
  return std::nullopt;
}

bool SymbolTable::has_member(const std::string& enumName, const std::string& member) const {
  const EnumDecl* e = enumeration(enumName);
  if (!e) return false;
  for (const auto& m : e->members) {
    if (m == member) return true;
  }
  return false;
}

SymbolResult build_symbols(std::span<const ModelUnit> units) {
  SymbolResult out;
  for (const ModelUnit& unit : units) {
    for (const ComponentDecl& c : unit.components) {
      auto [it, inserted] = out.table.componentTypes.emplace(c.name, &c);
      if (!inserted) {
        const SourcePos& first = it->second->pos;
        out.diagnostics.push_back(error("E0201", c.pos,
                                        "duplicate component '" + c.name + "' (first declared at " +
                                            first.file + ":" + std::to_string(first.line) + ")"));
      }
      for (const EnumDecl& e : c.enums) {
        if (builtin_type(e.name)) {
          out.diagnostics.push_back(
              error("E0202", e.pos, "enum '" + e.name + "' clashes with a built-in type"));
          continue;
        }
        auto [eit, einserted] = out.table.enumTypes.emplace(e.name, &e);
        if (!einserted) {
          out.diagnostics.push_back(error("E0202", e.pos, "duplicate enum '" + e.name + "'"));
        }
        std::set<std::string> seen;
        for (const auto& m : e.members) {
          if (!seen.insert(m).second) {
            out.diagnostics.push_back(
                error("E0215", e.pos, "duplicate member '" + m + "' in enum '" + e.name + "'"));
          }
        }
      }
    }
  }
  normalize(out.diagnostics);
  return out;
}

}  // namespace arc
