#include "arc/types.hpp"

namespace arc {

std::string to_string(const MsgType& t) {
  switch (t.kind) {
    case TypeKind::Boolean: return "Boolean";
    case TypeKind::Integer: return "Integer";
    case TypeKind::String: return "String";
    case TypeKind::Object: return "Object";
    case TypeKind::Enum: return t.enumName;
  }
  return {};
}

std::optional<MsgType> builtin_type(std::string_view name) {
  if (name == "Boolean" || name == "boolean") return MsgType::boolean();
  if (name == "Integer" || name == "int" || name == "long") return MsgType::integer();
  if (name == "String") return MsgType::string();
  if (name == "Object") return MsgType::object();
  return std::nullopt;
}

bool is_subtype(const MsgType& a, const MsgType& b) {
  return a == b || b.kind == TypeKind::Object;
}

}  // namespace arc
