#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace arc {

enum class TypeKind { Boolean, Integer, String, Object, Enum };

// Message/value type. Enum types are nominal: two enum types are the same
// iff their names are.
struct MsgType {
  TypeKind kind = TypeKind::Object;
  std::string enumName;

  static MsgType boolean() { return {TypeKind::Boolean, {}}; }
  static MsgType integer() { return {TypeKind::Integer, {}}; }
  static MsgType string() { return {TypeKind::String, {}}; }
  static MsgType object() { return {TypeKind::Object, {}}; }
  static MsgType enumeration(std::string name) { return {TypeKind::Enum, std::move(name)}; }

  bool operator==(const MsgType&) const = default;
  auto operator<=>(const MsgType&) const = default;
};

// Canonical spelling: Boolean, Integer, String, Object or the enum name.
std::string to_string(const MsgType& t);

// Built-in type names, including the lower-case Java spellings `boolean`,
// `int` and `long`. Returns nullopt for anything else (possibly an enum).
std::optional<MsgType> builtin_type(std::string_view name);

// a <: b iff a == b or b is Object.
bool is_subtype(const MsgType& a, const MsgType& b);

}  // namespace arc
