#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "arc/types.hpp"

namespace arc {

struct EnumValue {
  std::string type;
  std::string member;

  bool operator==(const EnumValue&) const = default;
};

// Immutable message/state value. Sending copies it; there is no identity.
class RuntimeValue {
 public:
  RuntimeValue() : v_(false) {}
  explicit RuntimeValue(bool b) : v_(b) {}
  explicit RuntimeValue(std::int64_t i) : v_(i) {}
  explicit RuntimeValue(std::string s) : v_(std::move(s)) {}
  explicit RuntimeValue(const char* s) : v_(std::string(s)) {}
  explicit RuntimeValue(EnumValue e) : v_(std::move(e)) {}

  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_enum() const { return std::holds_alternative<EnumValue>(v_); }

  // Precondition: the value holds that alternative.
  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const EnumValue& as_enum() const { return std::get<EnumValue>(v_); }

  // Dynamic type of the value (never Object).
  MsgType type() const;

  bool operator==(const RuntimeValue&) const = default;

 private:
  std::variant<bool, std::int64_t, std::string, EnumValue> v_;
};

// Source-like rendering: true, 42, "text", Type.Member.
std::string render(const RuntimeValue& v);

}  // namespace arc
