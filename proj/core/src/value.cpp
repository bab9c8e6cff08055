#include "arc/value.hpp"

#include "arc/printer.hpp"

namespace arc {

MsgType RuntimeValue::type() const {
  if (is_bool()) return MsgType::boolean();
  if (is_int()) return MsgType::integer();
  if (is_string()) return MsgType::string();
  return MsgType::enumeration(as_enum().type);
}

std::string render(const RuntimeValue& v) {
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_string()) return quote(v.as_string());
  return v.as_enum().type + "." + v.as_enum().member;
}

}  // namespace arc
