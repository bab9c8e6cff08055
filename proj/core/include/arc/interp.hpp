#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arc/ast.hpp"
#include "arc/sema.hpp"
#include "arc/value.hpp"

namespace arc {

using InstanceState = std::map<std::string, RuntimeValue>;

struct Emission {
  std::string port;
  RuntimeValue value;
  std::size_t seq = 0;

  bool operator==(const Emission&) const = default;
};

// Division by zero during handler execution.
class RuntimeFault : public std::runtime_error {
 public:
  RuntimeFault(std::string message, SourcePos pos)
      : std::runtime_error(message), pos_(std::move(pos)) {}
  const SourcePos& pos() const { return pos_; }

 private:
  SourcePos pos_;
};

// Raised only if an ill-typed program reaches the interpreter; typechecked
// programs never trigger it.
class TypeConfusion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Boolean false, Integer 0, String "". Enums and Object have no default.
std::optional<RuntimeValue> default_value(const MsgType& t);

// Value of a literal expression (BoolLit, IntLit, StringLit, EnumLit).
RuntimeValue literal_value(const Expr& e);

// State at instantiation: initialiser if present, default otherwise.
InstanceState initial_state(const ResolvedComponent& rc);

struct Binding {
  std::string name;
  RuntimeValue value;
};

// Strict evaluation with short-circuit && and ||, wrapping 64-bit integer
// arithmetic. Throws RuntimeFault on division by zero.
RuntimeValue eval_expr(const Expr& e, const Binding& param, const InstanceState& state);

struct HandlerResult {
  InstanceState state;
  std::vector<Emission> emissions;
};

// Runs one handler on one message. Pure: `state` is not modified.
HandlerResult exec_handler(const HandlerDecl& h, const RuntimeValue& msg, const InstanceState& state);

}  // namespace arc
