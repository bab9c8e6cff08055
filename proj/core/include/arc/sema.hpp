#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arc/ast.hpp"
#include "arc/diagnostic.hpp"
#include "arc/symbols.hpp"
#include "arc/types.hpp"

namespace arc {

enum class ComponentKind { Structural, Behavioral };

struct ResolvedPort {
  std::string name;
  Direction direction = Direction::In;
  MsgType type;
  SourcePos pos;
  bool defaultedName = false;
};

struct ResolvedInstance {
  std::string name;
  std::string typeName;
  std::size_t declIndex = 0;  // into decl->subcomponents
  SourcePos pos;
  bool defaultedName = false;
};

struct ResolvedStateVar {
  std::string name;
  MsgType type;
  const StateVarDecl* decl = nullptr;
};

struct HandlerBinding {
  const HandlerDecl* handler = nullptr;
  std::string portName;
};

// A component declaration with every port and instance named, every type
// name resolved and its kind decided. Ports or state variables whose type
// does not resolve are left out (and reported).
struct ResolvedComponent {
  const ComponentDecl* decl = nullptr;
  std::vector<ResolvedPort> ports;
  std::vector<ResolvedInstance> subcomponents;
  std::vector<ResolvedStateVar> stateVars;
  ComponentKind kind = ComponentKind::Behavioral;
  std::vector<HandlerBinding> handlers;  // filled by check_handlers

  const std::string& name() const { return decl->name; }
  const ResolvedPort* find_port(const std::string& name) const;
  const ResolvedInstance* find_instance(const std::string& name) const;
  const ResolvedStateVar* find_state(const std::string& name) const;
  const HandlerDecl* handler_for(const std::string& port) const;
};

struct ResolveResult {
  ResolvedComponent component;
  Diagnostics diagnostics;
};

// Names omitted ports after their type (verbatim) and omitted instances
// after their type with the first letter lower-cased. E0203 port name clash,
// E0204 instance name clash or unnamed instance of a repeated type, E0209
// unknown type name, E0214 duplicate state variable.
ResolveResult resolve_defaults(const ComponentDecl& decl, const SymbolTable& table);

struct ClassifyResult {
  ComponentKind kind = ComponentKind::Behavioral;
  Diagnostics diagnostics;
};

// Subcomponents, connect statements or `autoconnect port` make a component
// structural; handlers or state make it behavioral; neither is a behavioral
// stub. Both at once is E0205.
ClassifyResult classify(const ResolvedComponent& rc);

struct HandlerCheckResult {
  std::vector<HandlerBinding> bindings;
  Diagnostics diagnostics;
};

// `on<X>Received` binds in-port x (first letter of X lower-cased).
// E0206 no such in-port, E0207 parameter type differs from the port type,
// E0208 second handler for one port.
HandlerCheckResult check_handlers(const ResolvedComponent& rc, const SymbolTable& table);

// Returns the port a handler method name binds to, or nullopt if the name
// does not have the form on<X>Received.
std::optional<std::string> bound_port_name(std::string_view methodName);

// Static typing of state initialisers and handler bodies. E0210 unknown
// name, E0211 send on a missing or incoming port, E0212 state variable with
// no default and no initialiser, E0213 type error.
Diagnostics typecheck_behavior(const ResolvedComponent& rc, const SymbolTable& table);

// Static type of an expression; nullopt if ill-typed (diagnostics appended).
struct TypeEnv {
  const SymbolTable* table = nullptr;
  const ResolvedComponent* component = nullptr;
  std::optional<std::string> paramName;
  MsgType paramType;
};
std::optional<MsgType> type_of(const Expr& e, const TypeEnv& env, Diagnostics& diags);

// Communication integrity. E0220 a handler reaches into another instance
// (qualified send/assign, or a dotted name that is not an enum literal);
// E0221 a port reference deeper than `instance.port`.
Diagnostics check_integrity(const ResolvedComponent& rc, const SymbolTable& table);

// Parsed sources plus everything the semantic passes derived from them.
// Holds pointers into its own units: movable, not copyable.
struct Program {
  std::vector<ModelUnit> units;
  SymbolTable symbols;
  std::map<std::string, ResolvedComponent> components;
  Diagnostics diagnostics;

  Program() = default;
  Program(Program&&) = default;
  Program& operator=(Program&&) = default;
  Program(const Program&) = delete;
  Program& operator=(const Program&) = delete;

  const ResolvedComponent* component(const std::string& name) const;
  bool ok() const { return !has_errors(diagnostics); }
};

// Runs every semantic pass over the given units. Components that fail to
// resolve are still entered (best effort) so later phases can report more.
Program analyze(std::vector<ModelUnit> units);

}  // namespace arc
