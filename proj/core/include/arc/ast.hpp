#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arc/diagnostic.hpp"

namespace arc {

enum class Direction { In, Out };

enum class UnaryOp { Not, Neg };

enum class BinaryOp { And, Or, Eq, NotEq, Less, LessEq, Greater, GreaterEq, Add, Sub, Mul, Div };

enum class ExprKind { BoolLit, IntLit, StringLit, EnumLit, VarRef, Unary, Binary };

// Expression tree node. Which fields are meaningful depends on `kind`:
//   BoolLit   boolValue
//   IntLit    intValue
//   StringLit text
//   EnumLit   typeName, text (member). Any dotted `A.B` parses as EnumLit;
//             sema decides whether `A` really is an enum type.
//   VarRef    text
//   Unary     unaryOp, operands[0]
//   Binary    binaryOp, operands[0..1]
struct Expr {
  ExprKind kind = ExprKind::BoolLit;
  SourcePos pos;
  bool boolValue = false;
  std::int64_t intValue = 0;
  std::string text;
  std::string typeName;
  UnaryOp unaryOp = UnaryOp::Not;
  BinaryOp binaryOp = BinaryOp::And;
  std::vector<Expr> operands;

  static Expr boolean(bool v, SourcePos pos = {});
  static Expr integer(std::int64_t v, SourcePos pos = {});
  static Expr string(std::string v, SourcePos pos = {});
  static Expr enumerator(std::string type, std::string member, SourcePos pos = {});
  static Expr var(std::string name, SourcePos pos = {});
  static Expr unary(UnaryOp op, Expr operand, SourcePos pos = {});
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs, SourcePos pos = {});

  bool is_literal() const {
    return kind == ExprKind::BoolLit || kind == ExprKind::IntLit ||
           kind == ExprKind::StringLit || kind == ExprKind::EnumLit;
  }
};

enum class StmtKind { Send, Assign, If };

// Send:   qualifier.target.send(value)
// Assign: qualifier.target = value
// If:     if (value) { thenBody } else { elseBody }
// `qualifier` holds any instance names written before the port or variable
// (`cpu.message.send(..)`); a leading `this.` is dropped by the parser.
// Non-empty qualifiers are rejected by the integrity check.
struct Stmt {
  StmtKind kind = StmtKind::Send;
  SourcePos pos;
  std::vector<std::string> qualifier;
  std::string target;
  Expr value;
  std::vector<Stmt> thenBody;
  std::vector<Stmt> elseBody;
  bool hasElse = false;
};

struct PortDecl {
  Direction direction = Direction::In;
  std::string typeName;
  std::optional<std::string> name;
  SourcePos pos;
};

// `port` or `instance.port`. The grammar allows at most one dot; deeper
// paths are still parsed so the integrity check can reject them.
struct PortRef {
  std::vector<std::string> segments;
  SourcePos pos;

  bool is_own() const { return segments.size() == 1; }
  const std::string& port() const { return segments.back(); }
  // Only meaningful when segments.size() == 2.
  const std::string& instance() const { return segments.front(); }
  std::string str() const;
};

struct InlineConnect {
  std::string sourcePort;
  PortRef target;
  SourcePos pos;
};

struct SubcomponentDecl {
  std::string typeName;
  std::optional<std::string> instanceName;
  std::vector<InlineConnect> inlineConnects;
  SourcePos pos;
};

struct ConnectDecl {
  PortRef source;
  std::vector<PortRef> targets;
  SourcePos pos;
};

struct EnumDecl {
  std::string name;
  std::vector<std::string> members;
  SourcePos pos;
};

struct StateVarDecl {
  std::string name;
  std::string typeName;
  std::optional<Expr> initializer;
  SourcePos pos;
};

struct HandlerDecl {
  std::string methodName;
  std::string paramTypeName;
  std::string paramName;
  std::vector<Stmt> body;
  SourcePos pos;
};

struct ComponentDecl {
  std::string name;
  bool autoconnect = false;
  SourcePos autoconnectPos;
  std::vector<PortDecl> ports;
  std::vector<EnumDecl> enums;
  std::vector<SubcomponentDecl> subcomponents;
  std::vector<ConnectDecl> connects;
  std::vector<StateVarDecl> stateVars;
  std::vector<HandlerDecl> handlers;
  SourcePos pos;
};

struct ModelUnit {
  std::string file;
  std::vector<ComponentDecl> components;
};

struct Stimulus {
  std::string port;
  Expr literal;
  std::uint32_t line = 0;
};

}  // namespace arc
