#include "arc/printer.hpp"

#include <string>

namespace arc {

namespace {

const char* op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
    case BinaryOp::Eq: return "==";
    case BinaryOp::NotEq: return "!=";
    case BinaryOp::Less: return "<";
    case BinaryOp::LessEq: return "<=";
    case BinaryOp::Greater: return ">";
    case BinaryOp::GreaterEq: return ">=";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
  }
  return "?";
}

// Compound operands are always parenthesised; parentheses leave no trace in
// the AST, so this keeps printing trivially precedence-safe.
void print_operand(std::string& out, const Expr& e) {
  const bool compound = e.kind == ExprKind::Unary || e.kind == ExprKind::Binary ||
                        (e.kind == ExprKind::IntLit && e.intValue < 0);
  if (compound) out += '(';
  out += print(e);
  if (compound) out += ')';
}

void indent(std::string& out, int level) { out.append(static_cast<std::size_t>(level) * 2, ' '); }

void print_body(std::string& out, const std::vector<Stmt>& body, int level);

void print_stmt(std::string& out, const Stmt& s, int level) {
  indent(out, level);
  switch (s.kind) {
    case StmtKind::Send:
    case StmtKind::Assign:
      for (const auto& q : s.qualifier) out += q + '.';
      out += s.target;
      if (s.kind == StmtKind::Send) {
        out += ".send(" + print(s.value) + ");\n";
      } else {
        out += " = " + print(s.value) + ";\n";
      }
      return;
    case StmtKind::If:
      out += "if (" + print(s.value) + ") {\n";
      print_body(out, s.thenBody, level + 1);
      indent(out, level);
      out += '}';
      if (s.hasElse) {
        out += " else {\n";
        print_body(out, s.elseBody, level + 1);
        indent(out, level);
        out += '}';
      }
      out += '\n';
      return;
  }
}

void print_body(std::string& out, const std::vector<Stmt>& body, int level) {
  for (const auto& s : body) print_stmt(out, s, level);
}

template <typename T, typename F>
bool all_equal(const std::vector<T>& a, const std::vector<T>& b, F eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

bool same_ref(const PortRef& a, const PortRef& b) { return a.segments == b.segments; }

bool same_body(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  return all_equal(a, b, [](const Stmt& x, const Stmt& y) { return structurally_equal(x, y); });
}

}  // namespace

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c; break;
    }
  }
  out += '"';
  return out;
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::BoolLit: return e.boolValue ? "true" : "false";
    case ExprKind::IntLit: return std::to_string(e.intValue);
    case ExprKind::StringLit: return quote(e.text);
    case ExprKind::EnumLit: return e.typeName + "." + e.text;
    case ExprKind::VarRef: return e.text;
    case ExprKind::Unary: {
      std::string out = e.unaryOp == UnaryOp::Not ? "!" : "-";
      print_operand(out, e.operands[0]);
      return out;
    }
    case ExprKind::Binary: {
      std::string out;
      print_operand(out, e.operands[0]);
      out += ' ';
      out += op_text(e.binaryOp);
      out += ' ';
      print_operand(out, e.operands[1]);
      return out;
    }
  }
  return {};
}

std::string print(const ComponentDecl& c) {
  std::string out = "component " + c.name + " {\n";
  if (c.autoconnect) out += "  autoconnect port;\n";
  if (!c.ports.empty()) {
    out += "  port\n";
    for (std::size_t i = 0; i < c.ports.size(); ++i) {
      const PortDecl& p = c.ports[i];
      out += "    ";
      out += p.direction == Direction::In ? "in " : "out ";
      out += p.typeName;
      if (p.name) out += ' ' + *p.name;
      out += i + 1 == c.ports.size() ? ";\n" : ",\n";
    }
  }
  for (const auto& e : c.enums) {
    out += "  enum " + e.name + " { ";
    for (std::size_t i = 0; i < e.members.size(); ++i) {
      if (i) out += ", ";
      out += e.members[i];
    }
    out += " }\n";
  }
  for (const auto& s : c.subcomponents) {
    out += "  component " + s.typeName;
    if (s.instanceName) out += ' ' + *s.instanceName;
    if (!s.inlineConnects.empty()) {
      out += " [";
      for (std::size_t i = 0; i < s.inlineConnects.size(); ++i) {
        if (i) out += ", ";
        out += s.inlineConnects[i].sourcePort + "->" + s.inlineConnects[i].target.str();
      }
      out += ']';
    }
    out += ";\n";
  }
  for (const auto& d : c.connects) {
    out += "  connect " + d.source.str() + " -> ";
    for (std::size_t i = 0; i < d.targets.size(); ++i) {
      if (i) out += ", ";
      out += d.targets[i].str();
    }
    out += ";\n";
  }
  for (const auto& s : c.stateVars) {
    out += "  state " + s.typeName + ' ' + s.name;
    if (s.initializer) out += " = " + print(*s.initializer);
    out += ";\n";
  }
  for (const auto& h : c.handlers) {
    out += "  handler " + h.methodName + '(' + h.paramTypeName + ' ' + h.paramName + ") {\n";
    print_body(out, h.body, 2);
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string print(const ModelUnit& unit) {
  std::string out;
  for (std::size_t i = 0; i < unit.components.size(); ++i) {
    if (i) out += '\n';
    out += print(unit.components[i]);
  }
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::BoolLit: return a.boolValue == b.boolValue;
    case ExprKind::IntLit: return a.intValue == b.intValue;
    case ExprKind::StringLit:
    case ExprKind::VarRef: return a.text == b.text;
    case ExprKind::EnumLit: return a.typeName == b.typeName && a.text == b.text;
    case ExprKind::Unary:
      return a.unaryOp == b.unaryOp && structurally_equal(a.operands[0], b.operands[0]);
    case ExprKind::Binary:
      return a.binaryOp == b.binaryOp && structurally_equal(a.operands[0], b.operands[0]) &&
             structurally_equal(a.operands[1], b.operands[1]);
  }
  return false;
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == StmtKind::If) {
    return structurally_equal(a.value, b.value) && a.hasElse == b.hasElse &&
           same_body(a.thenBody, b.thenBody) && same_body(a.elseBody, b.elseBody);
  }
  return a.qualifier == b.qualifier && a.target == b.target && structurally_equal(a.value, b.value);
}

bool structurally_equal(const ComponentDecl& a, const ComponentDecl& b) {
  if (a.name != b.name || a.autoconnect != b.autoconnect) return false;
  const bool ports = all_equal(a.ports, b.ports, [](const PortDecl& x, const PortDecl& y) {
    return x.direction == y.direction && x.typeName == y.typeName && x.name == y.name;
  });
  const bool enums = all_equal(a.enums, b.enums, [](const EnumDecl& x, const EnumDecl& y) {
    return x.name == y.name && x.members == y.members;
  });
  const bool subs = all_equal(a.subcomponents, b.subcomponents,
                              [](const SubcomponentDecl& x, const SubcomponentDecl& y) {
                                return x.typeName == y.typeName && x.instanceName == y.instanceName &&
                                       all_equal(x.inlineConnects, y.inlineConnects,
                                                 [](const InlineConnect& p, const InlineConnect& q) {
                                                   return p.sourcePort == q.sourcePort &&
                                                          same_ref(p.target, q.target);
                                                 });
                              });
  const bool connects = all_equal(a.connects, b.connects, [](const ConnectDecl& x, const ConnectDecl& y) {
    return same_ref(x.source, y.source) && all_equal(x.targets, y.targets, same_ref);
  });
  const bool state = all_equal(a.stateVars, b.stateVars, [](const StateVarDecl& x, const StateVarDecl& y) {
    if (x.name != y.name || x.typeName != y.typeName) return false;
    if (x.initializer.has_value() != y.initializer.has_value()) return false;
    return !x.initializer || structurally_equal(*x.initializer, *y.initializer);
  });
  const bool handlers = all_equal(a.handlers, b.handlers, [](const HandlerDecl& x, const HandlerDecl& y) {
    return x.methodName == y.methodName && x.paramTypeName == y.paramTypeName &&
           x.paramName == y.paramName && same_body(x.body, y.body);
  });
  return ports && enums && subs && connects && state && handlers;
}

bool structurally_equal(const ModelUnit& a, const ModelUnit& b) {
  return all_equal(a.components, b.components, [](const ComponentDecl& x, const ComponentDecl& y) {
    return structurally_equal(x, y);
  });
}

}  // namespace arc
