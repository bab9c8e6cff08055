#include "arc/sema.hpp"

namespace arc {

namespace {

Diagnostic type_error(const SourcePos& pos, std::string msg) {
  return error("E0213", pos, std::move(msg));
}

std::string binary_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::And: return "'&&'";
    case BinaryOp::Or: return "'||'";
    case BinaryOp::Eq: return "'=='";
    case BinaryOp::NotEq: return "'!='";
    case BinaryOp::Less: return "'<'";
    case BinaryOp::LessEq: return "'<='";
    case BinaryOp::Greater: return "'>'";
    case BinaryOp::GreaterEq: return "'>='";
    case BinaryOp::Add: return "'+'";
    case BinaryOp::Sub: return "'-'";
    case BinaryOp::Mul: return "'*'";
    case BinaryOp::Div: return "'/'";
  }
  return "?";
}

class BodyChecker {
 public:
  BodyChecker(const TypeEnv& env, Diagnostics& diags) : env_(env), diags_(diags) {}

  void check(const std::vector<Stmt>& body) {
    for (const Stmt& s : body) check(s);
  }

 private:
  void check(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Send: {
        auto t = type_of(s.value, env_, diags_);
        if (!s.qualifier.empty()) return;  // integrity check reports these
        const ResolvedPort* port = env_.component->find_port(s.target);
        if (!port) {
          diags_.push_back(error("E0211", s.pos, "send on unknown port '" + s.target + "'"));
          return;
        }
        if (port->direction != Direction::Out) {
          diags_.push_back(error("E0211", s.pos, "send on in-port '" + s.target + "'"));
          return;
        }
        if (t && !is_subtype(*t, port->type)) {
          diags_.push_back(type_error(s.value.pos, "cannot send " + to_string(*t) + " on port '" +
                                                       port->name + "' of type " +
                                                       to_string(port->type)));
        }
        return;
      }
      case StmtKind::Assign: {
        auto t = type_of(s.value, env_, diags_);
        if (!s.qualifier.empty()) return;
        const ResolvedStateVar* var = env_.component->find_state(s.target);
        if (!var) {
          diags_.push_back(error("E0210", s.pos, "'" + s.target + "' is not a state variable"));
          return;
        }
        if (t && !is_subtype(*t, var->type)) {
          diags_.push_back(type_error(s.value.pos, "cannot assign " + to_string(*t) + " to '" +
                                                       var->name + "' of type " +
                                                       to_string(var->type)));
        }
        return;
      }
      case StmtKind::If: {
        auto t = type_of(s.value, env_, diags_);
        if (t && *t != MsgType::boolean()) {
          diags_.push_back(type_error(s.value.pos, "condition must be Boolean, not " + to_string(*t)));
        }
        check(s.thenBody);
        check(s.elseBody);
        return;
      }
    }
  }

  const TypeEnv& env_;
  Diagnostics& diags_;
};

}  // namespace

std::optional<MsgType> type_of(const Expr& e, const TypeEnv& env, Diagnostics& diags) {
  switch (e.kind) {
    case ExprKind::BoolLit: return MsgType::boolean();
    case ExprKind::IntLit: return MsgType::integer();
    case ExprKind::StringLit: return MsgType::string();
    case ExprKind::EnumLit: {
      if (!env.table->enumeration(e.typeName)) return std::nullopt;  // integrity: E0220
      if (!env.table->has_member(e.typeName, e.text)) {
        diags.push_back(error("E0210", e.pos, "enum '" + e.typeName + "' has no member '" + e.text + "'"));
        return std::nullopt;
      }
      return MsgType::enumeration(e.typeName);
    }
    case ExprKind::VarRef: {
      if (env.paramName && *env.paramName == e.text) return env.paramType;
      if (env.component) {
        if (const ResolvedStateVar* v = env.component->find_state(e.text)) return v->type;
        if (env.component->find_port(e.text)) {
          diags.push_back(error("E0210", e.pos,
                                "port '" + e.text +
                                    "' cannot be read; use the handler parameter"));
          return std::nullopt;
        }
      }
      diags.push_back(error("E0210", e.pos, "unknown name '" + e.text + "'"));
      return std::nullopt;
    }
    case ExprKind::Unary: {
      auto t = type_of(e.operands[0], env, diags);
      if (!t) return std::nullopt;
      const MsgType want = e.unaryOp == UnaryOp::Not ? MsgType::boolean() : MsgType::integer();
      if (*t != want) {
        diags.push_back(type_error(e.pos, std::string(e.unaryOp == UnaryOp::Not ? "'!'" : "unary '-'") +
                                              " expects " + to_string(want) + ", not " + to_string(*t)));
        return std::nullopt;
      }
      return want;
    }
    case ExprKind::Binary: {
      auto l = type_of(e.operands[0], env, diags);
      auto r = type_of(e.operands[1], env, diags);
      if (!l || !r) return std::nullopt;
      auto mismatch = [&](const std::string& expected) -> std::optional<MsgType> {
        diags.push_back(type_error(e.pos, binary_name(e.binaryOp) + " expects " + expected + ", not " +
                                              to_string(*l) + " and " + to_string(*r)));
        return std::nullopt;
      };
      switch (e.binaryOp) {
        case BinaryOp::And:
        case BinaryOp::Or:
          if (*l == MsgType::boolean() && *r == MsgType::boolean()) return MsgType::boolean();
          return mismatch("Boolean operands");
        case BinaryOp::Sub:
        case BinaryOp::Mul:
        case BinaryOp::Div:
          if (*l == MsgType::integer() && *r == MsgType::integer()) return MsgType::integer();
          return mismatch("Integer operands");
        case BinaryOp::Less:
        case BinaryOp::LessEq:
        case BinaryOp::Greater:
        case BinaryOp::GreaterEq:
          if (*l == MsgType::integer() && *r == MsgType::integer()) return MsgType::boolean();
          return mismatch("Integer operands");
        case BinaryOp::Add:
          if (*l == *r && (l->kind == TypeKind::Integer || l->kind == TypeKind::String)) return *l;
          return mismatch("two Integer or two String operands");
        case BinaryOp::Eq:
        case BinaryOp::NotEq:
          if (*l == *r) return MsgType::boolean();
          return mismatch("operands of the same type");
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Diagnostics typecheck_behavior(const ResolvedComponent& rc, const SymbolTable& table) {
  Diagnostics diags;

  TypeEnv state_env{&table, nullptr, std::nullopt, MsgType::object()};
  for (const ResolvedStateVar& v : rc.stateVars) {
    const StateVarDecl& d = *v.decl;
    if (!d.initializer) {
      if (v.type.kind == TypeKind::Enum || v.type.kind == TypeKind::Object) {
        diags.push_back(error("E0212", d.pos,
                              "state variable '" + d.name + "' of type " + to_string(v.type) +
                                  " has no default value and needs an initializer"));
      }
      continue;
    }
    if (d.initializer->kind == ExprKind::EnumLit && !table.enumeration(d.initializer->typeName)) {
      diags.push_back(error("E0210", d.initializer->pos,
                            "unknown enum '" + d.initializer->typeName + "'"));
      continue;
    }
    auto t = type_of(*d.initializer, state_env, diags);
    if (t && !is_subtype(*t, v.type)) {
      diags.push_back(type_error(d.initializer->pos, "cannot initialize '" + d.name + "' of type " +
                                                         to_string(v.type) + " with " + to_string(*t)));
    }
  }

  for (const HandlerDecl& h : rc.decl->handlers) {
    TypeEnv env{&table, &rc, h.paramName, table.resolve_type(h.paramTypeName).value_or(MsgType::object())};
    BodyChecker(env, diags).check(h.body);
  }
  normalize(diags);
  return diags;
}

}  // namespace arc
