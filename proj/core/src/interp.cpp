#include "arc/interp.hpp"

#include <limits>

namespace arc {

namespace {

std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

std::int64_t wrap_sub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}

std::int64_t wrap_mul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

bool want_bool(const RuntimeValue& v) {
  if (!v.is_bool()) throw TypeConfusion("expected Boolean, got " + render(v));
  return v.as_bool();
}

std::int64_t want_int(const RuntimeValue& v) {
  if (!v.is_int()) throw TypeConfusion("expected Integer, got " + render(v));
  return v.as_int();
}

class Executor {
 public:
  Executor(const Binding& param, InstanceState& state, std::vector<Emission>& out)
      : param_(param), state_(state), out_(out) {}

  void run(const std::vector<Stmt>& body) {
    for (const Stmt& s : body) run(s);
  }

 private:
  void run(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Send:
        out_.push_back(Emission{s.target, eval_expr(s.value, param_, state_), out_.size()});
        return;
      case StmtKind::Assign: {
        auto it = state_.find(s.target);
        if (it == state_.end()) throw TypeConfusion("assignment to unknown state '" + s.target + "'");
        it->second = eval_expr(s.value, param_, state_);
        return;
      }
      case StmtKind::If:
        run(want_bool(eval_expr(s.value, param_, state_)) ? s.thenBody : s.elseBody);
        return;
    }
  }

  const Binding& param_;
  InstanceState& state_;
  std::vector<Emission>& out_;
};

}  // namespace

std::optional<RuntimeValue> default_value(const MsgType& t) {
  switch (t.kind) {
    case TypeKind::Boolean: return RuntimeValue(false);
    case TypeKind::Integer: return RuntimeValue(std::int64_t{0});
    case TypeKind::String: return RuntimeValue(std::string());
    case TypeKind::Object:
    case TypeKind::Enum: return std::nullopt;
  }
  return std::nullopt;
}

RuntimeValue literal_value(const Expr& e) {
  switch (e.kind) {
    case ExprKind::BoolLit: return RuntimeValue(e.boolValue);
    case ExprKind::IntLit: return RuntimeValue(e.intValue);
    case ExprKind::StringLit: return RuntimeValue(e.text);
    case ExprKind::EnumLit: return RuntimeValue(EnumValue{e.typeName, e.text});
    default: throw TypeConfusion("not a literal");
  }
}

InstanceState initial_state(const ResolvedComponent& rc) {
  InstanceState state;
  for (const ResolvedStateVar& v : rc.stateVars) {
    if (v.decl->initializer) {
      state.emplace(v.name, literal_value(*v.decl->initializer));
    } else if (auto d = default_value(v.type)) {
      state.emplace(v.name, *d);
    } else {
      throw TypeConfusion("state '" + v.name + "' has no initial value");
    }
  }
  return state;
}

RuntimeValue eval_expr(const Expr& e, const Binding& param, const InstanceState& state) {
  switch (e.kind) {
    case ExprKind::BoolLit:
    case ExprKind::IntLit:
    case ExprKind::StringLit:
    case ExprKind::EnumLit:
      return literal_value(e);
    case ExprKind::VarRef: {
      if (e.text == param.name) return param.value;
      auto it = state.find(e.text);
      if (it == state.end()) throw TypeConfusion("unbound name '" + e.text + "'");
      return it->second;
    }
    case ExprKind::Unary: {
      RuntimeValue v = eval_expr(e.operands[0], param, state);
      if (e.unaryOp == UnaryOp::Not) return RuntimeValue(!want_bool(v));
      return RuntimeValue(wrap_sub(0, want_int(v)));
    }
    case ExprKind::Binary: {
      const Expr& lhs = e.operands[0];
      const Expr& rhs = e.operands[1];
      if (e.binaryOp == BinaryOp::And) {
        return RuntimeValue(want_bool(eval_expr(lhs, param, state)) &&
                            want_bool(eval_expr(rhs, param, state)));
      }
      if (e.binaryOp == BinaryOp::Or) {
        return RuntimeValue(want_bool(eval_expr(lhs, param, state)) ||
                            want_bool(eval_expr(rhs, param, state)));
      }
      RuntimeValue l = eval_expr(lhs, param, state);
      RuntimeValue r = eval_expr(rhs, param, state);
      switch (e.binaryOp) {
        case BinaryOp::Eq: return RuntimeValue(l == r);
        case BinaryOp::NotEq: return RuntimeValue(l != r);
        case BinaryOp::Less: return RuntimeValue(want_int(l) < want_int(r));
        case BinaryOp::LessEq: return RuntimeValue(want_int(l) <= want_int(r));
        case BinaryOp::Greater: return RuntimeValue(want_int(l) > want_int(r));
        case BinaryOp::GreaterEq: return RuntimeValue(want_int(l) >= want_int(r));
        case BinaryOp::Add:
          if (l.is_string() && r.is_string()) return RuntimeValue(l.as_string() + r.as_string());
          return RuntimeValue(wrap_add(want_int(l), want_int(r)));
        case BinaryOp::Sub: return RuntimeValue(wrap_sub(want_int(l), want_int(r)));
        case BinaryOp::Mul: return RuntimeValue(wrap_mul(want_int(l), want_int(r)));
        case BinaryOp::Div: {
          const std::int64_t a = want_int(l);
          const std::int64_t b = want_int(r);
          if (b == 0) throw RuntimeFault("division by zero", e.pos);
          // The one overflowing quotient wraps like the other operators.
          if (a == std::numeric_limits<std::int64_t>::min() && b == -1) return RuntimeValue(a);
          return RuntimeValue(a / b);
        }
        case BinaryOp::And:
        case BinaryOp::Or:
          break;
      }
      break;
    }
  }
  throw TypeConfusion("malformed expression");
}

HandlerResult exec_handler(const HandlerDecl& h, const RuntimeValue& msg, const InstanceState& state) {
  HandlerResult result{state, {}};
  const Binding param{h.paramName, msg};
  Executor(param, result.state, result.emissions).run(h.body);
  return result;
}

}  // namespace arc
