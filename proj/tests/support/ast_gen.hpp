#pragma once

// Random syntax trees that print to valid source.

#include <limits>
#include <random>
#include <string>
#include <vector>

#include "arc/ast.hpp"

namespace arc::test {

class AstGenerator {
 public:
  explicit AstGenerator(std::uint64_t seed) : rng_(seed) {}

  ModelUnit unit() {
    ModelUnit u;
    u.file = "gen.arc";
    const int n = pick(0, 3);
    for (int i = 0; i < n; ++i) u.components.push_back(component());
    return u;
  }

  Expr expr(int depth = 0) {
    const int k = pick(0, depth >= 4 ? 4 : 6);
    switch (k) {
      case 0: return Expr::boolean(chance(0.5));
      case 1: return Expr::integer(pick_int());
      case 2: return Expr::string(text());
      case 3: return Expr::enumerator(upper_name(), name());
      case 4: return Expr::var(name());
      case 5: return Expr::unary(chance(0.5) ? UnaryOp::Not : UnaryOp::Neg, expr(depth + 1));
      default:
        return Expr::binary(static_cast<BinaryOp>(pick(0, 11)), expr(depth + 1), expr(depth + 1));
    }
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::int64_t pick_int() {
    if (chance(0.1)) return std::numeric_limits<std::int64_t>::max();
    return std::uniform_int_distribution<std::int64_t>(0, 1000)(rng_);
  }

  std::string name() {
    static const std::vector<std::string> pool{"a", "b", "milk", "x1", "_t", "value", "Ports", "sendX", "inx"};
    return pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))];
  }
  std::string upper_name() {
    static const std::vector<std::string> pool{"Integer", "Boolean", "String", "Object", "E", "CoffeeType", "T2"};
    return pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))];
  }
  std::string text() {
    static const std::string chars = "ab \"\\\n\tz9";
    std::string s;
    const int n = pick(0, 6);
    for (int i = 0; i < n; ++i) s += chars[static_cast<std::size_t>(pick(0, static_cast<int>(chars.size()) - 1))];
    return s;
  }

  Expr literal() {
    switch (pick(0, 3)) {
      case 0: return Expr::boolean(chance(0.5));
      case 1: return Expr::integer(chance(0.5) ? -pick_int() : pick_int());
      case 2: return Expr::string(text());
      default: return Expr::enumerator(upper_name(), name());
    }
  }

  PortRef ref() {
    PortRef r;
    r.segments.push_back(name());
    if (chance(0.5)) r.segments.push_back(name());
    return r;
  }

  std::vector<Stmt> body(int depth) {
    std::vector<Stmt> out;
    const int n = pick(0, depth > 2 ? 1 : 3);
    for (int i = 0; i < n; ++i) {
      Stmt s;
      const int k = pick(0, depth > 2 ? 1 : 2);
      s.kind = k == 0 ? StmtKind::Send : k == 1 ? StmtKind::Assign : StmtKind::If;
      s.value = expr();
      if (s.kind == StmtKind::If) {
        s.thenBody = body(depth + 1);
        s.hasElse = chance(0.5);
        if (s.hasElse) s.elseBody = body(depth + 1);
      } else {
        if (chance(0.2)) s.qualifier.push_back(name());
        s.target = name();
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  ComponentDecl component() {
    ComponentDecl c;
    c.name = upper_name() + std::to_string(pick(0, 9));
    c.autoconnect = chance(0.3);
    for (int i = pick(0, 3); i > 0; --i) {
      PortDecl p;
      p.direction = chance(0.5) ? Direction::In : Direction::Out;
      p.typeName = upper_name();
      if (chance(0.7)) p.name = name();
      c.ports.push_back(std::move(p));
    }
    for (int i = pick(0, 1); i > 0; --i) {
      EnumDecl e;
      e.name = upper_name();
      for (int m = pick(1, 4); m > 0; --m) e.members.push_back(name());
      c.enums.push_back(std::move(e));
    }
    for (int i = pick(0, 2); i > 0; --i) {
      SubcomponentDecl s;
      s.typeName = upper_name();
      if (chance(0.6)) s.instanceName = name();
      for (int k = pick(0, 2); k > 0; --k) s.inlineConnects.push_back(InlineConnect{name(), ref(), {}});
      c.subcomponents.push_back(std::move(s));
    }
    for (int i = pick(0, 2); i > 0; --i) {
      ConnectDecl d;
      d.source = ref();
      for (int k = pick(1, 3); k > 0; --k) d.targets.push_back(ref());
      c.connects.push_back(std::move(d));
    }
    for (int i = pick(0, 2); i > 0; --i) {
      StateVarDecl s;
      s.name = name();
      s.typeName = upper_name();
      if (chance(0.5)) s.initializer = literal();
      c.stateVars.push_back(std::move(s));
    }
    for (int i = pick(0, 2); i > 0; --i) {
      HandlerDecl h;
      h.methodName = "on" + upper_name() + "Received";
      h.paramTypeName = upper_name();
      h.paramName = name();
      h.body = body(0);
      c.handlers.push_back(std::move(h));
    }
    return c;
  }

  std::mt19937_64 rng_;
};

}  // namespace arc::test
