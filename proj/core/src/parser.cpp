#include "arc/parser.hpp"

#include <charconv>
#include <limits>
#include <string>
#include <utility>

#include "arc/lexer.hpp"

namespace arc {

std::string PortRef::str() const {
  std::string out;
  for (const auto& s : segments) {
    if (!out.empty()) out += '.';
    out += s;
  }
  return out;
}

Expr Expr::boolean(bool v, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::BoolLit;
  e.boolValue = v;
  e.pos = std::move(pos);
  return e;
}

Expr Expr::integer(std::int64_t v, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::IntLit;
  e.intValue = v;
  e.pos = std::move(pos);
  return e;
}

Expr Expr::string(std::string v, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::StringLit;
  e.text = std::move(v);
  e.pos = std::move(pos);
  return e;
}

Expr Expr::enumerator(std::string type, std::string member, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::EnumLit;
  e.typeName = std::move(type);
  e.text = std::move(member);
  e.pos = std::move(pos);
  return e;
}

Expr Expr::var(std::string name, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::VarRef;
  e.text = std::move(name);
  e.pos = std::move(pos);
  return e;
}

Expr Expr::unary(UnaryOp op, Expr operand, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::Unary;
  e.unaryOp = op;
  e.operands.push_back(std::move(operand));
  e.pos = std::move(pos);
  return e;
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs, SourcePos pos) {
  Expr e;
  e.kind = ExprKind::Binary;
  e.binaryOp = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.pos = std::move(pos);
  return e;
}

namespace {

struct SyntaxError {};

constexpr std::uint64_t kMaxMagnitude = std::uint64_t{1} << 63;

// Nesting bound for expressions and statements; keeps adversarial input
// from exhausting the stack.
constexpr int kMaxDepth = 256;

class Parser {
 public:
  Parser(std::vector<Token> tokens, Diagnostics& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  ModelUnit parse_unit(std::string_view file) {
    ModelUnit unit;
    unit.file = std::string(file);
    while (!at(TokenKind::Eof)) {
      try {
        skip_modifiers();
        if (at(TokenKind::KwComponent)) {
          unit.components.push_back(parse_component());
        } else {
          fail("expected 'component'");
        }
      } catch (const SyntaxError&) {
        sync(/*consume_brace=*/true);
      }
    }
    return unit;
  }

  Expr parse_lone_expression() {
    try {
      Expr e = parse_expr();
      expect(TokenKind::Eof, "after expression");
      return e;
    } catch (const SyntaxError&) {
      return Expr{};
    }
  }

  // Literal in state initialisers and stimuli: bool, optionally negated
  // integer, string, or Enum.Member.
  Expr parse_literal() {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::KwTrue:
        advance();
        return Expr::boolean(true, t.pos);
      case TokenKind::KwFalse:
        advance();
        return Expr::boolean(false, t.pos);
      case TokenKind::StringLiteral: {
        Expr e = Expr::string(t.text, t.pos);
        advance();
        return e;
      }
      case TokenKind::IntLiteral: {
        Expr e = Expr::integer(int_value(t, false), t.pos);
        advance();
        return e;
      }
      case TokenKind::Minus: {
        SourcePos pos = t.pos;
        advance();
        if (!at(TokenKind::IntLiteral)) fail("expected integer literal after '-'");
        Expr e = Expr::integer(int_value(cur(), true), pos);
        advance();
        return e;
      }
      case TokenKind::Identifier: {
        SourcePos pos = t.pos;
        std::string type = t.text;
        advance();
        expect(TokenKind::Dot, "in enum literal");
        std::string member = expect_ident("enum member");
        return Expr::enumerator(std::move(type), std::move(member), std::move(pos));
      }
      default:
        fail("expected literal");
    }
  }

  bool at(TokenKind k) const { return cur().kind == k; }
  const Token& cur() const { return toks_[i_]; }
  void skip_one() { advance(); }

 private:
  const Token& peek(std::size_t ahead = 1) const {
    const std::size_t j = i_ + ahead;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }

  void advance() {
    if (i_ + 1 < toks_.size()) ++i_;
  }

  bool accept(TokenKind k) {
    if (!at(k)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) {
    std::string found(spelling(cur().kind));
    if (cur().kind == TokenKind::Identifier) found += " '" + cur().text + "'";
    diags_.push_back(error("E0101", cur().pos, what + ", found " + found));
    throw SyntaxError{};
  }

  void expect(TokenKind k, std::string_view context) {
    if (!accept(k)) {
      std::string msg = "expected ";
      msg += spelling(k);
      if (!context.empty()) {
        msg += ' ';
        msg += context;
      }
      fail(msg);
    }
  }

  std::string expect_ident(std::string_view what) {
    if (!at(TokenKind::Identifier)) fail("expected " + std::string(what));
    std::string s = cur().text;
    advance();
    return s;
  }

  // Skips to just past the next `;`, or up to (and optionally past) the
  // `}` closing the current block. Nested `{...}` groups are skipped whole.
  void sync(bool consume_brace) {
    int depth = 0;
    while (!at(TokenKind::Eof)) {
      const TokenKind k = cur().kind;
      if (k == TokenKind::LBrace) {
        ++depth;
      } else if (k == TokenKind::RBrace) {
        if (depth == 0) {
          if (consume_brace) advance();
          return;
        }
        --depth;
      } else if (k == TokenKind::Semi && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  // Visibility modifiers carry no meaning and are dropped.
  void skip_modifiers() {
    while (at(TokenKind::KwPublic) || at(TokenKind::KwPrivate)) advance();
  }

  std::int64_t int_value(const Token& t, bool negative) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    const std::uint64_t limit = negative ? kMaxMagnitude : kMaxMagnitude - 1;
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || v > limit) {
      diags_.push_back(error("E0104", t.pos, "integer literal '" + t.text + "' out of range"));
      throw SyntaxError{};
    }
    if (negative) return static_cast<std::int64_t>(std::uint64_t{0} - v);
    return static_cast<std::int64_t>(v);
  }

  ComponentDecl parse_component() {
    ComponentDecl c;
    c.pos = cur().pos;
    expect(TokenKind::KwComponent, "");
    c.name = expect_ident("component name");
    expect(TokenKind::LBrace, "after component name");
    while (!at(TokenKind::RBrace) && !at(TokenKind::Eof)) {
      try {
        parse_element(c);
      } catch (const SyntaxError&) {
        sync(/*consume_brace=*/false);
      }
    }
    expect(TokenKind::RBrace, "to close component '" + c.name + "'");
    return c;
  }

  void parse_element(ComponentDecl& c) {
    skip_modifiers();
    switch (cur().kind) {
      case TokenKind::KwAutoconnect:
        c.autoconnectPos = cur().pos;
        advance();
        expect(TokenKind::KwPort, "after 'autoconnect'");
        expect(TokenKind::Semi, "");
        c.autoconnect = true;
        return;
      case TokenKind::KwPort:
        advance();
        do {
          c.ports.push_back(parse_port_item());
        } while (accept(TokenKind::Comma));
        expect(TokenKind::Semi, "after port list");
        return;
      case TokenKind::KwEnum:
        c.enums.push_back(parse_enum());
        return;
      case TokenKind::KwComponent:
        parse_subcomponents(c);
        return;
      case TokenKind::KwConnect:
        c.connects.push_back(parse_connect());
        return;
      case TokenKind::KwState:
        c.stateVars.push_back(parse_state());
        return;
      case TokenKind::KwHandler:
        c.handlers.push_back(parse_handler());
        return;
      default:
        fail("expected component element");
    }
  }

  PortDecl parse_port_item() {
    PortDecl p;
    p.pos = cur().pos;
    if (accept(TokenKind::KwIn)) {
      p.direction = Direction::In;
    } else if (accept(TokenKind::KwOut)) {
      p.direction = Direction::Out;
    } else {
      fail("expected 'in' or 'out'");
    }
    p.typeName = expect_ident("port type");
    if (at(TokenKind::Identifier)) {
      p.name = cur().text;
      advance();
    }
    return p;
  }

  EnumDecl parse_enum() {
    EnumDecl e;
    e.pos = cur().pos;
    expect(TokenKind::KwEnum, "");
    e.name = expect_ident("enum name");
    expect(TokenKind::LBrace, "after enum name");
    do {
      e.members.push_back(expect_ident("enum member"));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBrace, "to close enum");
    return e;
  }

  void parse_subcomponents(ComponentDecl& c) {
    const SourcePos start = cur().pos;
    expect(TokenKind::KwComponent, "");
    std::string type = expect_ident("component type");
    do {
      SubcomponentDecl s;
      s.typeName = type;
      s.pos = start;
      if (at(TokenKind::Identifier)) {
        s.pos = cur().pos;
        s.instanceName = cur().text;
        advance();
      }
      if (accept(TokenKind::LBracket)) {
        do {
          InlineConnect ic;
          ic.pos = cur().pos;
          ic.sourcePort = expect_ident("port name");
          expect(TokenKind::Arrow, "in inline connector");
          ic.target = parse_port_ref();
          s.inlineConnects.push_back(std::move(ic));
        } while (accept(TokenKind::Comma));
        expect(TokenKind::RBracket, "to close inline connectors");
      }
      c.subcomponents.push_back(std::move(s));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::Semi, "after component instantiation");
  }

  PortRef parse_port_ref() {
    PortRef r;
    r.pos = cur().pos;
    r.segments.push_back(expect_ident("port reference"));
    while (accept(TokenKind::Dot)) r.segments.push_back(expect_ident("port reference"));
    return r;
  }

  ConnectDecl parse_connect() {
    ConnectDecl d;
    d.pos = cur().pos;
    expect(TokenKind::KwConnect, "");
    d.source = parse_port_ref();
    expect(TokenKind::Arrow, "in connect statement");
    do {
      d.targets.push_back(parse_port_ref());
    } while (accept(TokenKind::Comma));
    expect(TokenKind::Semi, "after connect statement");
    return d;
  }

  StateVarDecl parse_state() {
    StateVarDecl s;
    s.pos = cur().pos;
    expect(TokenKind::KwState, "");
    s.typeName = expect_ident("state variable type");
    s.name = expect_ident("state variable name");
    if (accept(TokenKind::Assign)) s.initializer = parse_literal();
    expect(TokenKind::Semi, "after state variable");
    return s;
  }

  HandlerDecl parse_handler() {
    HandlerDecl h;
    h.pos = cur().pos;
    expect(TokenKind::KwHandler, "");
    h.methodName = expect_ident("handler name");
    expect(TokenKind::LParen, "after handler name");
    h.paramTypeName = expect_ident("parameter type");
    h.paramName = expect_ident("parameter name");
    expect(TokenKind::RParen, "after handler parameter");
    h.body = parse_block(0);
    return h;
  }

  std::vector<Stmt> parse_block(int depth) {
    expect(TokenKind::LBrace, "to open block");
    std::vector<Stmt> body;
    while (!at(TokenKind::RBrace) && !at(TokenKind::Eof)) {
      try {
        body.push_back(parse_stmt(depth));
      } catch (const SyntaxError&) {
        sync(/*consume_brace=*/false);
      }
    }
    expect(TokenKind::RBrace, "to close block");
    return body;
  }

  Stmt parse_stmt(int depth) {
    if (depth > kMaxDepth) fail("statement nesting too deep");
    Stmt s;
    s.pos = cur().pos;
    if (accept(TokenKind::KwIf)) {
      s.kind = StmtKind::If;
      expect(TokenKind::LParen, "after 'if'");
      s.value = parse_expr();
      expect(TokenKind::RParen, "after condition");
      s.thenBody = parse_block(depth + 1);
      if (accept(TokenKind::KwElse)) {
        s.hasElse = true;
        if (at(TokenKind::KwIf)) {
          s.elseBody.push_back(parse_stmt(depth + 1));
        } else {
          s.elseBody = parse_block(depth + 1);
        }
      }
      return s;
    }

    if (accept(TokenKind::KwThis)) expect(TokenKind::Dot, "after 'this'");
    std::vector<std::string> path;
    path.push_back(expect_ident("statement"));
    while (accept(TokenKind::Dot)) {
      if (at(TokenKind::Identifier) && cur().text == "send" && peek().is(TokenKind::LParen)) {
        advance();
        advance();
        s.kind = StmtKind::Send;
        s.value = parse_expr();
        expect(TokenKind::RParen, "after send argument");
        expect(TokenKind::Semi, "after send");
        s.target = std::move(path.back());
        path.pop_back();
        s.qualifier = std::move(path);
        return s;
      }
      path.push_back(expect_ident("name after '.'"));
    }
    if (accept(TokenKind::Assign)) {
      s.kind = StmtKind::Assign;
      s.value = parse_expr();
      expect(TokenKind::Semi, "after assignment");
      s.target = std::move(path.back());
      path.pop_back();
      s.qualifier = std::move(path);
      return s;
    }
    fail("expected '=' or '.send(...)'");
  }

  Expr parse_expr(int depth = 0) { return parse_or(depth); }

  void check_depth(int depth) {
    if (depth > kMaxDepth) fail("expression nesting too deep");
  }

  Expr parse_or(int depth) {
    Expr lhs = parse_and(depth);
    while (at(TokenKind::OrOr)) {
      SourcePos pos = cur().pos;
      advance();
      lhs = Expr::binary(BinaryOp::Or, std::move(lhs), parse_and(depth), std::move(pos));
    }
    return lhs;
  }

  Expr parse_and(int depth) {
    Expr lhs = parse_equality(depth);
    while (at(TokenKind::AndAnd)) {
      SourcePos pos = cur().pos;
      advance();
      lhs = Expr::binary(BinaryOp::And, std::move(lhs), parse_equality(depth), std::move(pos));
    }
    return lhs;
  }

  Expr parse_equality(int depth) {
    Expr lhs = parse_relational(depth);
    for (;;) {
      BinaryOp op;
      if (at(TokenKind::EqEq)) {
        op = BinaryOp::Eq;
      } else if (at(TokenKind::NotEq)) {
        op = BinaryOp::NotEq;
      } else {
        return lhs;
      }
      SourcePos pos = cur().pos;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_relational(depth), std::move(pos));
    }
  }

  Expr parse_relational(int depth) {
    Expr lhs = parse_additive(depth);
    for (;;) {
      BinaryOp op;
      switch (cur().kind) {
        case TokenKind::Less: op = BinaryOp::Less; break;
        case TokenKind::LessEq: op = BinaryOp::LessEq; break;
        case TokenKind::Greater: op = BinaryOp::Greater; break;
        case TokenKind::GreaterEq: op = BinaryOp::GreaterEq; break;
        default: return lhs;
      }
      SourcePos pos = cur().pos;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_additive(depth), std::move(pos));
    }
  }

  Expr parse_additive(int depth) {
    Expr lhs = parse_multiplicative(depth);
    for (;;) {
      BinaryOp op;
      if (at(TokenKind::Plus)) {
        op = BinaryOp::Add;
      } else if (at(TokenKind::Minus)) {
        op = BinaryOp::Sub;
      } else {
        return lhs;
      }
      SourcePos pos = cur().pos;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_multiplicative(depth), std::move(pos));
    }
  }

  Expr parse_multiplicative(int depth) {
    Expr lhs = parse_unary(depth);
    for (;;) {
      BinaryOp op;
      if (at(TokenKind::Star)) {
        op = BinaryOp::Mul;
      } else if (at(TokenKind::Slash)) {
        op = BinaryOp::Div;
      } else {
        return lhs;
      }
      SourcePos pos = cur().pos;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_unary(depth), std::move(pos));
    }
  }

  Expr parse_unary(int depth) {
    check_depth(depth);
    SourcePos pos = cur().pos;
    if (accept(TokenKind::Bang)) return Expr::unary(UnaryOp::Not, parse_unary(depth + 1), pos);
    if (accept(TokenKind::Minus)) {
      // -9223372036854775808 is only expressible as a folded literal.
      if (at(TokenKind::IntLiteral) && cur().text == "9223372036854775808") {
        Expr e = Expr::integer(int_value(cur(), true), pos);
        advance();
        return e;
      }
      return Expr::unary(UnaryOp::Neg, parse_unary(depth + 1), pos);
    }
    return parse_primary(depth);
  }

  Expr parse_primary(int depth) {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::KwTrue:
      case TokenKind::KwFalse:
      case TokenKind::StringLiteral:
        return parse_literal();
      case TokenKind::IntLiteral: {
        Expr e = Expr::integer(int_value(t, false), t.pos);
        advance();
        return e;
      }
      case TokenKind::KwThis: {
        SourcePos pos = t.pos;
        advance();
        expect(TokenKind::Dot, "after 'this'");
        return Expr::var(expect_ident("name after 'this.'"), std::move(pos));
      }
      case TokenKind::Identifier: {
        SourcePos pos = t.pos;
        std::string name = t.text;
        advance();
        if (accept(TokenKind::Dot)) {
          std::string member = expect_ident("name after '.'");
          return Expr::enumerator(std::move(name), std::move(member), std::move(pos));
        }
        return Expr::var(std::move(name), std::move(pos));
      }
      case TokenKind::LParen: {
        advance();
        Expr e = parse_expr(depth + 1);
        expect(TokenKind::RParen, "to close parenthesis");
        return e;
      }
      default:
        fail("expected expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Diagnostics& diags_;
};

}  // namespace

ParseResult parse_model(std::string_view source, std::string_view file) {
  ParseResult result;
  LexResult lexed = tokenize(source, file);
  result.diagnostics = std::move(lexed.diagnostics);
  Parser p(std::move(lexed.tokens), result.diagnostics);
  result.unit = p.parse_unit(file);
  normalize(result.diagnostics);
  return result;
}

ExprParseResult parse_expression(std::string_view source, std::string_view file) {
  ExprParseResult result;
  LexResult lexed = tokenize(source, file);
  result.diagnostics = std::move(lexed.diagnostics);
  Parser p(std::move(lexed.tokens), result.diagnostics);
  result.expr = p.parse_lone_expression();
  normalize(result.diagnostics);
  return result;
}

StimulusResult parse_stimulus(std::string_view source, std::string_view file) {
  StimulusResult result;
  std::uint32_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const std::size_t first = line.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == source.size()) break;
      continue;
    }

    LexResult lexed = tokenize(line, file);
    for (Token& t : lexed.tokens) t.pos.line = line_no;
    auto report = [&](const SourcePos& col_pos, const std::string& what) {
      SourcePos pos = col_pos;
      pos.line = line_no;
      result.diagnostics.push_back(error(
          "E0105", std::move(pos), "line " + std::to_string(line_no) + ": malformed stimulus: " + what));
    };
    if (!lexed.diagnostics.empty()) {
      report(lexed.diagnostics.front().pos, lexed.diagnostics.front().message);
    } else {
      Diagnostics local;
      Parser p(std::move(lexed.tokens), local);
      Stimulus s;
      s.line = line_no;
      try {
        if (!p.at(TokenKind::Identifier)) {
          local.push_back(error("E0101", p.cur().pos, "expected port name"));
          throw SyntaxError{};
        }
        s.port = p.cur().text;
        p.skip_one();
        s.literal = p.parse_literal();
        if (!p.at(TokenKind::Eof)) {
          local.push_back(error("E0101", p.cur().pos, "unexpected trailing input"));
          throw SyntaxError{};
        }
        result.stimuli.push_back(std::move(s));
      } catch (const SyntaxError&) {
        report(local.empty() ? SourcePos{std::string(file), line_no, 1} : local.front().pos,
               local.empty() ? std::string("syntax error") : local.front().message);
      }
    }
    if (end == source.size()) break;
  }
  normalize(result.diagnostics);
  return result;
}

}  // namespace arc
