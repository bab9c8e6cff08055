#include <doctest.h>

#include "arc/lexer.hpp"
#include "arc/parser.hpp"
#include "arc/printer.hpp"
#include "test_support.hpp"

using namespace arc;

namespace {

std::vector<TokenKind> kinds(const LexResult& r) {
  std::vector<TokenKind> out;
  for (const auto& t : r.tokens) out.push_back(t.kind);
  return out;
}

}  // namespace

TEST_CASE("tokenize: keywords, names and punctuation") {
  auto r = tokenize("component Display { port in String message; }", "t.arc");
  CHECK(r.diagnostics.empty());
  CHECK(kinds(r) == std::vector<TokenKind>{TokenKind::KwComponent, TokenKind::Identifier, TokenKind::LBrace,
                                           TokenKind::KwPort, TokenKind::KwIn, TokenKind::Identifier,
                                           TokenKind::Identifier, TokenKind::Semi, TokenKind::RBrace,
                                           TokenKind::Eof});
  CHECK(r.tokens[1].text == "Display");
  CHECK(r.tokens[1].pos.line == 1);
  CHECK(r.tokens[1].pos.column == 11);
}

TEST_CASE("tokenize: operators and literals") {
  auto r = tokenize("a->b == != <= >= && || ! 42 \"x\\n\" // trailing", "t.arc");
  CHECK(r.diagnostics.empty());
  CHECK(kinds(r) == std::vector<TokenKind>{TokenKind::Identifier, TokenKind::Arrow, TokenKind::Identifier,
                                           TokenKind::EqEq, TokenKind::NotEq, TokenKind::LessEq,
                                           TokenKind::GreaterEq, TokenKind::AndAnd, TokenKind::OrOr,
                                           TokenKind::Bang, TokenKind::IntLiteral, TokenKind::StringLiteral,
                                           TokenKind::Eof});
  CHECK(r.tokens[11].text == "x\n");
}

TEST_CASE("tokenize: the coffee machine listing") {
  auto r = tokenize(test::slurp(test::fixture("coffee/CoffeeMachine.arc")), "CoffeeMachine.arc");
  CHECK(r.diagnostics.empty());
  CHECK(r.tokens.size() > 60);
  CHECK(r.tokens.back().kind == TokenKind::Eof);
}

TEST_CASE("tokenize: unterminated string and illegal characters") {
  auto r = tokenize("port \"abc\n", "t.arc");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "E0102");
  CHECK(r.diagnostics[0].pos.line == 1);
  CHECK(r.diagnostics[0].pos.column == 6);
  CHECK(r.tokens.back().kind == TokenKind::Eof);

  auto bad = tokenize("a # b", "t.arc");
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].code == "E0103");
  CHECK(bad.diagnostics[0].pos.column == 3);
}

TEST_CASE("parse_model: coffee machine shape") {
  auto r = parse_model(test::slurp(test::fixture("coffee/CoffeeMachine.arc")), "CoffeeMachine.arc");
  REQUIRE(r.ok());
  REQUIRE(r.unit.components.size() == 1);
  const auto& c = r.unit.components[0];
  CHECK(c.name == "CoffeeMachine");
  CHECK(c.autoconnect);
  CHECK(c.ports.size() == 3);
  REQUIRE(c.enums.size() == 1);
  CHECK(c.enums[0].members == std::vector<std::string>{"LatteMacchiato", "Espresso", "Cappucino", "Coffee"});
  REQUIRE(c.subcomponents.size() == 4);
  CHECK(c.subcomponents[0].instanceName == "espressoBS");
  CHECK(c.subcomponents[0].inlineConnects.size() == 1);
  CHECK(c.subcomponents[1].instanceName == "coffeeBS");
  CHECK(c.subcomponents[1].typeName == "BeanSensor");
  CHECK_FALSE(c.subcomponents[3].instanceName.has_value());
  REQUIRE(c.connects.size() == 1);
  CHECK(c.connects[0].source.str() == "coffeeBS.beanEmpty");
  CHECK(c.connects[0].targets[0].str() == "cpu.coffeeEmpty");
}

TEST_CASE("parse_model: processing unit shape") {
  auto r = parse_model(test::slurp(test::fixture("coffee/CoffeeProcessingUnit.arc")), "cpu.arc");
  REQUIRE(r.ok());
  const auto& c = r.unit.components.at(0);
  CHECK(c.ports.size() == 6);
  REQUIRE(c.stateVars.size() == 1);
  CHECK(c.stateVars[0].typeName == "boolean");
  CHECK_FALSE(c.stateVars[0].initializer.has_value());
  REQUIRE(c.handlers.size() == 1);
  const auto& h = c.handlers[0];
  CHECK(h.methodName == "onMilkEmptyReceived");
  REQUIRE(h.body.size() == 2);
  CHECK(h.body[0].kind == StmtKind::If);
  CHECK(h.body[0].hasElse);
  CHECK(h.body[0].thenBody.at(0).target == "message");
  CHECK(h.body[0].thenBody.at(0).qualifier.empty());
  CHECK(h.body[1].kind == StmtKind::Assign);
  CHECK(h.body[1].target == "milkAvailable");
}

TEST_CASE("parse_model: empty component and empty file") {
  auto r = parse_model("component Empty { }", "e.arc");
  REQUIRE(r.ok());
  REQUIRE(r.unit.components.size() == 1);
  CHECK(r.unit.components[0].ports.empty());
  CHECK(parse_model("", "e.arc").unit.components.empty());
  CHECK(parse_model("// only a comment\n", "e.arc").ok());
}

TEST_CASE("parse_model: modifiers and this are dropped") {
  auto r = parse_model(
      "component P { port in Integer x, out Integer y; "
      "private state Integer n = 1; "
      "public handler onXReceived(Integer v) { this.n = v; this.y.send(this.n); } }",
      "p.arc");
  REQUIRE(r.ok());
  const auto& body = r.unit.components[0].handlers.at(0).body;
  CHECK(body[0].target == "n");
  CHECK(body[1].target == "y");
  CHECK(body[1].value.kind == ExprKind::VarRef);
}

TEST_CASE("parse_model: unnamed ports and instances stay unnamed") {
  auto r = parse_model("component A { port in Boolean; component Display; }", "a.arc");
  REQUIRE(r.ok());
  CHECK_FALSE(r.unit.components[0].ports[0].name.has_value());
  CHECK_FALSE(r.unit.components[0].subcomponents[0].instanceName.has_value());
}

TEST_CASE("parse_model: several syntax errors in one file") {
  auto r = parse_model(
      "component A {\n"
      "  port in ;\n"
      "  connect a -> ;\n"
      "  port out Integer ok;\n"
      "}\n",
      "bad.arc");
  CHECK(test::count_code(r.diagnostics, "E0101") == 2);
  CHECK(r.diagnostics[0].pos.line == 2);
  CHECK(r.diagnostics[1].pos.line == 3);
  REQUIRE(r.unit.components.size() == 1);
  CHECK(r.unit.components[0].ports.size() == 1);
}

TEST_CASE("parse_model: integer range") {
  CHECK(parse_model("component A { state Integer x = 9223372036854775807; }", "a.arc").ok());
  CHECK(parse_model("component A { state Integer x = -9223372036854775808; }", "a.arc").ok());
  auto r = parse_model("component A { state Integer x = 9223372036854775808; }", "a.arc");
  CHECK(test::has_code(r.diagnostics, "E0104"));
}

TEST_CASE("parse_expression: precedence") {
  auto r = parse_expression("1 + 2 * 3 == 7 && !b || c");
  REQUIRE(r.ok());
  CHECK(print(r.expr) == "(((1 + (2 * 3)) == 7) && (!b)) || c");
  auto e = parse_expression("CoffeeType.Espresso");
  REQUIRE(e.ok());
  CHECK(e.expr.kind == ExprKind::EnumLit);
  CHECK(e.expr.typeName == "CoffeeType");
  CHECK(e.expr.text == "Espresso");
}

TEST_CASE("parse_stimulus") {
  auto r = parse_stimulus("milkEmpty true\nmilkEmpty false");
  REQUIRE(r.ok());
  REQUIRE(r.stimuli.size() == 2);
  CHECK(r.stimuli[0].port == "milkEmpty");
  CHECK(r.stimuli[0].literal.boolValue);
  CHECK_FALSE(r.stimuli[1].literal.boolValue);

  auto e = parse_stimulus("selection CoffeeType.Espresso\n");
  REQUIRE(e.ok());
  CHECK(e.stimuli[0].literal.kind == ExprKind::EnumLit);
  CHECK(e.stimuli[0].literal.text == "Espresso");

  CHECK(parse_stimulus("").stimuli.empty());
  CHECK(parse_stimulus("# comment\n\n").stimuli.empty());

  auto bad = parse_stimulus("a 1\nb\n");
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].code == "E0105");
  CHECK(bad.diagnostics[0].message.find("line 2") != std::string::npos);
}

TEST_CASE("print then parse gives the same unit") {
  for (const auto& path : test::coffee_files()) {
    auto first = parse_model(test::slurp(path), path.string());
    REQUIRE(first.ok());
    auto again = parse_model(print(first.unit), path.string());
    REQUIRE(again.ok());
    CHECK(structurally_equal(first.unit, again.unit));
  }
}

TEST_CASE("diagnostic formatting") {
  Diagnostic d = error("E0101", SourcePos{"a.arc", 3, 7}, "expected ';'");
  CHECK(format(d) == "error E0101 a.arc:3:7 expected ';'");
}
