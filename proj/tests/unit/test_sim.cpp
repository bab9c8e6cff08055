#include <doctest.h>

#include "arc/parser.hpp"
#include "test_support.hpp"

using namespace arc;

namespace {

std::vector<StimulusValue> milk() {
  return {{"milkEmpty", RuntimeValue(true)}, {"milkEmpty", RuntimeValue(false)}};
}

std::size_t count(const Trace& t, EventKind k) {
  std::size_t n = 0;
  for (const auto& e : t) n += e.kind == k;
  return n;
}

}  // namespace

TEST_CASE("instantiate") {
  auto prog = test::coffee_program();
  auto b = test::build(prog, "CoffeeMachine");
  auto st = instantiate(b.arch(), b.routes());
  CHECK(st.leaves.size() == 4);
  REQUIRE(st.leaf({"cpu"}));
  CHECK(st.leaf({"cpu"})->state == InstanceState{{"milkAvailable", RuntimeValue(false)}});
  CHECK(st.leaf({"cpu"})->queues.size() == 4);
  CHECK(st.leaf({"display"})->queues.size() == 1);
  CHECK(st.leaf({"coffeeBS"})->queues.empty());
  CHECK(st.quiescent());
  CHECK(st.trace.empty());
}

TEST_CASE("inject") {
  auto prog = test::coffee_program();
  auto b = test::build(prog, "CoffeeMachine");
  auto st = instantiate(b.arch(), b.routes());
  inject(st, "milkEmpty", RuntimeValue(true));
  CHECK(st.runQueue.size() == 1);
  CHECK(st.leaf({"cpu"})->queues.at("milkEmpty").size() == 1);
  REQUIRE(st.trace.size() == 2);
  CHECK(st.trace[0].kind == EventKind::Inject);
  CHECK(st.trace[1].kind == EventKind::Deliver);

  CHECK_THROWS_AS(inject(st, "nope", RuntimeValue(true)), UsageError);
  CHECK_THROWS_AS(inject(st, "milkEmpty", RuntimeValue(std::int64_t{1})), UsageError);
  CHECK_THROWS_AS(inject(st, "milkAmount", RuntimeValue(std::int64_t{1})), UsageError);
  CHECK_NOTHROW(inject(st, "selection", RuntimeValue(EnumValue{"CoffeeType", "Coffee"})));
}

TEST_CASE("step fires, then drops at the display") {
  auto prog = test::coffee_program();
  auto b = test::build(prog, "CoffeeMachine");
  auto st = instantiate(b.arch(), b.routes());
  inject(st, "milkEmpty", RuntimeValue(true));
  step(st);
  CHECK(st.stepCount == 1);
  CHECK(st.leaf({"display"})->queues.at("message").size() == 1);
  step(st);
  CHECK(st.quiescent());
  CHECK(st.trace.back().kind == EventKind::Drop);
  CHECK(st.trace.back().instance == InstancePath{"display"});
}

TEST_CASE("messages reaching a root out-port become system output") {
  auto prog = test::compile_paths({test::fixture("misc/passthrough.arc")});
  auto b = test::build(prog, "Wire");
  auto r = run(b.arch(), b.routes(), {{"a", RuntimeValue(std::int64_t{7})}}, {});
  REQUIRE(r.ok());
  REQUIRE(r.trace().size() == 2);
  CHECK(r.trace()[1].kind == EventKind::SystemOut);
  CHECK(r.trace()[1].port == "b");
  CHECK(r.trace()[1].value == RuntimeValue(std::int64_t{7}));
}

TEST_CASE("coffee run") {
  auto prog = test::coffee_program();
  auto b = test::build(prog, "CoffeeMachine");
  auto r = run(b.arch(), b.routes(), milk(), {});
  REQUIRE(r.ok());
  CHECK(r.state.leaf({"cpu"})->state.at("milkAvailable") == RuntimeValue(true));
  std::vector<RuntimeValue> shown;
  for (const auto& e : r.trace()) {
    if (e.kind == EventKind::Deliver && e.instance == InstancePath{"display"}) shown.push_back(e.value);
  }
  CHECK(shown == std::vector<RuntimeValue>{RuntimeValue("Sorry, no milk today."), RuntimeValue("Got milk!")});
  CHECK(serialize(r.trace(), TraceVerbosity::Full) ==
        test::slurp(test::data_dir() / "golden" / "coffee_milk_full.trace"));
  CHECK(serialize(r.trace(), TraceVerbosity::Boundary) ==
        test::slurp(test::data_dir() / "golden" / "coffee_milk_boundary.trace"));
}

TEST_CASE("empty stimulus list") {
  auto prog = test::coffee_program();
  auto b = test::build(prog, "CoffeeMachine");
  auto r = run(b.arch(), b.routes(), {}, {});
  CHECK(r.ok());
  CHECK(r.trace().empty());
  CHECK(r.state.quiescent());
}

TEST_CASE("echo loop diverges after exactly maxSteps firings") {
  auto prog = test::compile_paths({test::fixture("misc/echo_loop.arc")});
  auto b = test::build(prog, "Loop");
  REQUIRE(b.flat.ok());
  RunConfig cfg;
  cfg.maxSteps = 10;
  auto r = run(b.arch(), b.routes(), {{"start", RuntimeValue(std::int64_t{0})}}, cfg);
  REQUIRE(r.error.has_value());
  CHECK(r.error->kind == RunError::Kind::Divergence);
  CHECK(r.state.stepCount == 10);
  CHECK(count(r.trace(), EventKind::Fire) == 10);
}

TEST_CASE("division by zero stops the run with a fault") {
  auto prog = test::compile_paths({test::fixture("misc/div_zero.arc")});
  auto b = test::build(prog, "Divider");
  REQUIRE(b.flat.ok());
  auto r = run(b.arch(), b.routes(), {{"n", RuntimeValue(std::int64_t{5})}, {"n", RuntimeValue(std::int64_t{0})}}, {});
  REQUIRE(r.error.has_value());
  CHECK(r.error->kind == RunError::Kind::Fault);
  CHECK(count(r.trace(), EventKind::SystemOut) == 1);
}

// Destinations follow instance preorder, so the root output comes first.
TEST_CASE("fan-out copies a message to every destination in order") {
  auto prog = test::compile_paths({test::fixture("misc/fanout.arc")});
  auto b = test::build(prog, "Fan");
  auto r = run(b.arch(), b.routes(), {{"x", RuntimeValue(std::int64_t{3})}}, {});
  REQUIRE(r.ok());
  std::vector<std::string> where;
  for (const auto& e : r.trace()) {
    if (e.kind == EventKind::Deliver || e.kind == EventKind::SystemOut) where.push_back(join(e.instance) + ":" + e.port);
  }
  CHECK(where == std::vector<std::string>{":copy", "a:v", "b:v"});
}

TEST_CASE("stimulus values from parsed stimuli") {
  auto prog = test::coffee_program();
  auto parsed = parse_stimulus("selection CoffeeType.Espresso\nmilkEmpty true\n");
  auto vals = stimulus_values(parsed.stimuli, prog.symbols);
  REQUIRE(vals.size() == 2);
  CHECK(vals[0].second == RuntimeValue(EnumValue{"CoffeeType", "Espresso"}));
  auto bad = parse_stimulus("selection CoffeeType.Tea\n");
  CHECK_THROWS_AS(stimulus_values(bad.stimuli, prog.symbols), UsageError);
}

TEST_CASE("serialize one event") {
  TraceEvent e{EventKind::Emit, {"a", "b"}, "p", RuntimeValue(EnumValue{"E", "X"}), 3};
  CHECK(serialize(e) == R"({"step":3,"kind":"EMIT","instance":["a","b"],"port":"p","value":{"enum":"E","member":"X"}})");
}
