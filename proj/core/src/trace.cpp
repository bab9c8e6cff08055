#include <json.hpp>

#include "arc/sim.hpp"

namespace arc {

namespace {

nlohmann::ordered_json value_json(const RuntimeValue& v) {
  if (v.is_bool()) return v.as_bool();
  if (v.is_int()) return v.as_int();
  if (v.is_string()) return v.as_string();
  nlohmann::ordered_json j;
  j["enum"] = v.as_enum().type;
  j["member"] = v.as_enum().member;
  return j;
}

}  // namespace

std::string serialize(const TraceEvent& ev) {
  nlohmann::ordered_json j;
  j["step"] = ev.step;
  j["kind"] = std::string(to_string(ev.kind));
  j["instance"] = ev.instance;
  j["port"] = ev.port;
  j["value"] = value_json(ev.value);
  return j.dump();
}

std::string serialize(const Trace& trace, TraceVerbosity verbosity) {
  std::string out;
  for (const TraceEvent& ev : trace) {
    if (verbosity == TraceVerbosity::Boundary && ev.kind != EventKind::Inject &&
        ev.kind != EventKind::SystemOut) {
      continue;
    }
    out += serialize(ev);
    out += '\n';
  }
  return out;
}

}  // namespace arc
