#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arc/arch.hpp"
#include "arc/interp.hpp"
#include "arc/value.hpp"

namespace arc {

enum class EventKind { Inject, Deliver, Fire, Emit, SystemOut, Drop };

std::string_view to_string(EventKind k);

// `step` is the 1-based number of the step an event belongs to; events
// produced by an injection carry the number of steps completed so far.
struct TraceEvent {
  EventKind kind = EventKind::Inject;
  InstancePath instance;
  std::string port;
  RuntimeValue value;
  std::size_t step = 0;

  bool operator==(const TraceEvent&) const = default;
};

using Trace = std::vector<TraceEvent>;

enum class TraceVerbosity { Boundary, Full };

struct RunConfig {
  std::size_t maxSteps = 10000;
  TraceVerbosity verbosity = TraceVerbosity::Full;
};

// Bad stimulus: unknown root in-port, wrong value type, unknown enum member.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Ticket {
  std::size_t node = 0;  // index into the instance tree
  std::string port;
};

struct LeafState {
  InstanceState state;
  std::map<std::string, std::deque<RuntimeValue>> queues;  // one FIFO per in-port
};

// Whole-system runtime state. Borrows the architecture and routing table,
// which must outlive it.
struct SystemState {
  const ElaboratedArchitecture* arch = nullptr;
  const RoutingTable* routing = nullptr;
  std::map<std::size_t, LeafState> leaves;  // behavioral instances by node index
  std::deque<Ticket> runQueue;
  std::size_t stepCount = 0;
  Trace trace;

  const LeafState* leaf(const InstancePath& path) const;
  bool quiescent() const { return runQueue.empty(); }
  std::size_t queued_messages() const;
};

SystemState instantiate(const ElaboratedArchitecture& ea, const RoutingTable& rt);

// Throws UsageError unless `port` is a root in-port accepting `value`.
void check_stimulus(const ElaboratedArchitecture& ea, const std::string& port, const RuntimeValue& value);

// Copies `value` to every destination of root in-port `port`. Throws
// UsageError for an unknown port or a value of the wrong type.
void inject(SystemState& st, const std::string& port, const RuntimeValue& value);

// Handler execution failed; carries where.
class SimFault : public std::runtime_error {
 public:
  SimFault(const std::string& what, InstancePath instance, std::string handler, SourcePos pos)
      : std::runtime_error(what), instance_(std::move(instance)), handler_(std::move(handler)),
        pos_(std::move(pos)) {}
  const InstancePath& instance() const { return instance_; }
  const std::string& handler() const { return handler_; }
  const SourcePos& pos() const { return pos_; }

 private:
  InstancePath instance_;
  std::string handler_;
  SourcePos pos_;
};

// Processes the front dispatch ticket. Precondition: !st.quiescent().
void step(SystemState& st);

struct RunError {
  enum class Kind { Divergence, Fault } kind = Kind::Divergence;
  std::string message;
};

struct RunResult {
  SystemState state;
  std::optional<RunError> error;

  const Trace& trace() const { return state.trace; }
  bool ok() const { return !error.has_value(); }
};

using StimulusValue = std::pair<std::string, RuntimeValue>;

// Injects each stimulus and steps to quiescence before the next one. Stops
// with a Divergence error once maxSteps steps have run and work remains.
RunResult run(const ElaboratedArchitecture& ea, const RoutingTable& rt,
              const std::vector<StimulusValue>& stimuli, const RunConfig& cfg);

// Converts parsed stimuli to values, checking enum literals against the
// program's enums. Throws UsageError.
std::vector<StimulusValue> stimulus_values(const std::vector<Stimulus>& stimuli, const SymbolTable& table);

// One JSON object per line:
// {"step":N,"kind":"...","instance":[...],"port":"...","value":...}
std::string serialize(const TraceEvent& ev);
std::string serialize(const Trace& trace, TraceVerbosity verbosity);

}  // namespace arc
