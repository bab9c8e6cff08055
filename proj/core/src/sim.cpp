#include "arc/sim.hpp"

namespace arc {

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::Inject: return "INJECT";
    case EventKind::Deliver: return "DELIVER";
    case EventKind::Fire: return "FIRE";
    case EventKind::Emit: return "EMIT";
    case EventKind::SystemOut: return "SYSTEM_OUT";
    case EventKind::Drop: return "DROP";
  }
  return "?";
}

const LeafState* SystemState::leaf(const InstancePath& path) const {
  auto idx = arch->tree.find(path);
  if (!idx) return nullptr;
  auto it = leaves.find(*idx);
  return it == leaves.end() ? nullptr : &it->second;
}

std::size_t SystemState::queued_messages() const {
  std::size_t n = 0;
  for (const auto& [node, leaf] : leaves) {
    for (const auto& [port, q] : leaf.queues) n += q.size();
  }
  return n;
}

SystemState instantiate(const ElaboratedArchitecture& ea, const RoutingTable& rt) {
  SystemState st;
  st.arch = &ea;
  st.routing = &rt;
  for (std::size_t i = 0; i < ea.tree.nodes.size(); ++i) {
    const InstanceNode& n = ea.tree.nodes[i];
    if (n.kind != ComponentKind::Behavioral) continue;
    LeafState leaf;
    leaf.state = initial_state(*n.component);
    for (const ResolvedPort& p : n.component->ports) {
      if (p.direction == Direction::In) leaf.queues[p.name];
    }
    st.leaves.emplace(i, std::move(leaf));
  }
  return st;
}

namespace {

void record(SystemState& st, EventKind kind, InstancePath instance, std::string port,
            RuntimeValue value, std::size_t step) {
  st.trace.push_back(TraceEvent{kind, std::move(instance), std::move(port), std::move(value), step});
}

void deliver(SystemState& st, const Endpoint& origin, const RuntimeValue& value, std::size_t step) {
  for (const Destination& d : st.routing->destinations(origin)) {
    if (d.kind == DestinationKind::SystemOut) {
      record(st, EventKind::SystemOut, d.end.instance, d.end.port, value, step);
      continue;
    }
    const std::size_t node = *st.arch->tree.find(d.end.instance);
    st.leaves.at(node).queues[d.end.port].push_back(value);
    st.runQueue.push_back(Ticket{node, d.end.port});
    record(st, EventKind::Deliver, d.end.instance, d.end.port, value, step);
  }
}

}  // namespace

void check_stimulus(const ElaboratedArchitecture& ea, const std::string& port, const RuntimeValue& value) {
  const ResolvedPort* p = ea.tree.root().component->find_port(port);
  if (!p || p->direction != Direction::In) {
    throw UsageError("'" + port + "' is not an in-port of '" + ea.rootType + "'");
  }
  if (!is_subtype(value.type(), p->type)) {
    throw UsageError("port '" + port + "' expects " + to_string(p->type) + ", got " + render(value));
  }
}

void inject(SystemState& st, const std::string& port, const RuntimeValue& value) {
  check_stimulus(*st.arch, port, value);
  record(st, EventKind::Inject, {}, port, value, st.stepCount);
  deliver(st, Endpoint{{}, port}, value, st.stepCount);
}

void step(SystemState& st) {
  Ticket t = std::move(st.runQueue.front());
  st.runQueue.pop_front();
  const InstanceNode& node = st.arch->tree.nodes[t.node];
  LeafState& leaf = st.leaves.at(t.node);
  auto& queue = leaf.queues.at(t.port);
  RuntimeValue msg = std::move(queue.front());
  queue.pop_front();
  const std::size_t step_no = ++st.stepCount;

  const HandlerDecl* h = node.component->handler_for(t.port);
  if (!h) {
    record(st, EventKind::Drop, node.path, t.port, std::move(msg), step_no);
    return;
  }
  record(st, EventKind::Fire, node.path, t.port, msg, step_no);
  HandlerResult result;
  try {
    result = exec_handler(*h, msg, leaf.state);
  } catch (const RuntimeFault& f) {
    throw SimFault(f.what(), node.path, h->methodName, f.pos());
  }
  leaf.state = std::move(result.state);
  for (const Emission& e : result.emissions) {
    record(st, EventKind::Emit, node.path, e.port, e.value, step_no);
    deliver(st, Endpoint{node.path, e.port}, e.value, step_no);
  }
}

RunResult run(const ElaboratedArchitecture& ea, const RoutingTable& rt,
              const std::vector<StimulusValue>& stimuli, const RunConfig& cfg) {
  RunResult result{instantiate(ea, rt), std::nullopt};
  SystemState& st = result.state;
  for (const auto& [port, value] : stimuli) {
    inject(st, port, value);
    while (!st.quiescent()) {
      if (st.stepCount >= cfg.maxSteps) {
        result.error = RunError{RunError::Kind::Divergence,
                                "no quiescence after " + std::to_string(st.stepCount) +
                                    " steps (--max-steps " + std::to_string(cfg.maxSteps) + ")"};
        return result;
      }
      try {
        step(st);
      } catch (const SimFault& f) {
        const std::string where = f.instance().empty() ? st.arch->rootType : join(f.instance());
        result.error = RunError{RunError::Kind::Fault,
                                std::string(f.what()) + " in " + where + "." + f.handler() + " at " +
                                    f.pos().file + ":" + std::to_string(f.pos().line) + ":" +
                                    std::to_string(f.pos().column)};
        return result;
      }
    }
  }
  return result;
}

std::vector<StimulusValue> stimulus_values(const std::vector<Stimulus>& stimuli, const SymbolTable& table) {
  std::vector<StimulusValue> out;
  out.reserve(stimuli.size());
  for (const Stimulus& s : stimuli) {
    if (s.literal.kind == ExprKind::EnumLit && !table.has_member(s.literal.typeName, s.literal.text)) {
      throw UsageError("stimulus line " + std::to_string(s.line) + ": unknown enum literal '" +
                       s.literal.typeName + "." + s.literal.text + "'");
    }
    out.emplace_back(s.port, literal_value(s.literal));
  }
  return out;
}

}  // namespace arc
