#include "arc/arch.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace arc {

const std::vector<Destination>& RoutingTable::destinations(const Endpoint& origin) const {
  static const std::vector<Destination> kNone;
  auto it = routes.find(origin);
  return it == routes.end() ? kNone : it->second;
}

const ResolvedPort* find_port(const InstanceTree& tree, const Endpoint& end) {
  auto idx = tree.find(end.instance);
  if (!idx) return nullptr;
  return tree.nodes[*idx].component->find_port(end.port);
}

void sort_destinations(const InstanceTree& tree, std::vector<Destination>& dests) {
  auto key = [&](const Destination& d) {
    const std::size_t node = tree.find(d.end.instance).value_or(tree.nodes.size());
    std::size_t port_index = 0;
    if (node < tree.nodes.size()) {
      const auto& ports = tree.nodes[node].component->ports;
      while (port_index < ports.size() && ports[port_index].name != d.end.port) ++port_index;
    }
    return std::tuple(node, port_index, d.kind);
  };
  std::sort(dests.begin(), dests.end(),
            [&](const Destination& a, const Destination& b) { return key(a) < key(b); });
  dests.erase(std::unique(dests.begin(), dests.end()), dests.end());
}

namespace {

class Flattener {
 public:
  Flattener(const ElaboratedArchitecture& ea, FlattenResult& out) : ea_(ea), out_(out) {
    for (const Connector& c : ea.connectors) {
      by_source_[Endpoint{c.source.owner, c.source.port}].push_back(&c);
    }
  }

  // A loop of structural pass-throughs has no origin feeding it (each port
  // on it already has its one feeder), so traversal from origins cannot
  // find it; look for cycles in the whole port graph instead.
  void check_cycles() {
    std::map<Endpoint, int> color;  // 0 unvisited, 1 on stack, 2 done
    for (const auto& [start, conns] : by_source_) {
      if (color[start] == 0) visit(start, color);
    }
  }

  std::vector<Destination> route(const Endpoint& origin) {
    std::vector<Destination> dests;
    std::set<Endpoint> on_path;
    follow(origin, dests, on_path);
    sort_destinations(ea_.tree, dests);
    return dests;
  }

 private:
  void visit(const Endpoint& at, std::map<Endpoint, int>& color) {
    color[at] = 1;
    auto it = by_source_.find(at);
    if (it != by_source_.end()) {
      for (const Connector* c : it->second) {
        Endpoint to{c->target.owner, c->target.port};
        const int state = color[to];
        if (state == 1) {
          report_cycle(*c, to);
        } else if (state == 0) {
          visit(to, color);
        }
      }
    }
    color[at] = 2;
  }

  void report_cycle(const Connector& c, const Endpoint& to) {
    out_.diagnostics.push_back(error("E0308", c.pos,
                                     "routing cycle through structural port '" +
                                         (to.instance.empty() ? to.port : join(to.instance) + "." + to.port) +
                                         "'"));
  }

  void follow(const Endpoint& from, std::vector<Destination>& dests, std::set<Endpoint>& on_path) {
    auto it = by_source_.find(from);
    if (it == by_source_.end()) return;
    on_path.insert(from);
    for (const Connector* c : it->second) {
      Endpoint to{c->target.owner, c->target.port};
      const std::size_t node = *ea_.tree.find(to.instance);
      const InstanceNode& n = ea_.tree.nodes[node];
      const ResolvedPort* port = n.component->find_port(to.port);
      if (!port) continue;
      if (node == 0 && port->direction == Direction::Out) {
        dests.push_back({to, DestinationKind::SystemOut});
      } else if (n.kind == ComponentKind::Behavioral && port->direction == Direction::In) {
        dests.push_back({to, DestinationKind::LeafIn});
      } else if (on_path.count(to)) {
        report_cycle(*c, to);
      } else {
        follow(to, dests, on_path);
      }
    }
    on_path.erase(from);
  }

  const ElaboratedArchitecture& ea_;
  FlattenResult& out_;
  std::map<Endpoint, std::vector<const Connector*>> by_source_;
};

}  // namespace

FlattenResult flatten(const ElaboratedArchitecture& ea) {
  FlattenResult out;
  if (ea.tree.nodes.empty()) return out;
  const InstanceNode& root = ea.tree.root();

  if (root.kind == ComponentKind::Behavioral) {
    // The root is itself the only leaf: its in-ports feed its own handlers
    // and everything it emits leaves the system.
    for (const ResolvedPort& p : root.component->ports) {
      Endpoint e{{}, p.name};
      out.table.routes[e] = {Destination{
          e, p.direction == Direction::In ? DestinationKind::LeafIn : DestinationKind::SystemOut}};
    }
    return out;
  }

  Flattener f(ea, out);
  f.check_cycles();
  for (const ResolvedPort& p : root.component->ports) {
    if (p.direction != Direction::In) continue;
    Endpoint origin{{}, p.name};
    out.table.routes[origin] = f.route(origin);
  }
  for (const InstanceNode& n : ea.tree.nodes) {
    if (n.kind != ComponentKind::Behavioral) continue;
    for (const ResolvedPort& p : n.component->ports) {
      if (p.direction != Direction::Out) continue;
      Endpoint origin{n.path, p.name};
      out.table.routes[origin] = f.route(origin);
    }
  }
  normalize(out.diagnostics);
  return out;
}

}  // namespace arc
