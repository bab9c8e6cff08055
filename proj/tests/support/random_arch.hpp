#pragma once

// Random well-formed architectures and an independent hop-by-hop router used
// as the oracle for flattening.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "arc/arch.hpp"
#include "arc/sim.hpp"

namespace arc::test {

struct ArchShape {
  int maxDepth = 3;
  int maxInstances = 6;
  int maxPorts = 4;
};

// Emits `.arc` source for a random hierarchy rooted at component "C0".
// Every connector respects the direction matrix, carries one type end to
// end and feeds each target at most once; pure-structural loops are still
// possible, so callers retry when flatten reports E0308.
class ArchGenerator {
 public:
  ArchGenerator(std::uint64_t seed, ArchShape shape) : rng_(seed), shape_(shape) {}

  std::string generate() {
    source_.clear();
    next_type_ = 0;
    make_component(0, /*root=*/true);
    return source_;
  }

 private:
  struct Port {
    std::string name;
    bool in;
    std::string type;
  };

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::vector<Port> make_ports(int min_ports, bool force_in) {
    std::vector<Port> ports;
    const int n = uniform(min_ports, shape_.maxPorts);
    for (int i = 0; i < n; ++i) {
      ports.push_back(Port{"p" + std::to_string(i), chance(0.5), chance(0.7) ? "Integer" : "Boolean"});
    }
    if (force_in && !ports.empty()) ports.front().in = true;
    return ports;
  }

  static std::string port_section(const std::vector<Port>& ports) {
    if (ports.empty()) return {};
    std::string s = "  port ";
    for (std::size_t i = 0; i < ports.size(); ++i) {
      if (i) s += ", ";
      s += (ports[i].in ? "in " : "out ") + ports[i].type + " " + ports[i].name;
    }
    return s + ";\n";
  }

  struct Made {
    std::string type;
    std::vector<Port> ports;
  };

  Made make_component(int depth, bool root) {
    Made m;
    m.type = "C" + std::to_string(next_type_++);
    const bool structural = root || (depth < shape_.maxDepth && chance(0.35));
    m.ports = make_ports(root ? 1 : 1, root);
    std::string body = port_section(m.ports);

    if (!structural) {
      for (const Port& in : m.ports) {
        if (!in.in || !chance(0.7)) continue;
        std::string h = "  handler on" + std::string(1, static_cast<char>(std::toupper(in.name[0]))) +
                        in.name.substr(1) + "Received(" + in.type + " v) {\n";
        for (const Port& out : m.ports) {
          if (out.in || out.type != in.type || !chance(0.6)) continue;
          if (in.type == "Integer") {
            h += "    if (v < 40) { " + out.name + ".send(v + 1); }\n";
          } else {
            h += "    " + out.name + ".send(!v);\n";
          }
        }
        body += h + "  }\n";
      }
      source_ += "component " + m.type + " {\n" + body + "}\n\n";
      return m;
    }

    struct Child {
      std::string name;
      Made made;
      std::vector<std::string> inlines;
    };
    std::vector<Child> children;
    const int n = uniform(1, shape_.maxInstances);
    for (int i = 0; i < n; ++i) {
      children.push_back(Child{"i" + std::to_string(i), make_component(depth + 1, false), {}});
    }

    struct End {
      int child;  // -1 = own port
      std::string port;
      std::string type;
    };
    std::vector<End> sources;
    std::vector<End> targets;
    for (const Port& p : m.ports) (p.in ? sources : targets).push_back(End{-1, p.name, p.type});
    for (int c = 0; c < static_cast<int>(children.size()); ++c) {
      for (const Port& p : children[c].made.ports) {
        (p.in ? targets : sources).push_back(End{c, p.name, p.type});
      }
    }
    auto ref = [&](const End& e) {
      return e.child < 0 ? e.port : children[e.child].name + "." + e.port;
    };

    // Group targets by chosen source so fan-out shows up as one statement.
    std::map<int, std::vector<int>> fan;
    for (int t = 0; t < static_cast<int>(targets.size()); ++t) {
      if (!chance(0.8)) continue;
      std::vector<int> ok;
      for (int s = 0; s < static_cast<int>(sources.size()); ++s) {
        if (sources[s].type == targets[t].type) ok.push_back(s);
      }
      if (ok.empty()) continue;
      fan[ok[static_cast<std::size_t>(uniform(0, static_cast<int>(ok.size()) - 1))]].push_back(t);
    }
    std::string connects;
    for (const auto& [s, ts] : fan) {
      const End& src = sources[s];
      if (src.child >= 0 && ts.size() == 1 && chance(0.3)) {
        children[src.child].inlines.push_back(src.port + "->" + ref(targets[ts.front()]));
        continue;
      }
      connects += "  connect " + ref(src) + " -> ";
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) connects += ", ";
        connects += ref(targets[ts[i]]);
      }
      connects += ";\n";
    }
    for (const Child& c : children) {
      body += "  component " + c.made.type + " " + c.name;
      if (!c.inlines.empty()) {
        body += " [";
        for (std::size_t i = 0; i < c.inlines.size(); ++i) body += (i ? ", " : "") + c.inlines[i];
        body += "]";
      }
      body += ";\n";
    }
    body += connects;
    source_ += "component " + m.type + " {\n" + body + "}\n\n";
    return m;
  }

  std::mt19937_64 rng_;
  ArchShape shape_;
  std::string source_;
  int next_type_ = 0;
};

// Moves a message one connector at a time, level by level, using the
// level-relative (side, instance, port) view of each connector rather than
// absolute endpoints.
class HopRouter {
 public:
  explicit HopRouter(const ElaboratedArchitecture& ea) : ea_(ea) {}

  std::vector<Destination> route(const Endpoint& origin) const {
    std::vector<Destination> out;
    struct Hop {
      InstancePath level;
      bool parent_side;
      std::string instance;
      std::string port;
    };
    std::vector<Hop> work;
    if (ea_.tree.root().kind == ComponentKind::Behavioral) {
      // A lone behavioral root: its in-ports feed itself, its out-ports
      // leave the system.
      const auto* p = ea_.tree.root().component->find_port(origin.port);
      if (p && p->direction == Direction::In) out.push_back(Destination{origin, DestinationKind::LeafIn});
      if (p && p->direction == Direction::Out) out.push_back(Destination{origin, DestinationKind::SystemOut});
      return out;
    }
    if (origin.instance.empty()) {
      work.push_back(Hop{{}, true, {}, origin.port});
    } else {
      InstancePath level(origin.instance.begin(), origin.instance.end() - 1);
      work.push_back(Hop{level, false, origin.instance.back(), origin.port});
    }
    std::size_t hops = 0;
    while (!work.empty()) {
      Hop h = work.back();
      work.pop_back();
      if (++hops > 100000) throw std::runtime_error("hop limit exceeded");
      for (const Connector& c : ea_.connectors) {
        if (c.level != h.level) continue;
        const bool src_parent = c.source.side == EndSide::Parent;
        if (src_parent != h.parent_side || c.source.port != h.port) continue;
        if (!src_parent && c.source.owner.back() != h.instance) continue;
        if (c.target.side == EndSide::Parent) {
          if (h.level.empty()) {
            out.push_back(Destination{Endpoint{{}, c.target.port}, DestinationKind::SystemOut});
          } else {
            InstancePath up(h.level.begin(), h.level.end() - 1);
            work.push_back(Hop{up, false, h.level.back(), c.target.port});
          }
        } else {
          InstancePath child = h.level;
          child.push_back(c.target.owner.back());
          if (kind_of(child) == ComponentKind::Behavioral) {
            out.push_back(Destination{Endpoint{child, c.target.port}, DestinationKind::LeafIn});
          } else {
            work.push_back(Hop{child, true, {}, c.target.port});
          }
        }
      }
    }
    return out;
  }

  // Routing table assembled from hop-by-hop routes, for driving the
  // simulator through the oracle.
  RoutingTable table(const RoutingTable& shape) const {
    RoutingTable t;
    for (const auto& [origin, dests] : shape.routes) {
      auto d = route(origin);
      sort_destinations(ea_.tree, d);
      t.routes[origin] = std::move(d);
    }
    return t;
  }

 private:
  ComponentKind kind_of(const InstancePath& path) const {
    for (const auto& n : ea_.tree.nodes) {
      if (n.path == path) return n.kind;
    }
    throw std::runtime_error("no instance " + join(path));
  }

  const ElaboratedArchitecture& ea_;
};

// Order-insensitive comparison key for destination lists.
inline std::set<std::pair<std::string, int>> as_set(const std::vector<Destination>& ds) {
  std::set<std::pair<std::string, int>> s;
  for (const auto& d : ds) s.emplace(join(d.end.instance, "/") + ":" + d.end.port, static_cast<int>(d.kind));
  return s;
}

}  // namespace arc::test
