#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arc/diagnostic.hpp"
#include "arc/sema.hpp"

namespace arc {

// Instance names from the root down; empty = the root itself.
using InstancePath = std::vector<std::string>;

std::string join(const InstancePath& path, std::string_view sep = ".");

enum class EndSide { Parent, Child };

// One end of a connector. `owner` is absolute; `side` says whether, at the
// connector's level, it is the declaring component's own port (Parent) or a
// port of a direct subcomponent (Child).
struct ChannelEnd {
  InstancePath owner;
  std::string port;
  EndSide side = EndSide::Parent;

  bool operator==(const ChannelEnd&) const = default;
  auto operator<=>(const ChannelEnd&) const = default;
};

// Declared origin; the enumerator order is the ordering rank within a level.
enum class ConnectorOrigin { Explicit, Inline, Auto };

std::string_view to_string(ConnectorOrigin o);

struct Connector {
  InstancePath level;
  ChannelEnd source;
  ChannelEnd target;
  ConnectorOrigin origin = ConnectorOrigin::Explicit;
  MsgType type;  // type of the source port
  SourcePos pos;
};

struct InstanceNode {
  InstancePath path;
  std::string typeName;
  ComponentKind kind = ComponentKind::Behavioral;
  const ResolvedComponent* component = nullptr;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
};

// Preorder list of instances; nodes[0] is the root.
struct InstanceTree {
  std::vector<InstanceNode> nodes;

  std::optional<std::size_t> find(const InstancePath& path) const;
  const InstanceNode& root() const { return nodes.front(); }
};

struct TreeResult {
  InstanceTree tree;
  Diagnostics diagnostics;
};

// Depth-first expansion in declaration order. E0301 unknown component type,
// E0302 a type that (transitively) contains itself.
TreeResult build_instance_tree(const std::string& rootType, const Program& prog);

struct ConnectorsResult {
  std::vector<Connector> connectors;
  Diagnostics diagnostics;
};

// `connect s -> t1, t2;` gives one connector per target; an inline
// `i [p -> q.r]` gives i.p -> q.r. E0303 unknown instance or port.
ConnectorsResult collect_explicit(const ResolvedComponent& rc, const InstancePath& level,
                                  const Program& prog);

// Name-based connector derivation for a component with `autoconnect port`.
// Every target end not already fed by `existing` is connected to the unique
// source end with the same port name and a compatible type. E0304 when more
// than one source qualifies.
ConnectorsResult autoconnect(const ResolvedComponent& rc, const InstancePath& level,
                             const Program& prog, const std::vector<Connector>& existing);

// Direction matrix (E0305), source-subtype-of-target (E0306), at most one
// feeder per target end (E0307), W0301 for ports with no connector.
Diagnostics validate_connectors(const ResolvedComponent& rc, const InstancePath& level,
                                const Program& prog, const std::vector<Connector>& all);

struct ElaboratedArchitecture {
  std::string rootType;
  InstanceTree tree;
  // Ordered by level (preorder), then origin rank, then declaration order.
  std::vector<Connector> connectors;
};

struct ElaborateResult {
  ElaboratedArchitecture architecture;
  Diagnostics diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

ElaborateResult elaborate(const std::string& rootType, const Program& prog);

// A concrete port of a concrete instance.
struct Endpoint {
  InstancePath instance;
  std::string port;

  bool operator==(const Endpoint&) const = default;
  auto operator<=>(const Endpoint&) const = default;
};

enum class DestinationKind { LeafIn, SystemOut };

struct Destination {
  Endpoint end;
  DestinationKind kind = DestinationKind::LeafIn;

  bool operator==(const Destination&) const = default;
};

// Flattened routes from every message origin (root in-port, behavioral
// out-port) to behavioral in-ports and root out-ports. Destination lists
// are deduplicated and in instance-preorder, then port-declaration order.
struct RoutingTable {
  std::map<Endpoint, std::vector<Destination>> routes;

  const std::vector<Destination>& destinations(const Endpoint& origin) const;
};

struct FlattenResult {
  RoutingTable table;
  Diagnostics diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

// E0308 when a chain of structural pass-throughs loops back on itself.
FlattenResult flatten(const ElaboratedArchitecture& ea);

// Canonical destination order shared by flatten and alternative routers.
void sort_destinations(const InstanceTree& tree, std::vector<Destination>& dests);

const ResolvedPort* find_port(const InstanceTree& tree, const Endpoint& end);

}  // namespace arc
