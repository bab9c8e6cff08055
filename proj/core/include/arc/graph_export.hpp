#pragma once

#include <string>

#include "arc/arch.hpp"

namespace arc {

enum class GraphFormat { Dot, Json };

// Byte-deterministic rendering of an elaborated architecture.
//
// DOT: each structural instance becomes a cluster holding its children and
// one point-shaped interface node standing for its own ports; behavioral
// instances are box nodes. Node ids are slash-joined instance paths, with
// "/" for the root. Each connector is one edge labelled
// `<source port> -> <target port> : <type>`.
//
// JSON: {"root", "instances": [{path, type, kind}], "connectors": [{level,
// source: {instance|null, port}, target, origin, type}]}.
std::string export_graph(const ElaboratedArchitecture& ea, GraphFormat format);

}  // namespace arc
