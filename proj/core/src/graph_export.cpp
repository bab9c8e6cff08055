#include "arc/graph_export.hpp"

#include <json.hpp>

namespace arc {

namespace {

std::string node_id(const InstancePath& path) { return path.empty() ? "/" : join(path, "/"); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

class DotWriter {
 public:
  explicit DotWriter(const ElaboratedArchitecture& ea) : ea_(ea) {}

  std::string run() {
    const InstanceNode& root = ea_.tree.root();
    out_ = "digraph " + quoted(ea_.rootType) + " {\n";
    out_ += "  compound=true;\n";
    if (root.kind == ComponentKind::Behavioral) {
      out_ += "  " + quoted(node_id(root.path)) + " [shape=box, label=" + quoted(root.typeName) + "];\n";
    } else {
      write_cluster(0, 1);
    }
    for (const Connector& c : ea_.connectors) {
      out_ += "  " + quoted(end_id(c.source)) + " -> " + quoted(end_id(c.target)) + " [label=" +
              quoted(c.source.port + " -> " + c.target.port + " : " + to_string(c.type)) + "];\n";
    }
    out_ += "}\n";
    return std::move(out_);
  }

 private:
  // Instance nodes stand for behavioral instances; a structural instance is
  // reached through its interface node.
  static std::string end_id(const ChannelEnd& end) { return node_id(end.owner); }

  void write_cluster(std::size_t index, int depth) {
    const InstanceNode& n = ea_.tree.nodes[index];
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string cluster = n.path.empty() ? "cluster_root" : "cluster_" + join(n.path, "/");
    const std::string label = n.path.empty() ? n.typeName : n.path.back() + " : " + n.typeName;
    out_ += pad + "subgraph " + quoted(cluster) + " {\n";
    out_ += pad + "  label=" + quoted(label) + ";\n";
    out_ += pad + "  " + quoted(node_id(n.path)) + " [shape=point, label=\"\"];\n";
    for (std::size_t child : n.children) {
      const InstanceNode& c = ea_.tree.nodes[child];
      if (c.kind == ComponentKind::Structural) {
        write_cluster(child, depth + 1);
      } else {
        out_ += pad + "  " + quoted(node_id(c.path)) + " [shape=box, label=" +
                quoted(c.path.back() + " : " + c.typeName) + "];\n";
      }
    }
    out_ += pad + "}\n";
  }

  const ElaboratedArchitecture& ea_;
  std::string out_;
};

nlohmann::ordered_json end_json(const ChannelEnd& end) {
  nlohmann::ordered_json j;
  if (end.side == EndSide::Parent) {
    j["instance"] = nullptr;
  } else {
    j["instance"] = end.owner.back();
  }
  j["port"] = end.port;
  return j;
}

std::string to_json(const ElaboratedArchitecture& ea) {
  nlohmann::ordered_json doc;
  doc["root"] = ea.rootType;
  doc["instances"] = nlohmann::ordered_json::array();
  for (const InstanceNode& n : ea.tree.nodes) {
    nlohmann::ordered_json j;
    j["path"] = n.path;
    j["type"] = n.typeName;
    j["kind"] = n.kind == ComponentKind::Structural ? "structural" : "behavioral";
    doc["instances"].push_back(std::move(j));
  }
  doc["connectors"] = nlohmann::ordered_json::array();
  for (const Connector& c : ea.connectors) {
    nlohmann::ordered_json j;
    j["level"] = c.level;
    j["source"] = end_json(c.source);
    j["target"] = end_json(c.target);
    j["origin"] = std::string(to_string(c.origin));
    j["type"] = to_string(c.type);
    doc["connectors"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string export_graph(const ElaboratedArchitecture& ea, GraphFormat format) {
  if (ea.tree.nodes.empty()) return {};
  return format == GraphFormat::Dot ? DotWriter(ea).run() : to_json(ea);
}

}  // namespace arc
