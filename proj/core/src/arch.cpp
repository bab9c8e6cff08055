#include "arc/arch.hpp"

#include <algorithm>
#include <set>

namespace arc {

std::string join(const InstancePath& path, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += sep;
    out += path[i];
  }
  return out;
}

std::string_view to_string(ConnectorOrigin o) {
  switch (o) {
    case ConnectorOrigin::Explicit: return "EXPLICIT";
    case ConnectorOrigin::Inline: return "INLINE";
    case ConnectorOrigin::Auto: return "AUTO";
  }
  return "?";
}

std::optional<std::size_t> InstanceTree::find(const InstancePath& path) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].path == path) return i;
  }
  return std::nullopt;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const Program& prog, TreeResult& out) : prog_(prog), out_(out) {}

  void expand(std::size_t index) {
    const ResolvedComponent* rc = out_.tree.nodes[index].component;
    stack_.push_back(rc->name());
    for (const ResolvedInstance& inst : rc->subcomponents) {
      const ResolvedComponent* child = prog_.component(inst.typeName);
      if (!child) {
        out_.diagnostics.push_back(
            error("E0301", inst.pos, "unknown component type '" + inst.typeName + "'"));
        continue;
      }
      if (std::find(stack_.begin(), stack_.end(), inst.typeName) != stack_.end()) {
        out_.diagnostics.push_back(error("E0302", inst.pos,
                                         "component '" + inst.typeName +
                                             "' contains itself (via instance '" + inst.name + "')"));
        continue;
      }
      InstanceNode node;
      node.path = out_.tree.nodes[index].path;
      node.path.push_back(inst.name);
      node.typeName = inst.typeName;
      node.kind = child->kind;
      node.component = child;
      node.parent = index;
      const std::size_t child_index = out_.tree.nodes.size();
      out_.tree.nodes.push_back(std::move(node));
      out_.tree.nodes[index].children.push_back(child_index);
      expand(child_index);
    }
    stack_.pop_back();
  }

 private:
  const Program& prog_;
  TreeResult& out_;
  std::vector<std::string> stack_;
};

struct LevelView {
  const ResolvedComponent& rc;
  const InstancePath& level;
  const Program& prog;

  InstancePath child_path(const std::string& instance) const {
    InstancePath p = level;
    p.push_back(instance);
    return p;
  }

  const ResolvedComponent* child_type(const std::string& instance) const {
    const ResolvedInstance* inst = rc.find_instance(instance);
    return inst ? prog.component(inst->typeName) : nullptr;
  }

  const ResolvedPort* port(const ChannelEnd& end) const {
    if (end.side == EndSide::Parent) return rc.find_port(end.port);
    const ResolvedComponent* c = child_type(end.owner.back());
    return c ? c->find_port(end.port) : nullptr;
  }

  std::string describe(const ChannelEnd& end) const {
    return end.side == EndSide::Parent ? end.port : end.owner.back() + "." + end.port;
  }

  // Resolves a textual reference at this level; reports E0303 on failure.
  std::optional<ChannelEnd> resolve(const PortRef& ref, Diagnostics& diags) const {
    if (ref.segments.size() > 2) return std::nullopt;  // integrity reports E0221
    if (ref.is_own()) {
      if (!rc.find_port(ref.port())) {
        diags.push_back(error("E0303", ref.pos,
                              "component '" + rc.name() + "' has no port '" + ref.port() + "'"));
        return std::nullopt;
      }
      return ChannelEnd{level, ref.port(), EndSide::Parent};
    }
    const ResolvedInstance* inst = rc.find_instance(ref.instance());
    if (!inst) {
      diags.push_back(error("E0303", ref.pos,
                            "component '" + rc.name() + "' has no subcomponent '" + ref.instance() + "'"));
      return std::nullopt;
    }
    const ResolvedComponent* type = prog.component(inst->typeName);
    if (!type) return std::nullopt;  // E0301 from tree construction
    if (!type->find_port(ref.port())) {
      diags.push_back(error("E0303", ref.pos,
                            "instance '" + inst->name + "' of '" + inst->typeName + "' has no port '" +
                                ref.port() + "'"));
      return std::nullopt;
    }
    return ChannelEnd{child_path(inst->name), ref.port(), EndSide::Child};
  }

  Connector make(ChannelEnd source, ChannelEnd target, ConnectorOrigin origin, SourcePos pos) const {
    Connector c;
    c.level = level;
    c.type = port(source)->type;
    c.source = std::move(source);
    c.target = std::move(target);
    c.origin = origin;
    c.pos = std::move(pos);
    return c;
  }
};

bool legal_direction(EndSide src_side, Direction src_dir, EndSide dst_side, Direction dst_dir) {
  const bool src_ok = (src_side == EndSide::Parent && src_dir == Direction::In) ||
                      (src_side == EndSide::Child && src_dir == Direction::Out);
  const bool dst_ok = (dst_side == EndSide::Child && dst_dir == Direction::In) ||
                      (dst_side == EndSide::Parent && dst_dir == Direction::Out);
  return src_ok && dst_ok;
}

const char* dir_name(Direction d) { return d == Direction::In ? "in" : "out"; }

}  // namespace

TreeResult build_instance_tree(const std::string& rootType, const Program& prog) {
  TreeResult out;
  const ResolvedComponent* root = prog.component(rootType);
  if (!root) {
    out.diagnostics.push_back(
        error("E0301", SourcePos{"<root>", 1, 1}, "unknown component type '" + rootType + "'"));
    return out;
  }
  InstanceNode node;
  node.typeName = rootType;
  node.kind = root->kind;
  node.component = root;
  out.tree.nodes.push_back(std::move(node));
  TreeBuilder(prog, out).expand(0);
  normalize(out.diagnostics);
  return out;
}

ConnectorsResult collect_explicit(const ResolvedComponent& rc, const InstancePath& level,
                                  const Program& prog) {
  ConnectorsResult out;
  LevelView view{rc, level, prog};
  for (const ConnectDecl& d : rc.decl->connects) {
    auto source = view.resolve(d.source, out.diagnostics);
    for (const PortRef& t : d.targets) {
      auto target = view.resolve(t, out.diagnostics);
      if (source && target) {
        out.connectors.push_back(view.make(*source, *target, ConnectorOrigin::Explicit, t.pos));
      }
    }
  }
  for (const ResolvedInstance& inst : rc.subcomponents) {
    const SubcomponentDecl& sd = rc.decl->subcomponents[inst.declIndex];
    for (const InlineConnect& ic : sd.inlineConnects) {
      PortRef src_ref{{inst.name, ic.sourcePort}, ic.pos};
      auto source = view.resolve(src_ref, out.diagnostics);
      auto target = view.resolve(ic.target, out.diagnostics);
      if (source && target) {
        out.connectors.push_back(view.make(*source, *target, ConnectorOrigin::Inline, ic.pos));
      }
    }
  }
  normalize(out.diagnostics);
  return out;
}

ConnectorsResult autoconnect(const ResolvedComponent& rc, const InstancePath& level,
                             const Program& prog, const std::vector<Connector>& existing) {
  ConnectorsResult out;
  if (!rc.decl->autoconnect) return out;
  LevelView view{rc, level, prog};

  std::set<ChannelEnd> fed;
  for (const Connector& c : existing) fed.insert(c.target);

  std::vector<ChannelEnd> sources;
  std::vector<ChannelEnd> targets;
  for (const ResolvedPort& p : rc.ports) {
    if (p.direction == Direction::In) sources.push_back({level, p.name, EndSide::Parent});
  }
  for (const ResolvedInstance& inst : rc.subcomponents) {
    const ResolvedComponent* type = prog.component(inst.typeName);
    if (!type) continue;
    for (const ResolvedPort& p : type->ports) {
      ChannelEnd end{view.child_path(inst.name), p.name, EndSide::Child};
      (p.direction == Direction::Out ? sources : targets).push_back(std::move(end));
    }
  }
  for (const ResolvedPort& p : rc.ports) {
    if (p.direction == Direction::Out) targets.push_back({level, p.name, EndSide::Parent});
  }

  for (const ChannelEnd& target : targets) {
    if (fed.count(target)) continue;
    const MsgType& target_type = view.port(target)->type;
    std::vector<const ChannelEnd*> matches;
    for (const ChannelEnd& source : sources) {
      if (source.port == target.port && is_subtype(view.port(source)->type, target_type)) {
        matches.push_back(&source);
      }
    }
    if (matches.size() == 1) {
      out.connectors.push_back(view.make(*matches.front(), target, ConnectorOrigin::Auto, rc.decl->autoconnectPos));
    } else if (matches.size() > 1) {
      std::string list;
      for (const ChannelEnd* m : matches) {
        if (!list.empty()) list += ", ";
        list += view.describe(*m);
      }
      out.diagnostics.push_back(error("E0304", rc.decl->autoconnectPos,
                                      "ambiguous autoconnect for '" + view.describe(target) +
                                          "': candidate sources " + list));
    }
  }
  normalize(out.diagnostics);
  return out;
}

Diagnostics validate_connectors(const ResolvedComponent& rc, const InstancePath& level,
                                const Program& prog, const std::vector<Connector>& all) {
  Diagnostics diags;
  LevelView view{rc, level, prog};
  std::set<ChannelEnd> touched;
  std::map<ChannelEnd, const Connector*> feeder;

  for (const Connector& c : all) {
    if (c.level != level) continue;
    touched.insert(c.source);
    touched.insert(c.target);
    const ResolvedPort* src = view.port(c.source);
    const ResolvedPort* dst = view.port(c.target);
    if (!src || !dst) continue;
    const std::string what = view.describe(c.source) + " -> " + view.describe(c.target);
    if (!legal_direction(c.source.side, src->direction, c.target.side, dst->direction)) {
      diags.push_back(error("E0305", c.pos,
                            std::string("illegal connector direction ") + what + " (" +
                                (c.source.side == EndSide::Parent ? "own " : "child ") +
                                dir_name(src->direction) + " -> " +
                                (c.target.side == EndSide::Parent ? "own " : "child ") +
                                dir_name(dst->direction) + ")"));
    }
    if (!is_subtype(src->type, dst->type)) {
      diags.push_back(error("E0306", c.pos,
                            "type mismatch on " + what + ": " + to_string(src->type) +
                                " is not assignable to " + to_string(dst->type)));
    }
    auto [it, inserted] = feeder.emplace(c.target, &c);
    if (!inserted) {
      diags.push_back(error("E0307", c.pos,
                            "'" + view.describe(c.target) + "' already fed by " +
                                view.describe(it->second->source)));
    }
  }

  for (const ResolvedPort& p : rc.ports) {
    if (!touched.count(ChannelEnd{level, p.name, EndSide::Parent})) {
      diags.push_back(warning("W0301", p.pos,
                              "port '" + p.name + "' of '" + rc.name() + "' is not connected"));
    }
  }
  for (const ResolvedInstance& inst : rc.subcomponents) {
    const ResolvedComponent* type = prog.component(inst.typeName);
    if (!type) continue;
    for (const ResolvedPort& p : type->ports) {
      if (!touched.count(ChannelEnd{view.child_path(inst.name), p.name, EndSide::Child})) {
        diags.push_back(warning("W0301", inst.pos,
                                "port '" + inst.name + "." + p.name + "' is not connected"));
      }
    }
  }
  normalize(diags);
  return diags;
}

ElaborateResult elaborate(const std::string& rootType, const Program& prog) {
  ElaborateResult out;
  out.architecture.rootType = rootType;
  TreeResult tree = build_instance_tree(rootType, prog);
  out.diagnostics = std::move(tree.diagnostics);
  out.architecture.tree = std::move(tree.tree);
  if (out.architecture.tree.nodes.empty()) return out;

  auto append = [&](Diagnostics&& more) {
    out.diagnostics.insert(out.diagnostics.end(), std::make_move_iterator(more.begin()),
                           std::make_move_iterator(more.end()));
  };

  for (const InstanceNode& node : out.architecture.tree.nodes) {
    if (node.kind != ComponentKind::Structural) continue;
    const ResolvedComponent& rc = *node.component;
    ConnectorsResult explicit_ = collect_explicit(rc, node.path, prog);
    append(std::move(explicit_.diagnostics));
    ConnectorsResult auto_ = autoconnect(rc, node.path, prog, explicit_.connectors);
    append(std::move(auto_.diagnostics));
    std::vector<Connector> level = std::move(explicit_.connectors);
    level.insert(level.end(), std::make_move_iterator(auto_.connectors.begin()),
                 std::make_move_iterator(auto_.connectors.end()));
    append(validate_connectors(rc, node.path, prog, level));
    auto& all = out.architecture.connectors;
    all.insert(all.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  // Levels are visited in preorder and collect_explicit emits explicit
  // before inline connectors, so this order already is the canonical one.
  std::stable_sort(out.architecture.connectors.begin(), out.architecture.connectors.end(),
                   [&](const Connector& a, const Connector& b) {
                     if (a.level != b.level) {
                       return *out.architecture.tree.find(a.level) < *out.architecture.tree.find(b.level);
                     }
                     return a.origin < b.origin;
                   });
  normalize(out.diagnostics);
  return out;
}

}  // namespace arc
