#include "arc/sema.hpp"

#include <cctype>
#include <set>

namespace arc {

namespace {

std::string lower_first(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

void walk_stmts(const std::vector<Stmt>& body, const auto& visit) {
  for (const Stmt& s : body) {
    visit(s);
    if (s.kind == StmtKind::If) {
      walk_stmts(s.thenBody, visit);
      walk_stmts(s.elseBody, visit);
    }
  }
}

void walk_expr(const Expr& e, const auto& visit) {
  visit(e);
  for (const Expr& op : e.operands) walk_expr(op, visit);
}

}  // namespace

const ResolvedPort* ResolvedComponent::find_port(const std::string& name) const {
  for (const auto& p : ports) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const ResolvedInstance* ResolvedComponent::find_instance(const std::string& name) const {
  for (const auto& s : subcomponents) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const ResolvedStateVar* ResolvedComponent::find_state(const std::string& name) const {
  for (const auto& s : stateVars) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const HandlerDecl* ResolvedComponent::handler_for(const std::string& port) const {
  for (const auto& b : handlers) {
    if (b.portName == port) return b.handler;
  }
  return nullptr;
}

ResolveResult resolve_defaults(const ComponentDecl& decl, const SymbolTable& table) {
  ResolveResult out;
  ResolvedComponent& rc = out.component;
  rc.decl = &decl;

  for (const PortDecl& p : decl.ports) {
    ResolvedPort rp;
    rp.direction = p.direction;
    rp.pos = p.pos;
    if (auto t = table.resolve_type(p.typeName)) {
      rp.type = *t;
    } else {
      out.diagnostics.push_back(error("E0209", p.pos, "unknown type '" + p.typeName + "'"));
      rp.type = MsgType::object();
    }
    rp.defaultedName = !p.name.has_value();
    rp.name = p.name ? *p.name : p.typeName;
    rc.ports.push_back(std::move(rp));
  }
  std::map<std::string, int> port_names;
  for (const auto& p : rc.ports) ++port_names[p.name];
  std::set<std::string> reported;
  for (const auto& p : rc.ports) {
    if (port_names[p.name] < 2) continue;
    if (p.defaultedName) {
      out.diagnostics.push_back(error("E0203", p.pos,
                                      "unnamed port takes its type's name '" + p.name +
                                          "' only if it is unique, but component '" + decl.name +
                                          "' has another port named '" + p.name + "'"));
    } else if (!reported.insert(p.name).second) {
      out.diagnostics.push_back(
          error("E0203", p.pos, "duplicate port '" + p.name + "' in component '" + decl.name + "'"));
    }
  }

  std::map<std::string, int> type_counts;
  for (const auto& s : decl.subcomponents) ++type_counts[s.typeName];
  for (std::size_t i = 0; i < decl.subcomponents.size(); ++i) {
    const SubcomponentDecl& s = decl.subcomponents[i];
    ResolvedInstance ri;
    ri.typeName = s.typeName;
    ri.declIndex = i;
    ri.pos = s.pos;
    ri.defaultedName = !s.instanceName.has_value();
    ri.name = s.instanceName ? *s.instanceName : lower_first(s.typeName);
    if (ri.defaultedName && type_counts[s.typeName] > 1) {
      out.diagnostics.push_back(error("E0204", s.pos,
                                      "instance of '" + s.typeName +
                                          "' needs a name: component '" + decl.name +
                                          "' has more than one instance of that type"));
    }
    rc.subcomponents.push_back(std::move(ri));
  }
  std::map<std::string, int> instance_names;
  for (const auto& s : rc.subcomponents) ++instance_names[s.name];
  reported.clear();
  for (const auto& s : rc.subcomponents) {
    if (instance_names[s.name] < 2) continue;
    if (s.defaultedName && type_counts[s.typeName] > 1) continue;  // already reported
    if (s.defaultedName || reported.insert(s.name).second == false) {
      out.diagnostics.push_back(error("E0204", s.pos,
                                      "duplicate instance name '" + s.name + "' in component '" +
                                          decl.name + "'"));
    }
  }

  std::set<std::string> state_names;
  for (const StateVarDecl& sv : decl.stateVars) {
    if (!state_names.insert(sv.name).second) {
      out.diagnostics.push_back(error("E0214", sv.pos, "duplicate state variable '" + sv.name + "'"));
      continue;
    }
    auto t = table.resolve_type(sv.typeName);
    if (!t) {
      out.diagnostics.push_back(error("E0209", sv.pos, "unknown type '" + sv.typeName + "'"));
      continue;
    }
    rc.stateVars.push_back(ResolvedStateVar{sv.name, *t, &sv});
  }

  normalize(out.diagnostics);
  return out;
}

ClassifyResult classify(const ResolvedComponent& rc) {
  ClassifyResult out;
  const ComponentDecl& d = *rc.decl;
  const bool structural = !d.subcomponents.empty() || !d.connects.empty() || d.autoconnect;
  const bool behavioral = !d.handlers.empty() || !d.stateVars.empty();
  if (structural && behavioral) {
    out.diagnostics.push_back(error("E0205", d.pos,
                                    "component '" + d.name +
                                        "' mixes structure (subcomponents/connectors) with "
                                        "behavior (handlers/state)"));
    out.kind = ComponentKind::Behavioral;
  } else {
    out.kind = structural ? ComponentKind::Structural : ComponentKind::Behavioral;
  }
  return out;
}

std::optional<std::string> bound_port_name(std::string_view method) {
  constexpr std::string_view prefix = "on";
  constexpr std::string_view suffix = "Received";
  if (method.size() <= prefix.size() + suffix.size()) return std::nullopt;
  if (method.substr(0, prefix.size()) != prefix) return std::nullopt;
  if (method.substr(method.size() - suffix.size()) != suffix) return std::nullopt;
  return lower_first(std::string(method.substr(prefix.size(), method.size() - prefix.size() - suffix.size())));
}

HandlerCheckResult check_handlers(const ResolvedComponent& rc, const SymbolTable& table) {
  HandlerCheckResult out;
  std::set<std::string> bound;
  for (const HandlerDecl& h : rc.decl->handlers) {
    auto port_name = bound_port_name(h.methodName);
    if (!port_name) {
      out.diagnostics.push_back(error("E0206", h.pos,
                                      "handler '" + h.methodName +
                                          "' does not follow the on<Port>Received naming convention"));
      continue;
    }
    const ResolvedPort* port = rc.find_port(*port_name);
    if (!port) {
      out.diagnostics.push_back(error("E0206", h.pos,
                                      "handler '" + h.methodName + "' has no in-port '" + *port_name +
                                          "' to bind to"));
      continue;
    }
    if (port->direction != Direction::In) {
      out.diagnostics.push_back(error("E0206", h.pos,
                                      "handler '" + h.methodName + "' binds to out-port '" +
                                          *port_name + "'; handlers receive on in-ports only"));
      continue;
    }
    auto param_type = table.resolve_type(h.paramTypeName);
    if (!param_type) {
      out.diagnostics.push_back(error("E0209", h.pos, "unknown type '" + h.paramTypeName + "'"));
      continue;
    }
    if (*param_type != port->type) {
      out.diagnostics.push_back(error("E0207", h.pos,
                                      "handler '" + h.methodName + "' takes " + to_string(*param_type) +
                                          " but port '" + port->name + "' carries " +
                                          to_string(port->type)));
      continue;
    }
    if (!bound.insert(*port_name).second) {
      out.diagnostics.push_back(
          error("E0208", h.pos, "second handler for port '" + *port_name + "'"));
      continue;
    }
    out.bindings.push_back(HandlerBinding{&h, *port_name});
  }
  normalize(out.diagnostics);
  return out;
}

Diagnostics check_integrity(const ResolvedComponent& rc, const SymbolTable& table) {
  Diagnostics diags;
  const ComponentDecl& d = *rc.decl;

  auto check_expr = [&](const Expr& root) {
    walk_expr(root, [&](const Expr& e) {
      if (e.kind == ExprKind::EnumLit && !table.enumeration(e.typeName)) {
        diags.push_back(error("E0220", e.pos,
                              "'" + e.typeName + "." + e.text +
                                  "' reaches outside the component; handlers may read only their "
                                  "parameter and own state"));
      }
    });
  };
  for (const HandlerDecl& h : d.handlers) {
    walk_stmts(h.body, [&](const Stmt& s) {
      if (s.kind != StmtKind::If && !s.qualifier.empty()) {
        std::string path;
        for (const auto& q : s.qualifier) path += q + ".";
        path += s.target;
        diags.push_back(error("E0220", s.pos,
                              "'" + path + "' reaches into another component; " +
                                  (s.kind == StmtKind::Send ? "send only on own out-ports"
                                                            : "assign only own state")));
      }
      check_expr(s.value);
    });
  }

  auto check_ref = [&](const PortRef& r) {
    if (r.segments.size() > 2) {
      diags.push_back(error("E0221", r.pos,
                            "port reference '" + r.str() +
                                "' reaches below a direct subcomponent; only 'port' or "
                                "'instance.port' are addressable"));
    }
  };
  for (const ConnectDecl& c : d.connects) {
    check_ref(c.source);
    for (const PortRef& t : c.targets) check_ref(t);
  }
  for (const SubcomponentDecl& s : d.subcomponents) {
    for (const InlineConnect& ic : s.inlineConnects) check_ref(ic.target);
  }
  normalize(diags);
  return diags;
}

const ResolvedComponent* Program::component(const std::string& name) const {
  auto it = components.find(name);
  return it == components.end() ? nullptr : &it->second;
}

Program analyze(std::vector<ModelUnit> units) {
  Program prog;
  prog.units = std::move(units);
  SymbolResult sym = build_symbols(prog.units);
  prog.symbols = std::move(sym.table);
  prog.diagnostics = std::move(sym.diagnostics);

  auto append = [&](Diagnostics&& more) {
    prog.diagnostics.insert(prog.diagnostics.end(), std::make_move_iterator(more.begin()),
                            std::make_move_iterator(more.end()));
  };

  for (const auto& [name, decl] : prog.symbols.componentTypes) {
    ResolveResult res = resolve_defaults(*decl, prog.symbols);
    append(std::move(res.diagnostics));
    ResolvedComponent rc = std::move(res.component);
    ClassifyResult cls = classify(rc);
    append(std::move(cls.diagnostics));
    rc.kind = cls.kind;
    if (rc.kind == ComponentKind::Behavioral) {
      HandlerCheckResult hc = check_handlers(rc, prog.symbols);
      append(std::move(hc.diagnostics));
      rc.handlers = std::move(hc.bindings);
      append(typecheck_behavior(rc, prog.symbols));
    }
    append(check_integrity(rc, prog.symbols));
    prog.components.emplace(name, std::move(rc));
  }
  normalize(prog.diagnostics);
  return prog;
}

}  // namespace arc
