#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "polyfold/charts.hpp"
#include "polyfold/model.hpp"

namespace polyfold {

namespace {

struct Walker {
  const SimplePolyhedron& p;
  ValidationReport& rep;

  void error(const std::string& code, const std::string& loc, const std::string& msg) {
    rep.errors.push_back({code, loc, msg});
  }
};

// Where an edge traversal ends: vertex/port for intervals, nothing for circles.
std::optional<PortRef> traversal_end(const TripleEdge& e, bool forward) {
  if (e.kind == EdgeKind::kCircle) return std::nullopt;
  return forward ? e.endpoints[1] : e.endpoints[0];
}

std::optional<PortRef> traversal_start(const TripleEdge& e, bool forward) {
  if (e.kind == EdgeKind::kCircle) return std::nullopt;
  return forward ? e.endpoints[0] : e.endpoints[1];
}

}  // namespace

ValidationReport validate(const SimplePolyhedron& p) {
  ValidationReport rep;
  Walker w{p, rep};
  rep.double_points = static_cast<int>(p.vertices.size());
  rep.triple_edges = static_cast<int>(p.edges.size());
  rep.region_count = static_cast<int>(p.regions.size());

  // Unique identifiers across each kind.
  {
    std::set<std::string> seen;
    for (const auto& v : p.vertices) {
      if (!seen.insert(v.id).second)
        w.error("DUPLICATE_ID", "vertex:" + v.id, "duplicate vertex id");
    }
    seen.clear();
    for (const auto& e : p.edges) {
      if (!seen.insert(e.id).second)
        w.error("DUPLICATE_ID", "edge:" + e.id, "duplicate edge id");
    }
    seen.clear();
    for (const auto& r : p.regions) {
      if (!seen.insert(r.id).second)
        w.error("DUPLICATE_ID", "region:" + r.id, "duplicate region id");
    }
    seen.clear();
    for (const auto& f : p.free_circles) {
      if (!seen.insert(f).second)
        w.error("DUPLICATE_ID", "free:" + f, "duplicate free circle id");
    }
  }

  // Edge shape.
  for (const auto& e : p.edges) {
    const std::string loc = "edge:" + e.id;
    if (e.kind == EdgeKind::kInterval) {
      if (e.endpoints.size() != 2) {
        w.error("BAD_ENDPOINTS", loc, "interval edge needs exactly 2 endpoints");
        continue;
      }
      if (!e.circle_identification.is_identity()) {
        w.error("BAD_IDENTIFICATION", loc,
                "interval edge must carry the identity identification");
      }
      for (const auto& ep : e.endpoints) {
        if (p.find_vertex(ep.vertex) == nullptr) {
          w.error("DANGLING_REFERENCE", loc, "endpoint vertex '" + ep.vertex +
                                                 "' is not declared");
        } else if (ep.port < 0 || ep.port > 3) {
          w.error("BAD_PORT", loc, "port must be 0..3");
        }
      }
    } else if (!e.endpoints.empty()) {
      w.error("BAD_ENDPOINTS", loc, "circle edge cannot have endpoints");
    }
  }

  // Every vertex port claimed by exactly one edge endpoint.
  {
    std::map<std::string, std::array<int, 4>> port_use;
    for (const auto& v : p.vertices) port_use[v.id] = {0, 0, 0, 0};
    for (const auto& e : p.edges) {
      for (const auto& ep : e.endpoints) {
        auto it = port_use.find(ep.vertex);
        if (it != port_use.end() && ep.port >= 0 && ep.port <= 3) {
          ++it->second[static_cast<size_t>(ep.port)];
        }
      }
    }
    for (const auto& [vid, counts] : port_use) {
      for (int port = 0; port < 4; ++port) {
        int c = counts[static_cast<size_t>(port)];
        if (c == 0) {
          w.error("PORT_UNCLAIMED", "vertex:" + vid,
                  "port " + std::to_string(port) + " has no incident edge");
        } else if (c > 1) {
          w.error("PORT_DOUBLY_USED", "vertex:" + vid,
                  "port " + std::to_string(port) + " claimed by several edges");
        }
      }
    }
  }

  // Region boundary structure: word chaining and slot/free-circle claims.
  std::map<std::pair<std::string, int>, int> slot_claims;
  std::map<std::string, int> free_claims;
  for (const auto& e : p.edges) {
    for (int s = 0; s < 3; ++s) slot_claims[{e.id, s}] = 0;
  }
  for (const auto& f : p.free_circles) free_claims[f] = 0;

  for (const auto& r : p.regions) {
    if (r.genus < 0) {
      w.error("BAD_LABEL", "region:" + r.id, "genus must be non-negative");
    }
    for (size_t bi = 0; bi < r.boundary.size(); ++bi) {
      const std::string loc = "region:" + r.id + "/boundary:" + std::to_string(bi);
      if (const auto* fc = std::get_if<FreeCircleRef>(&r.boundary[bi])) {
        auto it = free_claims.find(fc->id);
        if (it == free_claims.end()) {
          w.error("DANGLING_REFERENCE", loc,
                  "free circle '" + fc->id + "' is not declared");
        } else {
          ++it->second;
        }
        continue;
      }
      const auto& word = std::get<AttachedWord>(r.boundary[bi]);
      if (word.steps.empty()) {
        w.error("EMPTY_WORD", loc, "attached boundary word is empty");
        continue;
      }
      const size_t n = word.steps.size();
      bool refs_ok = true;
      for (size_t i = 0; i < n; ++i) {
        const std::string sloc = loc + "/step:" + std::to_string(i);
        if (const auto* es = std::get_if<EdgeStep>(&word.steps[i])) {
          const TripleEdge* e = p.find_edge(es->edge);
          if (e == nullptr) {
            w.error("DANGLING_REFERENCE", sloc,
                    "edge '" + es->edge + "' is not declared");
            refs_ok = false;
          } else if (es->slot < 0 || es->slot > 2) {
            w.error("BAD_SLOT", sloc, "slot must be 0..2");
            refs_ok = false;
          } else {
            ++slot_claims[{es->edge, es->slot}];
          }
        } else {
          const auto& vs = std::get<VertexStep>(word.steps[i]);
          if (p.find_vertex(vs.vertex) == nullptr) {
            w.error("DANGLING_REFERENCE", sloc,
                    "vertex '" + vs.vertex + "' is not declared");
            refs_ok = false;
          }
        }
      }
      if (!refs_ok) continue;

      // Chaining: each step must hand over to the next consistently, cyclically.
      for (size_t i = 0; i < n; ++i) {
        const std::string sloc = loc + "/step:" + std::to_string(i);
        const auto& cur = word.steps[i];
        const auto& nxt = word.steps[(i + 1) % n];
        if (const auto* es = std::get_if<EdgeStep>(&cur)) {
          const TripleEdge& e = *p.find_edge(es->edge);
          if (e.kind == EdgeKind::kCircle) {
            const auto* ns = std::get_if<EdgeStep>(&nxt);
            if (ns == nullptr || ns->edge != es->edge || ns->forward != es->forward) {
              w.error("BAD_WORD", sloc,
                      "circle edge traversal must be followed by the same circle "
                      "in the same direction");
              continue;
            }
            int expect = es->forward
                             ? e.circle_identification(es->slot)
                             : e.circle_identification.inverse()(es->slot);
            if (ns->slot != expect) {
              w.error("BAD_WORD", sloc,
                      "slot does not follow the circle identification (expected " +
                          std::to_string(expect) + ")");
            }
          } else {
            auto end = traversal_end(e, es->forward);
            const auto* ns = std::get_if<VertexStep>(&nxt);
            if (ns == nullptr) {
              w.error("BAD_WORD", sloc,
                      "interval edge traversal must be followed by a vertex passage");
              continue;
            }
            if (ns->vertex != end->vertex || ns->port_in != end->port) {
              w.error("BAD_WORD", sloc,
                      "vertex passage does not match the edge traversal end (" +
                          end->vertex + "." + std::to_string(end->port) + ")");
            }
          }
        } else {
          const auto& vs = std::get<VertexStep>(cur);
          const auto* ns = std::get_if<EdgeStep>(&nxt);
          if (ns == nullptr) {
            w.error("BAD_WORD", sloc, "vertex passage must be followed by an edge step");
            continue;
          }
          const TripleEdge* e2 = p.find_edge(ns->edge);
          if (e2 == nullptr || e2->kind == EdgeKind::kCircle) {
            w.error("BAD_WORD", sloc, "vertex passage must lead onto an interval edge");
            continue;
          }
          auto start = traversal_start(*e2, ns->forward);
          if (start->vertex != vs.vertex || start->port != vs.port_out) {
            w.error("BAD_WORD", sloc,
                    "edge step after passage must leave " + vs.vertex + "." +
                        std::to_string(vs.port_out));
          }
        }
      }
    }
  }

  for (const auto& [key, count] : slot_claims) {
    const std::string loc = "edge:" + key.first;
    if (count == 0) {
      w.error("SLOT_UNCLAIMED", loc,
              "slot " + std::to_string(key.second) + " claimed by no region");
    } else if (count > 1) {
      w.error("SLOT_DOUBLY_CLAIMED", loc,
              "slot " + std::to_string(key.second) + " claimed " +
                  std::to_string(count) + " times");
    }
  }
  for (const auto& [fid, count] : free_claims) {
    if (count == 0) {
      w.error("FREE_CIRCLE_UNCLAIMED", "free:" + fid,
              "free circle not used by any region");
    } else if (count > 1) {
      w.error("FREE_CIRCLE_REUSED", "free:" + fid,
              "free circle used by several boundary components");
    }
  }

  // Local models at double points.
  if (rep.errors.empty()) {
    ChartAnalysis charts = analyze_charts(p);
    for (auto& issue : charts.errors) rep.errors.push_back(std::move(issue));
  }

  // Connectivity of the underlying space.
  if (rep.errors.empty()) {
    std::map<std::string, int> node_ids;
    auto node = [&node_ids](const std::string& key) {
      return node_ids.emplace(key, static_cast<int>(node_ids.size())).first->second;
    };
    std::vector<std::pair<int, int>> links;
    for (const auto& r : p.regions) {
      int rn = node("r:" + r.id);
      for (const auto& bc : r.boundary) {
        if (const auto* fc = std::get_if<FreeCircleRef>(&bc)) {
          links.emplace_back(rn, node("f:" + fc->id));
        } else {
          for (const auto& st : std::get<AttachedWord>(bc).steps) {
            if (const auto* es = std::get_if<EdgeStep>(&st)) {
              links.emplace_back(rn, node("e:" + es->edge));
            }
          }
        }
      }
    }
    for (const auto& e : p.edges) {
      int en = node("e:" + e.id);
      for (const auto& ep : e.endpoints) {
        links.emplace_back(en, node("v:" + ep.vertex));
      }
    }
    for (const auto& v : p.vertices) node("v:" + v.id);
    for (const auto& e : p.edges) node("e:" + e.id);
    for (const auto& f : p.free_circles) node("f:" + f);

    if (!node_ids.empty()) {
      std::vector<int> parent(node_ids.size());
      for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
      std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
          parent[static_cast<size_t>(x)] =
              parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
          x = parent[static_cast<size_t>(x)];
        }
        return x;
      };
      for (auto [a, b] : links) parent[static_cast<size_t>(find(a))] = find(b);
      std::set<int> roots;
      for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
      if (roots.size() > 1) {
        w.error("DISCONNECTED", "polyhedron:" + p.name,
                "underlying space has " + std::to_string(roots.size()) +
                    " connected components");
      }
    }
  }

  // Warnings.
  if (p.edges.empty() && p.vertices.empty()) {
    if (p.free_circles.empty()) {
      rep.warnings.push_back({"CLOSED_SURFACE_INPUT", "polyhedron:" + p.name,
                              "input is a closed surface with empty singular set"});
    } else {
      rep.warnings.push_back({"EMPTY_SINGULAR_SET", "polyhedron:" + p.name,
                              "singular set is empty"});
    }
  }

  rep.ok = rep.errors.empty();
  return rep;
}

int euler_characteristic(const SimplePolyhedron& p) {
  ValidationReport rep = validate(p);
  if (!rep.ok) {
    throw Error(ErrorCode::kInvalidInput,
                "euler_characteristic: polyhedron fails validation");
  }
  // Additivity over the canonical cellulation: the singular graph contributes
  // V - E (circles contribute 0), every region its surface characteristic,
  // and boundary circles contribute 0.
  int chi = static_cast<int>(p.vertices.size());
  for (const auto& e : p.edges) {
    if (e.kind == EdgeKind::kInterval) --chi;
  }
  for (const auto& r : p.regions) {
    int b = static_cast<int>(r.boundary.size());
    chi += r.orientable ? (2 - 2 * r.genus - b) : (2 - r.genus - b);
  }
  return chi;
}

}  // namespace polyfold
