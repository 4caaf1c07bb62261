#include "polyfold/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace polyfold {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int node_at(const SingularArc& a, bool forward, bool start) {
  return (forward == start) ? a.from_node : a.to_node;
}

int port_at(const SingularArc& a, bool forward, bool start) {
  return (forward == start) ? a.from_port : a.to_port;
}

}  // namespace

SingularGraph singular_graph(const SimplePolyhedron& p) {
  ValidationReport rep = validate(p);
  if (!rep.ok) {
    throw Error(ErrorCode::kInvalidInput, "singular_graph: polyhedron fails validation");
  }
  SingularGraph g;
  ChartAnalysis charts = analyze_charts(p);
  g.corners = std::move(charts.corners);

  std::map<std::string, int> node_index;
  std::vector<const DoublePoint*> verts;
  for (const auto& v : p.vertices) verts.push_back(&v);
  std::sort(verts.begin(), verts.end(),
            [](const DoublePoint* a, const DoublePoint* b) { return a->id < b->id; });
  for (const auto* v : verts) {
    node_index[v->id] = static_cast<int>(g.nodes.size());
    g.nodes.push_back({SingularNode::Kind::kDoublePoint, v->id});
  }
  std::vector<const TripleEdge*> edges;
  for (const auto& e : p.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const TripleEdge* a, const TripleEdge* b) { return a->id < b->id; });
  for (const auto* e : edges) {
    if (e->kind == EdgeKind::kCircle) {
      int n = static_cast<int>(g.nodes.size());
      node_index["circle:" + e->id] = n;
      g.nodes.push_back({SingularNode::Kind::kCircleMarker, e->id});
      g.arcs.push_back({e->id, n, n, -1, -1, e->circle_identification});
    } else {
      g.arcs.push_back({e->id, node_index.at(e->endpoints[0].vertex),
                        node_index.at(e->endpoints[1].vertex), e->endpoints[0].port,
                        e->endpoints[1].port, SlotPerm::identity()});
    }
  }
  return g;
}

SlotPerm loop_monodromy(const SingularGraph& g, const Walk& walk) {
  if (walk.empty()) {
    throw Error(ErrorCode::kNotALoop, "loop_monodromy: empty walk");
  }
  SlotPerm total;
  const size_t n = walk.size();
  for (size_t i = 0; i < n; ++i) {
    const WalkStep& st = walk[i];
    if (st.arc < 0 || st.arc >= static_cast<int>(g.arcs.size())) {
      throw Error(ErrorCode::kNotALoop, "loop_monodromy: arc index out of range");
    }
    const SingularArc& arc = g.arcs[static_cast<size_t>(st.arc)];
    total = total.then(st.forward ? arc.seam : arc.seam.inverse());

    const WalkStep& nx = walk[(i + 1) % n];
    const SingularArc& next_arc = g.arcs[static_cast<size_t>(nx.arc)];
    int here = node_at(arc, st.forward, /*start=*/false);
    int there = node_at(next_arc, nx.forward, /*start=*/true);
    if (here != there) {
      throw Error(ErrorCode::kNotALoop, "loop_monodromy: walk is not composable");
    }
    const SingularNode& node = g.nodes[static_cast<size_t>(here)];
    if (node.kind == SingularNode::Kind::kDoublePoint) {
      int pin = port_at(arc, st.forward, /*start=*/false);
      int pout = port_at(next_arc, nx.forward, /*start=*/true);
      auto trans = derived_transition(g.corners.at(node.id), pin, pout);
      if (!trans.has_value()) {
        throw Error(ErrorCode::kNotALoop,
                    "loop_monodromy: passage transition underivable at " + node.id);
      }
      total = total.then(*trans);
    }
  }
  return total;
}

std::vector<Walk> cycle_basis(const SingularGraph& g, std::uint64_t seed) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<int> order(g.arcs.size());
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    std::uint64_t state = seed;
    for (size_t i = order.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(splitmix64(state) % i);
      std::swap(order[i - 1], order[j]);
    }
  }

  // Forest by union-find over the shuffled arc order; leftover arcs generate.
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  std::vector<int> tree_arcs;
  std::vector<int> extra_arcs;
  for (int ai : order) {
    const auto& a = g.arcs[static_cast<size_t>(ai)];
    int ra = find(a.from_node);
    int rb = find(a.to_node);
    if (ra == rb) {
      extra_arcs.push_back(ai);
    } else {
      parent[static_cast<size_t>(ra)] = rb;
      tree_arcs.push_back(ai);
    }
  }
  std::sort(extra_arcs.begin(), extra_arcs.end());

  // Tree adjacency for path finding.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  for (int ai : tree_arcs) {
    const auto& a = g.arcs[static_cast<size_t>(ai)];
    adj[static_cast<size_t>(a.from_node)].push_back({a.to_node, ai});
    adj[static_cast<size_t>(a.to_node)].push_back({a.from_node, ai});
  }
  auto tree_path = [&](int from, int to) {
    // BFS path from 'from' to 'to' along tree arcs.
    std::vector<int> prev_node(static_cast<size_t>(n), -1);
    std::vector<int> prev_arc(static_cast<size_t>(n), -1);
    std::queue<int> q;
    q.push(from);
    prev_node[static_cast<size_t>(from)] = from;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u == to) break;
      for (auto [v, ai] : adj[static_cast<size_t>(u)]) {
        if (prev_node[static_cast<size_t>(v)] == -1) {
          prev_node[static_cast<size_t>(v)] = u;
          prev_arc[static_cast<size_t>(v)] = ai;
          q.push(v);
        }
      }
    }
    Walk path;
    int cur = to;
    while (cur != from) {
      int ai = prev_arc[static_cast<size_t>(cur)];
      const auto& a = g.arcs[static_cast<size_t>(ai)];
      bool fwd = (a.to_node == cur);
      path.push_back({ai, fwd});
      cur = prev_node[static_cast<size_t>(cur)];
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::vector<Walk> basis;
  for (int ai : extra_arcs) {
    const auto& a = g.arcs[static_cast<size_t>(ai)];
    Walk w;
    w.push_back({ai, true});
    if (a.from_node != a.to_node) {
      Walk back = tree_path(a.to_node, a.from_node);
      w.insert(w.end(), back.begin(), back.end());
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

MonodromyReport check_compatibility(const SimplePolyhedron& p) {
  SingularGraph g = singular_graph(p);
  MonodromyReport rep;
  rep.compatible = true;
  rep.justification =
      "the sign of the prong permutation is multiplicative under concatenation "
      "and factors through the cycle space, which simple loops generate; all "
      "simple loops avoid reflections iff every basis cycle has sign +1, since "
      "the identity and the 3-cycles are exactly the even permutations";
  for (auto& w : cycle_basis(g, 0)) {
    CycleReport cr;
    cr.monodromy = loop_monodromy(g, w);
    cr.sign = cr.monodromy.sign();
    cr.perm_class = cr.monodromy.is_identity()
                        ? "trivial"
                        : (cr.monodromy.is_three_cycle() ? "free" : "reversing");
    cr.walk = w;
    if (cr.sign < 0 && !rep.has_witness) {
      rep.witness = w;
      rep.has_witness = true;
      rep.compatible = false;
    }
    rep.cycles.push_back(std::move(cr));
  }
  return rep;
}

std::string describe_walk(const SingularGraph& g, const Walk& walk) {
  std::string s;
  for (const auto& st : walk) {
    if (!s.empty()) s += " ";
    s += (st.forward ? "" : "~") + g.arcs[static_cast<size_t>(st.arc)].edge_id;
  }
  return s;
}

}  // namespace polyfold
