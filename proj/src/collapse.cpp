#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "polyfold/complexes.hpp"

namespace polyfold {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct State {
  const SimplicialComplex2* k;
  std::vector<bool> v_alive, e_alive, t_alive;
  std::vector<std::vector<int>> v_edges;  // vertex -> incident edges
  std::vector<std::vector<int>> e_tris;   // edge -> incident triangles
  std::map<std::array<int, 2>, int> edge_index;
  std::vector<std::array<int, 3>> tri_edges;
  int nv = 0, ne = 0, nt = 0;

  explicit State(const SimplicialComplex2& kk) : k(&kk) {
    nv = kk.vertex_count;
    ne = static_cast<int>(kk.edges.size());
    nt = static_cast<int>(kk.triangles.size());
    v_alive.assign(static_cast<size_t>(nv), true);
    e_alive.assign(static_cast<size_t>(ne), true);
    t_alive.assign(static_cast<size_t>(nt), true);
    v_edges.resize(static_cast<size_t>(nv));
    e_tris.resize(static_cast<size_t>(ne));
    for (int e = 0; e < ne; ++e) {
      edge_index[kk.edges[(size_t)e]] = e;
      v_edges[(size_t)kk.edges[(size_t)e][0]].push_back(e);
      v_edges[(size_t)kk.edges[(size_t)e][1]].push_back(e);
    }
    for (int t = 0; t < nt; ++t) {
      const auto& tr = kk.triangles[(size_t)t];
      tri_edges.push_back({edge_index.at({tr[0], tr[1]}),
                           edge_index.at({tr[0], tr[2]}),
                           edge_index.at({tr[1], tr[2]})});
      for (int e : tri_edges.back()) e_tris[(size_t)e].push_back(t);
    }
  }

  int live_tris_of_edge(int e, int* which = nullptr) const {
    int n = 0;
    for (int t : e_tris[(size_t)e]) {
      if (t_alive[(size_t)t]) {
        ++n;
        if (which != nullptr) *which = t;
      }
    }
    return n;
  }
  int live_edges_of_vertex(int v, int* which = nullptr) const {
    int n = 0;
    for (int e : v_edges[(size_t)v]) {
      if (e_alive[(size_t)e]) {
        ++n;
        if (which != nullptr) *which = e;
      }
    }
    return n;
  }

  std::vector<CollapseMove> free_pairs() const {
    std::vector<CollapseMove> moves;
    for (int e = 0; e < ne; ++e) {
      if (!e_alive[(size_t)e]) continue;
      int t = -1;
      if (live_tris_of_edge(e, &t) == 1) moves.push_back({1, e, t});
    }
    for (int v = 0; v < nv; ++v) {
      if (!v_alive[(size_t)v]) continue;
      int e = -1;
      if (live_edges_of_vertex(v, &e) == 1) moves.push_back({0, v, e});
    }
    return moves;
  }

  bool legal(const CollapseMove& m) const {
    if (m.dim == 1) {
      if (!e_alive[(size_t)m.face] || !t_alive[(size_t)m.coface]) return false;
      int t = -1;
      return live_tris_of_edge(m.face, &t) == 1 && t == m.coface;
    }
    if (!v_alive[(size_t)m.face] || !e_alive[(size_t)m.coface]) return false;
    int e = -1;
    return live_edges_of_vertex(m.face, &e) == 1 && e == m.coface;
  }

  void apply(const CollapseMove& m) {
    if (m.dim == 1) {
      e_alive[(size_t)m.face] = false;
      t_alive[(size_t)m.coface] = false;
    } else {
      v_alive[(size_t)m.face] = false;
      e_alive[(size_t)m.coface] = false;
    }
  }

  ResidualSummary summary() const {
    ResidualSummary s;
    s.vertices = static_cast<int>(std::count(v_alive.begin(), v_alive.end(), true));
    s.edges = static_cast<int>(std::count(e_alive.begin(), e_alive.end(), true));
    s.triangles = static_cast<int>(std::count(t_alive.begin(), t_alive.end(), true));
    return s;
  }

  bool is_point() const {
    auto s = summary();
    return s.vertices == 1 && s.edges == 0 && s.triangles == 0;
  }

  // Residual is a disc: connected orientable surface, chi 1, one boundary
  // circle, every live edge in one or two live triangles, no stray cells.
  bool is_disc() const {
    auto s = summary();
    if (s.triangles == 0) return false;
    if (s.vertices - s.edges + s.triangles != 1) return false;
    std::vector<int> boundary_deg(static_cast<size_t>(nv), 0);
    int boundary_edges = 0;
    for (int e = 0; e < ne; ++e) {
      if (!e_alive[(size_t)e]) continue;
      int n = live_tris_of_edge(e);
      if (n == 0 || n > 2) return false;
      if (n == 1) {
        ++boundary_edges;
        ++boundary_deg[(size_t)k->edges[(size_t)e][0]];
        ++boundary_deg[(size_t)k->edges[(size_t)e][1]];
      }
    }
    if (boundary_edges == 0) return false;
    for (int v = 0; v < nv; ++v) {
      if (v_alive[(size_t)v] && live_edges_of_vertex(v) == 0) return false;
      if (boundary_deg[(size_t)v] != 0 && boundary_deg[(size_t)v] != 2) return false;
    }
    // one boundary circle: walk it
    int start = -1;
    for (int e = 0; e < ne && start < 0; ++e) {
      if (e_alive[(size_t)e] && live_tris_of_edge(e) == 1) start = e;
    }
    std::set<int> seen;
    int cur = start;
    int vcur = k->edges[(size_t)start][1];
    while (seen.insert(cur).second) {
      int next = -1;
      for (int e : v_edges[(size_t)vcur]) {
        if (e == cur || !e_alive[(size_t)e] || live_tris_of_edge(e) != 1) continue;
        next = e;
        break;
      }
      if (next < 0) break;
      cur = next;
      vcur = k->edges[(size_t)cur][0] == vcur ? k->edges[(size_t)cur][1]
                                              : k->edges[(size_t)cur][0];
    }
    if (static_cast<int>(seen.size()) != boundary_edges) return false;
    // orientability: 2-color live triangles across interior edges
    std::vector<int> orient(static_cast<size_t>(nt), 0);
    for (int t0 = 0; t0 < nt; ++t0) {
      if (!t_alive[(size_t)t0] || orient[(size_t)t0] != 0) continue;
      orient[(size_t)t0] = 1;
      std::vector<int> stack{t0};
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int e : tri_edges[(size_t)t]) {
          if (live_tris_of_edge(e) != 2) continue;
          for (int t2 : e_tris[(size_t)e]) {
            if (!t_alive[(size_t)t2] || t2 == t) continue;
            // induced orientations on a shared edge must disagree
            auto side = [&](int tri, int edge) {
              // sign of edge [a<b] in triangle (x<y<z): +1 for xy,yz; -1 for xz
              const auto& tr = k->triangles[(size_t)tri];
              const auto& ed = k->edges[(size_t)edge];
              if (ed[0] == tr[0] && ed[1] == tr[2]) return -1;
              return 1;
            };
            int want = -orient[(size_t)t] * side(t, e) * side(t2, e);
            if (orient[(size_t)t2] == 0) {
              orient[(size_t)t2] = want;
              stack.push_back(t2);
            } else if (orient[(size_t)t2] != want) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool meets(CollapseTarget target) const {
    return target == CollapseTarget::kPoint ? is_point() : is_disc();
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::vector<bool>& bits) {
      std::uint64_t acc = 0;
      int n = 0;
      for (bool b : bits) {
        acc = (acc << 1) | (b ? 1u : 0u);
        if (++n == 64) {
          h ^= acc;
          h *= 1099511628211ull;
          acc = 0;
          n = 0;
        }
      }
      h ^= acc ^ static_cast<std::uint64_t>(n);
      h *= 1099511628211ull;
    };
    mix(v_alive);
    mix(e_alive);
    mix(t_alive);
    return h;
  }
};

}  // namespace

CollapseResult collapse_search(const SimplicialComplex2& k, CollapseTarget target,
                               const CollapseBudget& budget) {
  CollapseResult result;
  State base(k);
  result.residual = base.summary();

  // Collapses preserve the homotopy type; both targets have chi 1.
  if (k.euler() != 1) {
    result.outcome = CollapseOutcome::kProvenImpossible;
    result.reason = "euler characteristic is " + std::to_string(k.euler()) +
                    ", target requires 1";
    return result;
  }
  if (base.meets(target)) {
    result.outcome = CollapseOutcome::kCollapsed;
    return result;
  }
  if (base.free_pairs().empty()) {
    result.outcome = CollapseOutcome::kProvenImpossible;
    result.reason = "complex has no free face at all";
    return result;
  }

  const int total_simplices = base.nv + base.ne + base.nt;
  if (total_simplices <= budget.exhaustive_max) {
    // full DFS over collapse orders with state memoization
    std::unordered_set<std::uint64_t> seen;
    std::vector<CollapseMove> stack_moves;
    std::function<bool(State&)> dfs = [&](State& st) -> bool {
      if (st.meets(target)) return true;
      if (!seen.insert(st.hash()).second) return false;
      for (const auto& mv : st.free_pairs()) {
        State next = st;
        next.apply(mv);
        stack_moves.push_back(mv);
        if (dfs(next)) return true;
        stack_moves.pop_back();
      }
      return false;
    };
    State root = base;
    if (dfs(root)) {
      result.outcome = CollapseOutcome::kCollapsed;
      result.sequence = stack_moves;
      State replayed = base;
      for (const auto& mv : result.sequence) replayed.apply(mv);
      result.residual = replayed.summary();
      return result;
    }
    result.outcome = CollapseOutcome::kProvenImpossible;
    result.reason = "exhaustive search over all collapse orders";
    return result;
  }

  // Greedy with random tie-breaking and restarts.
  ResidualSummary best = base.summary();
  for (int restart = 0; restart < budget.restarts; ++restart) {
    std::uint64_t rng = budget.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(restart) + 1;
    State st = base;
    std::vector<CollapseMove> seq;
    for (int step = 0; step < budget.steps; ++step) {
      if (st.meets(target)) {
        result.outcome = CollapseOutcome::kCollapsed;
        result.sequence = seq;
        result.residual = st.summary();
        return result;
      }
      auto moves = st.free_pairs();
      if (moves.empty()) break;
      const auto& mv = moves[splitmix64(rng) % moves.size()];
      st.apply(mv);
      seq.push_back(mv);
    }
    if (st.meets(target)) {
      result.outcome = CollapseOutcome::kCollapsed;
      result.sequence = seq;
      result.residual = st.summary();
      return result;
    }
    auto s = st.summary();
    if (s.vertices + s.edges + s.triangles < best.vertices + best.edges + best.triangles) {
      best = s;
    }
  }
  result.outcome = CollapseOutcome::kExhaustedBudget;
  result.residual = best;
  result.reason = "no collapse found within budget";
  return result;
}

std::optional<ResidualSummary> replay_collapse(const SimplicialComplex2& k,
                                               const std::vector<CollapseMove>& seq) {
  State st(k);
  for (const auto& mv : seq) {
    if (!st.legal(mv)) return std::nullopt;
    st.apply(mv);
  }
  return st.summary();
}

}  // namespace polyfold
