#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

#include "delta2.hpp"
#include "polyfold/charts.hpp"
#include "polyfold/monodromy.hpp"
#include "polyfold/thicken.hpp"

namespace polyfold {

namespace {

// Hexagonal disc positions: center, then L/R rim vertices per prong slot.
// Rim cycle: L0 R0 L1 R1 L2 R2; tip edge of slot i is (L_i, R_i).
constexpr int kHC = 0;
int HL(int i) { return 1 + 2 * i; }
int HR(int i) { return 2 + 2 * i; }
constexpr int kSegments = 4;

struct UnionFind {
  std::vector<int> parent;
  int fresh() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[(size_t)x] != x) {
      parent[(size_t)x] = parent[(size_t)parent[(size_t)x]];
      x = parent[(size_t)x];
    }
    return x;
  }
  void unite(int a, int b) { parent[(size_t)find(a)] = find(b); }
};

struct SideInfo {
  enum class Type { kItem, kCorner, kFree };
  Type type = Type::kItem;
  // item
  std::string edge;
  int slot = 0;
  bool forward = true;
  // corner
  std::string vertex;
  int port_in = 0;
  int port_out = 0;
  // free
  std::string free_id;
};

struct RegionSurface {
  detail::Delta2 delta;  // twice subdivided, all triangles have distinct corners
  std::vector<SideInfo> sides;
  // per side: the 4 directed sub-edges (from,to) in order along the side
  std::vector<std::array<std::array<int, 2>, 4>> side_edges;
  std::vector<std::array<int, 3>> tris;  // corner triples (as stored walks)
  std::vector<bool> vertex_free;         // collapsed fiber
  std::vector<CellRef> vertex_free_cell;
};

RegionSurface build_region_surface(const Region& r) {
  RegionSurface out;
  detail::Delta2 d;
  CellRef rcell{CellRef::Kind::kRegion, r.id};

  std::vector<std::pair<int, bool>> walk;  // (delta edge, forward)
  int anchor = -1;
  bool first_component = true;
  for (const auto& bc : r.boundary) {
    std::vector<std::pair<int, bool>> part;
    int start = -1;
    if (const auto* fc = std::get_if<FreeCircleRef>(&bc)) {
      CellRef fcell{CellRef::Kind::kFreeCircle, fc->id};
      int z = d.add_vertex(fcell);
      int side = static_cast<int>(out.sides.size());
      SideInfo si;
      si.type = SideInfo::Type::kFree;
      si.free_id = fc->id;
      out.sides.push_back(si);
      part.push_back({d.add_edge(z, z, fcell, {side, 0, 1}), true});
      start = z;
    } else {
      const auto& word = std::get<AttachedWord>(bc);
      // polygon corners between consecutive elements
      const size_t n = word.steps.size();
      std::vector<int> corner(n);  // corner before element i
      for (size_t i = 0; i < n; ++i) corner[i] = d.add_vertex(rcell);
      for (size_t i = 0; i < n; ++i) {
        int side = static_cast<int>(out.sides.size());
        SideInfo si;
        if (const auto* es = std::get_if<EdgeStep>(&word.steps[i])) {
          si.type = SideInfo::Type::kItem;
          si.edge = es->edge;
          si.slot = es->slot;
          si.forward = es->forward;
        } else {
          const auto& vs = std::get<VertexStep>(word.steps[i]);
          si.type = SideInfo::Type::kCorner;
          si.vertex = vs.vertex;
          si.port_in = vs.port_in;
          si.port_out = vs.port_out;
        }
        out.sides.push_back(si);
        part.push_back(
            {d.add_edge(corner[i], corner[(i + 1) % n], rcell, {side, 0, 1}), true});
      }
      start = corner[0];
    }
    if (first_component) {
      walk = part;
      anchor = start;
      first_component = false;
    } else {
      int cut = d.add_edge(anchor, start, rcell);
      walk.push_back({cut, true});
      walk.insert(walk.end(), part.begin(), part.end());
      walk.push_back({cut, false});
    }
  }
  if (first_component) anchor = d.add_vertex(rcell);
  if (r.orientable) {
    for (int g = 0; g < r.genus; ++g) {
      int a = d.add_edge(anchor, anchor, rcell);
      int b = d.add_edge(anchor, anchor, rcell);
      walk.push_back({a, true});
      walk.push_back({b, true});
      walk.push_back({a, false});
      walk.push_back({b, false});
    }
  } else {
    for (int g = 0; g < std::max(r.genus, 1); ++g) {
      int c = d.add_edge(anchor, anchor, rcell);
      walk.push_back({c, true});
      walk.push_back({c, true});
    }
  }
  if (walk.empty()) {
    int u = d.add_vertex(rcell);
    int w = d.add_vertex(rcell);
    int e1 = d.add_edge(anchor, u, rcell);
    int e2 = d.add_edge(u, w, rcell);
    int e3 = d.add_edge(anchor, w, rcell);
    d.add_tri({{e1, e2, e3}, {true, true, false}}, rcell);
    d.add_tri({{e1, e2, e3}, {true, true, false}}, rcell);
  } else {
    int hub = d.add_vertex(rcell);
    const size_t k = walk.size();
    std::vector<int> spoke(k);
    for (size_t i = 0; i < k; ++i) {
      spoke[i] = d.add_edge(d.edge_from(walk[i].first, walk[i].second), hub, rcell);
    }
    for (size_t i = 0; i < k; ++i) {
      d.add_tri({{walk[i].first, spoke[(i + 1) % k], spoke[i]},
                 {walk[i].second, true, false}},
                rcell);
    }
  }

  out.delta = d.barycentric().barycentric();
  const auto& dd = out.delta;
  out.side_edges.assign(out.sides.size(), {});
  for (size_t e = 0; e < dd.edges.size(); ++e) {
    const auto& tag = dd.etag[e];
    if (tag.side < 0) continue;
    out.side_edges[(size_t)tag.side][(size_t)tag.num] = {dd.edges[e][0],
                                                         dd.edges[e][1]};
  }
  for (const auto& t : dd.tris) out.tris.push_back(dd.corners(t));
  out.vertex_free.assign((size_t)dd.n_vertices, false);
  out.vertex_free_cell.assign((size_t)dd.n_vertices, CellRef{});
  for (int v = 0; v < dd.n_vertices; ++v) {
    if (dd.vcell[(size_t)v].kind == CellRef::Kind::kFreeCircle) {
      out.vertex_free[(size_t)v] = true;
      out.vertex_free_cell[(size_t)v] = dd.vcell[(size_t)v];
    }
  }
  return out;
}

// Per-triangle orientation flags; flips across non-tree dual edges of
// non-orientable regions.  Boundary-touching dual edges enter the spanning
// tree first so that collar strips stay coherent.
struct SlabFrames {
  std::vector<int> flag;  // 0 = as stored, 1 = reversed
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_tris;
};

SlabFrames slab_frames(const RegionSurface& rs) {
  SlabFrames out;
  const auto& tris = rs.tris;
  out.flag.assign(tris.size(), -1);
  // edge -> (triangle, direction of the pair in its walk)
  for (size_t t = 0; t < tris.size(); ++t) {
    const auto& c = tris[t];
    for (int i = 0; i < 3; ++i) {
      int u = c[(size_t)i], v = c[(size_t)((i + 1) % 3)];
      bool fwd = u < v;
      out.edge_tris[{std::min(u, v), std::max(u, v)}].push_back(
          {(int)t, fwd ? 1 : 0});
    }
  }
  // triangles owning any boundary sub-edge; the collar strips around the
  // boundary must stay coherent, so their dual edges enter the tree first
  std::vector<bool> on_boundary(tris.size(), false);
  for (const auto& side : rs.side_edges) {
    for (const auto& sub : side) {
      auto it = out.edge_tris.find({std::min(sub[0], sub[1]), std::max(sub[0], sub[1])});
      if (it != out.edge_tris.end()) {
        for (auto [t, dir] : it->second) {
          (void)dir;
          on_boundary[(size_t)t] = true;
        }
      }
    }
  }
  for (size_t t = 0; t < tris.size(); ++t) {
    for (int corner : tris[t]) {
      if (rs.vertex_free[(size_t)corner]) on_boundary[t] = true;
    }
  }
  std::vector<std::tuple<int, int, int, int, int>> duals;  // prio,t1,d1,t2,d2
  for (const auto& [key, inc] : out.edge_tris) {
    if (inc.size() != 2) continue;
    bool near_boundary = on_boundary[(size_t)inc[0].first] ||
                         on_boundary[(size_t)inc[1].first];
    duals.push_back({near_boundary ? 0 : 1, inc[0].first, inc[0].second,
                     inc[1].first, inc[1].second});
  }
  std::stable_sort(duals.begin(), duals.end(),
                   [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });

  UnionFind uf;
  for (size_t t = 0; t < tris.size(); ++t) uf.fresh();
  std::vector<std::vector<std::tuple<int, int>>> tree((size_t)tris.size());
  for (const auto& [prio, t1, d1, t2, d2] : duals) {
    (void)prio;
    if (uf.find(t1) != uf.find(t2)) {
      uf.unite(t1, t2);
      // coherent orientation: directions must differ after flags
      int rel = (d1 == d2) ? 1 : 0;  // flag xor needed
      tree[(size_t)t1].push_back({t2, rel});
      tree[(size_t)t2].push_back({t1, rel});
    }
  }
  for (size_t t0 = 0; t0 < tris.size(); ++t0) {
    if (out.flag[t0] != -1) continue;
    out.flag[t0] = 0;
    std::vector<int> stack{(int)t0};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (auto [t2, rel] : tree[(size_t)t]) {
        int want = out.flag[(size_t)t] ^ rel;
        if (out.flag[(size_t)t2] == -1) {
          out.flag[(size_t)t2] = want;
          stack.push_back(t2);
        }
      }
    }
  }
  return out;
}

struct Cells {
  struct Prism {
    std::array<int, 6> v;  // a0 b0 c0 a1 b1 c1
    CellRef cell;
  };
  struct Pyramid {
    std::array<int, 5> v;  // base cycle v0..v3, apex v4
    CellRef cell;
  };
  struct Tet {
    std::array<int, 4> v;
    CellRef cell;
  };
  std::vector<Prism> prisms;
  std::vector<Pyramid> pyramids;
  std::vector<Tet> tets;
};

struct SlabBoundary {
  // resolved fiber lines over a side: line[level][k], k = 0..4
  std::array<std::array<int, 5>, 2> line;
  bool valid = false;
};

// assembled data of one region slab
struct Slab {
  RegionSurface surf;
  SlabFrames frames;
  std::map<std::tuple<int, int, int>, int> fid;  // (tri, corner, level) -> id
  std::map<int, int> collapsed;                  // surface vertex -> id
  std::vector<SlabBoundary> side_lines;
};

}  // namespace

Triangulation3 thicken(const SimplePolyhedron& p) {
  ValidationReport vrep = validate(p);
  if (!vrep.ok) {
    throw Error(ErrorCode::kInvalidInput, "thicken: polyhedron fails validation");
  }
  MonodromyReport mono = check_compatibility(p);
  if (!mono.compatible) {
    throw Error(ErrorCode::kIncompatible,
                "thicken: prong bundle monodromy contains a reversing loop; the "
                "orientation-compatibility hypothesis fails");
  }
  ChartAnalysis charts = analyze_charts(p);

  // sorted handles for determinism
  std::vector<const TripleEdge*> edges;
  for (const auto& e : p.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const TripleEdge* a, const TripleEdge* b) { return a->id < b->id; });
  std::vector<const DoublePoint*> verts;
  for (const auto& v : p.vertices) verts.push_back(&v);
  std::sort(verts.begin(), verts.end(),
            [](const DoublePoint* a, const DoublePoint* b) { return a->id < b->id; });
  std::vector<const Region*> regions;
  for (const auto& r : p.regions) regions.push_back(&r);
  std::sort(regions.begin(), regions.end(),
            [](const Region* a, const Region* b) { return a->id < b->id; });

  // ---------------------------------------------------------------------
  // Level-to-tip assignment bits sigma(edge, slot): which rim letter (L=0,
  // R=1) of the slot's tip receives a region's level-0 sheet.  Constrained
  // by circle identifications (constant along identification orbits) and by
  // the requirement that every double point's boundary pattern assembles
  // into a sphere (exactly 4 rim/strip circuits).
  // ---------------------------------------------------------------------
  std::map<std::pair<std::string, int>, int> sigma;
  {
    std::vector<std::pair<std::string, int>> vars;
    std::map<std::pair<std::string, int>, int> var_index;
    std::map<std::pair<std::string, int>, std::pair<std::string, int>> orbit_rep;
    for (const auto* e : edges) {
      for (int s = 0; s < 3; ++s) orbit_rep[{e->id, s}] = {e->id, s};
      if (e->kind == EdgeKind::kCircle) {
        // orbits of the identification share one bit
        for (int s = 0; s < 3; ++s) {
          int t = e->circle_identification(s);
          // union the representatives (tiny, do naive chasing)
          auto ra = orbit_rep[{e->id, s}];
          auto rb = orbit_rep[{e->id, t}];
          if (ra != rb) {
            for (auto& [k, v] : orbit_rep) {
              (void)k;
              if (v == rb) v = ra;
            }
          }
        }
      }
    }
    for (const auto* e : edges) {
      for (int s = 0; s < 3; ++s) {
        auto rep = orbit_rep[{e->id, s}];
        if (!var_index.count(rep)) {
          var_index[rep] = static_cast<int>(vars.size());
          vars.push_back(rep);
        }
      }
    }

    // per double point: check the pattern circuit count given sigma
    auto vertex_ok = [&](const DoublePoint* v,
                         const std::map<std::pair<std::string, int>, int>& sig) {
      const CornerIncidence& inc = charts.corners.at(v->id);
      // nodes: (port, slot, letter 0=L / 1=R) -> 0..23
      auto node = [](int port, int slot, int letter) {
        return (port * 3 + slot) * 2 + letter;
      };
      std::vector<int> match(24, -1);
      auto link = [&](int a, int b) {
        match[(size_t)a] = b;
        match[(size_t)b] = a;
      };
      // rim side arcs: R of slot i -> L of slot i+1
      for (int port = 0; port < 4; ++port) {
        for (int s = 0; s < 3; ++s) link(node(port, s, 1), node(port, (s + 1) % 3, 0));
      }
      // strip arcs per wing
      std::vector<std::pair<int, int>> strip(24, {-1, -1});
      for (int pa = 0; pa < 4; ++pa) {
        for (int pb = pa + 1; pb < 4; ++pb) {
          int sa = inc.slot_in_wing(pa, pb);
          int sb = inc.slot_in_wing(pb, pa);
          int siga = sig.at(orbit_rep.at({inc.edge_at_port[(size_t)pa], sa}));
          int sigb = sig.at(orbit_rep.at({inc.edge_at_port[(size_t)pb], sb}));
          strip[(size_t)node(pa, sa, siga)] = {node(pb, sb, sigb), 0};
          strip[(size_t)node(pb, sb, sigb)] = {node(pa, sa, siga), 0};
          strip[(size_t)node(pa, sa, 1 - siga)] = {node(pb, sb, 1 - sigb), 1};
          strip[(size_t)node(pb, sb, 1 - sigb)] = {node(pa, sa, 1 - siga), 1};
        }
      }
      // circuits of the 2-regular graph: alternate rim and strip arcs
      std::vector<bool> seen(24, false);
      int circuits = 0;
      for (int start = 0; start < 24; ++start) {
        if (seen[(size_t)start]) continue;
        ++circuits;
        int cur = start;
        do {
          seen[(size_t)cur] = true;
          int via_rim = match[(size_t)cur];
          seen[(size_t)via_rim] = true;
          cur = strip[(size_t)via_rim].first;
        } while (cur != start);
      }
      return circuits == 4;
    };

    // depth-first assignment over the sigma bits
    std::map<std::pair<std::string, int>, int> trial;
    std::function<bool(size_t)> assign = [&](size_t k) -> bool {
      if (k == vars.size()) {
        for (const auto* v : verts) {
          if (!vertex_ok(v, trial)) return false;
        }
        return true;
      }
      for (int bit = 0; bit < 2; ++bit) {
        trial[vars[k]] = bit;
        bool feasible = true;
        // early check: vertices all of whose incident orbit bits are set
        for (const auto* v : verts) {
          const CornerIncidence& inc = charts.corners.at(v->id);
          bool ready = true;
          for (int port = 0; port < 4 && ready; ++port) {
            for (int s = 0; s < 3 && ready; ++s) {
              auto rep = orbit_rep.at({inc.edge_at_port[(size_t)port], s});
              if (!trial.count(rep)) ready = false;
            }
          }
          if (ready && !vertex_ok(v, trial)) {
            feasible = false;
            break;
          }
        }
        if (feasible && assign(k + 1)) return true;
      }
      trial.erase(vars[k]);
      return false;
    };
    if (!assign(0)) {
      throw Error(ErrorCode::kChartUnsupported,
                  "thicken: no spherical assembly of the double point patterns");
    }
    for (const auto* e : edges) {
      for (int s = 0; s < 3; ++s) {
        sigma[{e->id, s}] = trial.at(orbit_rep.at({e->id, s}));
      }
    }
  }

  // ---------------------------------------------------------------------
  // ids and blocks
  // ---------------------------------------------------------------------
  UnionFind uf;
  Cells cells;

  // edge blocks
  std::map<std::string, std::array<std::array<int, 7>, kSegments + 1>> evid;
  for (const auto* e : edges) {
    auto& grid = evid[e->id];
    int sections = (e->kind == EdgeKind::kCircle) ? kSegments : kSegments + 1;
    for (int s = 0; s < sections; ++s) {
      for (int h = 0; h < 7; ++h) grid[(size_t)s][(size_t)h] = uf.fresh();
    }
    if (e->kind == EdgeKind::kCircle) {
      // seam: section "4" = section 0 relabeled by the identification
      const SlotPerm& rho = e->circle_identification;
      grid[kSegments][(size_t)kHC] = grid[0][(size_t)kHC];
      for (int i = 0; i < 3; ++i) {
        grid[kSegments][(size_t)HL(i)] = grid[0][(size_t)HL(rho(i))];
        grid[kSegments][(size_t)HR(i)] = grid[0][(size_t)HR(rho(i))];
      }
    }
    CellRef ecell{CellRef::Kind::kEdge, e->id};
    for (int s = 0; s < kSegments; ++s) {
      const auto& lo = grid[(size_t)s];
      const auto& hi = grid[(size_t)s + 1];
      for (int i = 0; i < 3; ++i) {
        // tip triangle (C, L_i, R_i) and side triangle (C, R_i, L_{i+1})
        cells.prisms.push_back({{lo[(size_t)kHC], lo[(size_t)HL(i)], lo[(size_t)HR(i)],
                                 hi[(size_t)kHC], hi[(size_t)HL(i)], hi[(size_t)HR(i)]},
                                ecell});
        cells.prisms.push_back(
            {{lo[(size_t)kHC], lo[(size_t)HR(i)], lo[(size_t)HL((i + 1) % 3)],
              hi[(size_t)kHC], hi[(size_t)HR(i)], hi[(size_t)HL((i + 1) % 3)]},
             ecell});
      }
    }
  }

  // region slabs
  std::map<std::string, Slab> slabs;
  for (const auto* r : regions) {
    Slab slab;
    slab.surf = build_region_surface(*r);
    slab.frames = slab_frames(slab.surf);
    const auto& tris = slab.surf.tris;
    CellRef rcell{CellRef::Kind::kRegion, r->id};

    auto fiber = [&](int t, int corner, int level) {
      auto key = std::make_tuple(t, corner, level);
      auto it = slab.fid.find(key);
      if (it != slab.fid.end()) return it->second;
      int id = uf.fresh();
      slab.fid[key] = id;
      return id;
    };
    auto collapsed_id = [&](int v) {
      auto it = slab.collapsed.find(v);
      if (it != slab.collapsed.end()) return it->second;
      int id = uf.fresh();
      slab.collapsed[v] = id;
      return id;
    };

    // cells per triangle
    for (size_t t = 0; t < tris.size(); ++t) {
      const auto& c = tris[t];
      std::vector<int> free_corners, solid_corners;
      for (int corner : c) {
        (slab.surf.vertex_free[(size_t)corner] ? free_corners : solid_corners)
            .push_back(corner);
      }
      if (free_corners.empty()) {
        cells.prisms.push_back({{fiber((int)t, c[0], 0), fiber((int)t, c[1], 0),
                                 fiber((int)t, c[2], 0), fiber((int)t, c[0], 1),
                                 fiber((int)t, c[1], 1), fiber((int)t, c[2], 1)},
                                rcell});
      } else if (free_corners.size() == 1) {
        int f = free_corners[0];
        int a = solid_corners[0], b = solid_corners[1];
        cells.pyramids.push_back({{fiber((int)t, a, 0), fiber((int)t, b, 0),
                                   fiber((int)t, b, 1), fiber((int)t, a, 1),
                                   collapsed_id(f)},
                                  slab.surf.vertex_free_cell[(size_t)f]});
      } else if (free_corners.size() == 2) {
        int a = solid_corners[0];
        cells.tets.push_back({{fiber((int)t, a, 0), fiber((int)t, a, 1),
                               collapsed_id(free_corners[0]),
                               collapsed_id(free_corners[1])},
                              slab.surf.vertex_free_cell[(size_t)free_corners[0]]});
      } else {
        throw Error(ErrorCode::kChartUnsupported,
                    "thicken: triangle with three collapsed corners");
      }
    }

    // interior gluings with orientation flips
    for (const auto& [key, inc] : slab.frames.edge_tris) {
      if (inc.size() != 2) continue;
      auto [t1, d1] = inc[0];
      auto [t2, d2] = inc[1];
      int o1 = d1 ^ slab.frames.flag[(size_t)t1];
      int o2 = d2 ^ slab.frames.flag[(size_t)t2];
      int flip = (o1 == o2) ? 1 : 0;
      for (int w : {key.first, key.second}) {
        if (slab.surf.vertex_free[(size_t)w]) continue;
        for (int level = 0; level < 2; ++level) {
          uf.unite(fiber(t1, w, level), fiber(t2, w, level ^ flip));
        }
      }
    }

    // boundary lines per side
    slab.side_lines.assign(slab.surf.sides.size(), {});
    for (size_t s = 0; s < slab.surf.sides.size(); ++s) {
      if (slab.surf.sides[s].type == SideInfo::Type::kFree) continue;
      SlabBoundary lines;
      lines.valid = true;
      for (int k = 0; k < kSegments; ++k) {
        auto [u, v] = slab.surf.side_edges[s][(size_t)k];
        // owning triangle of boundary pair (u,v)
        auto it = slab.frames.edge_tris.find({std::min(u, v), std::max(u, v)});
        if (it == slab.frames.edge_tris.end() || it->second.size() != 1) {
          throw Error(ErrorCode::kChartUnsupported,
                      "thicken: boundary side edge not owned by one triangle");
        }
        auto [t, dir] = it->second[0];
        (void)dir;
        // levels as seen by the owning triangle's flag
        int flip = slab.frames.flag[(size_t)t];
        for (int level = 0; level < 2; ++level) {
          lines.line[(size_t)level][(size_t)k] = fiber(t, u, level ^ flip);
          lines.line[(size_t)level][(size_t)k + 1] = fiber(t, v, level ^ flip);
        }
      }
      slab.side_lines[s] = lines;
    }

    // merge item sides with edge flanges
    for (size_t s = 0; s < slab.surf.sides.size(); ++s) {
      const auto& si = slab.surf.sides[s];
      if (si.type != SideInfo::Type::kItem) continue;
      const auto& grid = evid.at(si.edge);
      int bit = sigma.at({si.edge, si.slot});
      int letter0 = bit == 0 ? HL(si.slot) : HR(si.slot);
      int letter1 = bit == 0 ? HR(si.slot) : HL(si.slot);
      const auto& lines = slab.side_lines[s];
      for (int k = 0; k <= kSegments; ++k) {
        int sec = si.forward ? k : kSegments - k;
        uf.unite(lines.line[0][(size_t)k], grid[(size_t)sec][(size_t)letter0]);
        uf.unite(lines.line[1][(size_t)k], grid[(size_t)sec][(size_t)letter1]);
      }
    }

    slabs[r->id] = std::move(slab);
  }

  // vertex blocks
  for (const auto* v : verts) {
    const CornerIncidence& inc = charts.corners.at(v->id);
    CellRef vcell{CellRef::Kind::kVertex, v->id};
    int apex = uf.fresh();

    // portal section per port
    std::array<int, 4> portal_sec{};
    std::array<const std::array<std::array<int, 7>, kSegments + 1>*, 4> portal_grid{};
    for (int port = 0; port < 4; ++port) {
      const std::string& eid = inc.edge_at_port[(size_t)port];
      const TripleEdge* e = p.find_edge(eid);
      int sec = (e->endpoints[0].vertex == v->id && e->endpoints[0].port == port)
                    ? 0
                    : kSegments;
      portal_sec[(size_t)port] = sec;
      portal_grid[(size_t)port] = &evid.at(eid);
    }
    auto portal_vid = [&](int port, int h) {
      return (*portal_grid[(size_t)port])[(size_t)portal_sec[(size_t)port]][(size_t)h];
    };

    // cone over portal triangles
    for (int port = 0; port < 4; ++port) {
      for (int i = 0; i < 3; ++i) {
        cells.tets.push_back({{apex, portal_vid(port, kHC), portal_vid(port, HL(i)),
                               portal_vid(port, HR(i))},
                              vcell});
        cells.tets.push_back({{apex, portal_vid(port, kHC), portal_vid(port, HR(i)),
                               portal_vid(port, HL((i + 1) % 3))},
                              vcell});
      }
    }

    // strips: the corner sides of the claiming regions
    // wing {pa,pb} -> (region, side index)
    std::map<std::pair<int, int>, std::pair<std::string, int>> wing_side;
    for (const auto* r : regions) {
      const Slab& slab = slabs.at(r->id);
      for (size_t s = 0; s < slab.surf.sides.size(); ++s) {
        const auto& si = slab.surf.sides[s];
        if (si.type != SideInfo::Type::kCorner || si.vertex != v->id) continue;
        wing_side[{std::min(si.port_in, si.port_out),
                   std::max(si.port_in, si.port_out)}] = {r->id, (int)s};
      }
    }
    for (const auto& [wing, rs] : wing_side) {
      const Slab& slab = slabs.at(rs.first);
      const auto& lines = slab.side_lines[(size_t)rs.second];
      for (int k = 0; k < kSegments; ++k) {
        cells.pyramids.push_back({{lines.line[0][(size_t)k], lines.line[0][(size_t)k + 1],
                                   lines.line[1][(size_t)k + 1], lines.line[1][(size_t)k],
                                   apex},
                                  vcell});
      }
    }

    // free patches: circuits of rim side-edges and strip lines
    // node = (port, slot, letter). arcs: rim (R_i -> L_{i+1}); strip lines.
    struct Arc {
      std::vector<int> ids;  // vertex ids along the arc
      int from_node, to_node;
    };
    auto node_of = [](int port, int slot, int letter) {
      return (port * 3 + slot) * 2 + letter;
    };
    std::vector<int> node_vid(24, -1);
    for (int port = 0; port < 4; ++port) {
      for (int s = 0; s < 3; ++s) {
        node_vid[(size_t)node_of(port, s, 0)] = portal_vid(port, HL(s));
        node_vid[(size_t)node_of(port, s, 1)] = portal_vid(port, HR(s));
      }
    }
    std::vector<Arc> arcs;
    for (int port = 0; port < 4; ++port) {
      for (int s = 0; s < 3; ++s) {
        Arc a;
        a.from_node = node_of(port, s, 1);
        a.to_node = node_of(port, (s + 1) % 3, 0);
        a.ids = {node_vid[(size_t)a.from_node], node_vid[(size_t)a.to_node]};
        arcs.push_back(std::move(a));
      }
    }
    for (const auto& [wing, rs] : wing_side) {
      const Slab& slab = slabs.at(rs.first);
      const auto& si = slab.surf.sides[(size_t)rs.second];
      const auto& lines = slab.side_lines[(size_t)rs.second];
      // ends: start at port_in, end at port_out
      int sa = inc.slot_in_wing(si.port_in, si.port_out);
      int sb = inc.slot_in_wing(si.port_out, si.port_in);
      int bit_a = sigma.at({inc.edge_at_port[(size_t)si.port_in], sa});
      int bit_b = sigma.at({inc.edge_at_port[(size_t)si.port_out], sb});
      for (int level = 0; level < 2; ++level) {
        Arc a;
        int la = (level == 0) ? bit_a : 1 - bit_a;
        int lb = (level == 0) ? bit_b : 1 - bit_b;
        a.from_node = node_of(si.port_in, sa, la);
        a.to_node = node_of(si.port_out, sb, lb);
        for (int k = 0; k <= kSegments; ++k) {
          a.ids.push_back(lines.line[(size_t)level][(size_t)k]);
        }
        arcs.push_back(std::move(a));
      }
      (void)wing;
    }
    // chain arcs into circuits (each node has exactly two arc ends)
    std::vector<std::vector<std::pair<int, bool>>> at_node(24);
    for (size_t a = 0; a < arcs.size(); ++a) {
      at_node[(size_t)arcs[a].from_node].push_back({(int)a, true});
      at_node[(size_t)arcs[a].to_node].push_back({(int)a, false});
    }
    std::vector<bool> used(arcs.size(), false);
    int patches = 0;
    for (size_t a0 = 0; a0 < arcs.size(); ++a0) {
      if (used[a0]) continue;
      // walk the circuit collecting vertex ids
      std::vector<int> circuit;
      int arc = (int)a0;
      bool fwd = true;
      while (!used[(size_t)arc]) {
        used[(size_t)arc] = true;
        const auto& ids = arcs[(size_t)arc].ids;
        if (fwd) {
          for (size_t i = 0; i + 1 < ids.size(); ++i) circuit.push_back(ids[i]);
        } else {
          for (size_t i = ids.size() - 1; i > 0; --i) circuit.push_back(ids[i]);
        }
        int exit_node = fwd ? arcs[(size_t)arc].to_node : arcs[(size_t)arc].from_node;
        // the other arc at this node
        int next_arc = -1;
        bool next_fwd = true;
        for (auto [a2, is_from] : at_node[(size_t)exit_node]) {
          if (a2 == arc) continue;
          next_arc = a2;
          next_fwd = is_from;
        }
        if (next_arc < 0) break;
        arc = next_arc;
        fwd = next_fwd;
      }
      ++patches;
      int centroid = uf.fresh();
      for (size_t i = 0; i < circuit.size(); ++i) {
        cells.tets.push_back(
            {{apex, centroid, circuit[i], circuit[(i + 1) % circuit.size()]}, vcell});
      }
    }
    if (patches != 4) {
      throw Error(ErrorCode::kChartUnsupported,
                  "thicken: double point pattern did not close into a sphere");
    }
  }

  // ---------------------------------------------------------------------
  // resolve ids, split cells, derive gluings
  // ---------------------------------------------------------------------
  std::map<int, int> compact;
  auto rid = [&](int raw) {
    int root = uf.find(raw);
    auto it = compact.find(root);
    if (it != compact.end()) return it->second;
    int id = static_cast<int>(compact.size());
    compact[root] = id;
    return id;
  };

  Triangulation3 out;
  auto emit_tet = [&out](std::array<int, 4> ids, const CellRef& cell) {
    std::sort(ids.begin(), ids.end());
    for (int i = 0; i < 3; ++i) {
      if (ids[(size_t)i] == ids[(size_t)i + 1]) {
        throw Error(ErrorCode::kChartUnsupported,
                    "thicken: degenerate tetrahedron (merged corners)");
      }
    }
    out.tets.push_back(ids);
    out.tet_cells.push_back(cell);
  };
  auto quad_diag_first = [](const std::array<int, 4>& q) {
    // q cyclic; diagonal through the minimal vertex: (0,2) or (1,3)
    int mi = 0;
    for (int i = 1; i < 4; ++i) {
      if (q[(size_t)i] < q[(size_t)mi]) mi = i;
    }
    return mi % 2 == 0;  // true: diagonal q0-q2
  };
  auto split_pyramid = [&](const std::array<int, 4>& base, int apex,
                           const CellRef& cell) {
    if (quad_diag_first(base)) {
      emit_tet({apex, base[0], base[1], base[2]}, cell);
      emit_tet({apex, base[0], base[2], base[3]}, cell);
    } else {
      emit_tet({apex, base[0], base[1], base[3]}, cell);
      emit_tet({apex, base[1], base[2], base[3]}, cell);
    }
  };

  for (const auto& t : cells.tets) {
    emit_tet({rid(t.v[0]), rid(t.v[1]), rid(t.v[2]), rid(t.v[3])}, t.cell);
  }
  for (const auto& py : cells.pyramids) {
    split_pyramid({rid(py.v[0]), rid(py.v[1]), rid(py.v[2]), rid(py.v[3])},
                  rid(py.v[4]), py.cell);
  }
  for (const auto& pr : cells.prisms) {
    std::array<int, 6> w{rid(pr.v[0]), rid(pr.v[1]), rid(pr.v[2]),
                         rid(pr.v[3]), rid(pr.v[4]), rid(pr.v[5])};
    // global minimum corner becomes the interior apex
    int mi = 0;
    for (int i = 1; i < 6; ++i) {
      if (w[(size_t)i] < w[(size_t)mi]) mi = i;
    }
    int col = mi % 3;           // column of the minimum
    bool bottom = mi < 3;       // level of the minimum
    int m = w[(size_t)mi];
    // opposite triangle (other level) and opposite quad (other two columns)
    std::array<int, 3> other_level = bottom ? std::array<int, 3>{w[3], w[4], w[5]}
                                            : std::array<int, 3>{w[0], w[1], w[2]};
    emit_tet({m, other_level[0], other_level[1], other_level[2]}, pr.cell);
    int cb = (col + 1) % 3, cc = (col + 2) % 3;
    std::array<int, 4> quad{w[(size_t)cb], w[(size_t)cc], w[(size_t)(cc + 3)],
                            w[(size_t)(cb + 3)]};
    split_pyramid(quad, m, pr.cell);
  }

  out.vertex_count = static_cast<int>(compact.size());

  // gluings from shared faces
  std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> faces;
  for (size_t t = 0; t < out.tets.size(); ++t) {
    const auto& tet = out.tets[t];
    for (int f = 0; f < 4; ++f) {
      std::array<int, 3> tri{};
      int k = 0;
      for (int i = 0; i < 4; ++i) {
        if (i != f) tri[(size_t)k++] = tet[(size_t)i];
      }
      faces[tri].push_back({(int)t, f});
    }
  }
  for (const auto& [tri, inc] : faces) {
    (void)tri;
    if (inc.size() == 2) {
      // identity correspondence on sorted shared vertices
      out.gluings.push_back(
          {inc[0].first, inc[0].second, inc[1].first, inc[1].second, {0, 1, 2}});
    } else if (inc.size() > 2) {
      throw Error(ErrorCode::kChartUnsupported,
                  "thicken: face shared by more than two tetrahedra");
    }
  }
  return out;
}

}  // namespace polyfold
