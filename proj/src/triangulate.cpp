#include <algorithm>
#include <map>
#include <set>

#include "polyfold/complexes.hpp"
#include "delta2.hpp"

namespace polyfold {

std::string CellRef::str() const {
  switch (kind) {
    case Kind::kRegion: return "region:" + id;
    case Kind::kEdge: return "edge:" + id;
    case Kind::kVertex: return "vertex:" + id;
    case Kind::kFreeCircle: return "free:" + id;
  }
  return id;
}

using detail::Delta2;

SimplicialComplex2 triangulate(const SimplePolyhedron& p) {
  ValidationReport rep = validate(p);
  if (!rep.ok) {
    throw Error(ErrorCode::kInvalidInput, "triangulate: polyhedron fails validation");
  }

  Delta2 d;
  std::map<std::string, int> vertex_of;  // double point -> Delta2 vertex
  for (const auto& v : p.vertices) {
    vertex_of[v.id] = d.add_vertex({CellRef::Kind::kVertex, v.id});
  }
  // one Delta2 edge per triple edge (circles become loops at an aux vertex)
  std::map<std::string, int> edge_of;
  std::map<std::string, int> circle_base;
  for (const auto& e : p.edges) {
    CellRef cell{CellRef::Kind::kEdge, e.id};
    if (e.kind == EdgeKind::kCircle) {
      int z = d.add_vertex(cell);
      circle_base[e.id] = z;
      edge_of[e.id] = d.add_edge(z, z, cell);
    } else {
      edge_of[e.id] = d.add_edge(vertex_of.at(e.endpoints[0].vertex),
                                 vertex_of.at(e.endpoints[1].vertex), cell);
    }
  }
  std::map<std::string, int> free_of;
  for (const auto& f : p.free_circles) {
    CellRef cell{CellRef::Kind::kFreeCircle, f};
    int z = d.add_vertex(cell);
    free_of[f] = d.add_edge(z, z, cell);
  }

  // regions: fundamental polygon fanned from a hub vertex
  for (const auto& r : p.regions) {
    CellRef cell{CellRef::Kind::kRegion, r.id};
    // polygon walk: sequence of (edge, forward)
    std::vector<std::pair<int, bool>> walk;
    int anchor = -1;  // corner where cut arcs and handles attach
    bool first_component = true;
    for (const auto& bc : r.boundary) {
      std::vector<std::pair<int, bool>> part;
      int start = -1;
      if (const auto* fc = std::get_if<FreeCircleRef>(&bc)) {
        part.push_back({free_of.at(fc->id), true});
        start = d.edge_from(part[0].first, true);
      } else {
        for (const auto& st : std::get<AttachedWord>(bc).steps) {
          if (const auto* es = std::get_if<EdgeStep>(&st)) {
            part.push_back({edge_of.at(es->edge), es->forward});
          }
        }
        start = d.edge_from(part[0].first, part[0].second);
      }
      if (first_component) {
        walk = part;
        anchor = start;
        first_component = false;
      } else {
        // splice: cut arc from anchor to this component's start
        int cut = d.add_edge(anchor, start, cell);
        walk.push_back({cut, true});
        walk.insert(walk.end(), part.begin(), part.end());
        walk.push_back({cut, false});
      }
    }
    if (first_component) {
      // closed region: polygon of handle/crosscap loops at a fresh vertex
      anchor = d.add_vertex(cell);
    }
    if (r.orientable) {
      for (int g = 0; g < r.genus; ++g) {
        int a = d.add_edge(anchor, anchor, cell);
        int b = d.add_edge(anchor, anchor, cell);
        walk.push_back({a, true});
        walk.push_back({b, true});
        walk.push_back({a, false});
        walk.push_back({b, false});
      }
    } else {
      for (int g = 0; g < std::max(r.genus, 1); ++g) {
        int c = d.add_edge(anchor, anchor, cell);
        walk.push_back({c, true});
        walk.push_back({c, true});
      }
    }
    if (walk.empty()) {
      // closed sphere region: double of a triangle
      int u = d.add_vertex(cell);
      int w = d.add_vertex(cell);
      int e1 = d.add_edge(anchor, u, cell);
      int e2 = d.add_edge(u, w, cell);
      int e3 = d.add_edge(anchor, w, cell);
      d.add_tri({{e1, e2, e3}, {true, true, false}}, cell);
      d.add_tri({{e1, e2, e3}, {true, true, false}}, cell);
      continue;
    }
    // fan from hub: one spoke per polygon corner
    int hub = d.add_vertex(cell);
    const size_t k = walk.size();
    std::vector<int> spoke(k);
    for (size_t i = 0; i < k; ++i) {
      spoke[i] = d.add_edge(d.edge_from(walk[i].first, walk[i].second), hub, cell);
    }
    for (size_t i = 0; i < k; ++i) {
      d.add_tri({{walk[i].first, spoke[(i + 1) % k], spoke[i]},
                 {walk[i].second, true, false}},
                cell);
    }
  }

  Delta2 s = d.barycentric().barycentric();
  return s.to_simplicial();
}

ChainComplex chain_complex(const SimplicialComplex2& k) {
  ChainComplex c;
  c.dims = {k.vertex_count, static_cast<int>(k.edges.size()),
            static_cast<int>(k.triangles.size())};
  c.boundary.resize(3);
  c.boundary[1].rows = k.vertex_count;
  c.boundary[1].cols.resize(k.edges.size());
  std::map<std::array<int, 2>, int> edge_index;
  for (size_t e = 0; e < k.edges.size(); ++e) {
    edge_index[k.edges[e]] = static_cast<int>(e);
    c.boundary[1].cols[e][k.edges[e][1]] = 1;
    c.boundary[1].cols[e][k.edges[e][0]] = -1;
  }
  c.boundary[2].rows = static_cast<int>(k.edges.size());
  c.boundary[2].cols.resize(k.triangles.size());
  for (size_t t = 0; t < k.triangles.size(); ++t) {
    const auto& tr = k.triangles[t];
    // d[abc] = [bc] - [ac] + [ab]
    c.boundary[2].cols[t][edge_index.at({tr[1], tr[2]})] += 1;
    c.boundary[2].cols[t][edge_index.at({tr[0], tr[2]})] += -1;
    c.boundary[2].cols[t][edge_index.at({tr[0], tr[1]})] += 1;
  }
  return c;
}

}  // namespace polyfold
