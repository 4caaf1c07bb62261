#pragma once

// Internal Delta-complex scaffolding shared by the 2-complex triangulation
// and the thickening's region slabs.  Triangles reference edge objects, so
// repeated vertices, loops and doubled edges survive until barycentric
// subdivision makes everything simplicial.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "polyfold/complexes.hpp"
#include "polyfold/model.hpp"

namespace polyfold::detail {

struct Delta2 {
  struct Tri {
    std::array<int, 3> edge;
    std::array<bool, 3> fwd;  // boundary walk e0^s0 e1^s1 e2^s2
  };
  // Marks an edge as the num-th of den subdivisions of polygon side `side`,
  // oriented along it.
  struct SideTag {
    int side = -1;
    int num = 0;
    int den = 1;
  };

  int n_vertices = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<Tri> tris;
  std::vector<CellRef> vcell, ecell, tcell;
  std::vector<SideTag> etag;

  int add_vertex(const CellRef& c) {
    vcell.push_back(c);
    return n_vertices++;
  }
  int add_edge(int a, int b, const CellRef& c, SideTag tag) {
    edges.push_back({a, b});
    ecell.push_back(c);
    etag.push_back(tag);
    return static_cast<int>(edges.size()) - 1;
  }
  int add_edge(int a, int b, const CellRef& c) { return add_edge(a, b, c, SideTag{}); }
  int add_tri(const Tri& t, const CellRef& c) {
    tris.push_back(t);
    tcell.push_back(c);
    return static_cast<int>(tris.size()) - 1;
  }

  int edge_from(int e, bool f) const {
    return f ? edges[(size_t)e][0] : edges[(size_t)e][1];
  }
  int edge_to(int e, bool f) const {
    return f ? edges[(size_t)e][1] : edges[(size_t)e][0];
  }

  std::array<int, 3> corners(const Tri& t) const {
    return {edge_from(t.edge[0], t.fwd[0]), edge_from(t.edge[1], t.fwd[1]),
            edge_from(t.edge[2], t.fwd[2])};
  }

  Delta2 barycentric() const {
    Delta2 out;
    out.n_vertices = n_vertices;
    out.vcell = vcell;
    std::vector<int> emid(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) emid[e] = out.add_vertex(ecell[e]);
    std::vector<int> tmid(tris.size());
    for (size_t t = 0; t < tris.size(); ++t) tmid[t] = out.add_vertex(tcell[t]);
    std::vector<std::array<int, 2>> half(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
      SideTag lo, hi;
      if (etag[e].side >= 0) {
        lo = {etag[e].side, etag[e].num * 2, etag[e].den * 2};
        hi = {etag[e].side, etag[e].num * 2 + 1, etag[e].den * 2};
      }
      half[e][0] = out.add_edge(edges[e][0], emid[e], ecell[e], lo);
      half[e][1] = out.add_edge(emid[e], edges[e][1], ecell[e], hi);
    }
    for (size_t t = 0; t < tris.size(); ++t) {
      const Tri& tr = tris[t];
      std::array<int, 3> cor = corners(tr);
      std::array<int, 3> corner_spoke{};
      std::array<int, 3> mid_spoke{};
      for (int i = 0; i < 3; ++i) {
        corner_spoke[(size_t)i] = out.add_edge(cor[(size_t)i], tmid[t], tcell[t]);
        mid_spoke[(size_t)i] =
            out.add_edge(emid[(size_t)tr.edge[(size_t)i]], tmid[t], tcell[t]);
      }
      for (int i = 0; i < 3; ++i) {
        int e = tr.edge[(size_t)i];
        bool f = tr.fwd[(size_t)i];
        int h1 = f ? half[(size_t)e][0] : half[(size_t)e][1];
        out.add_tri({{h1, mid_spoke[(size_t)i], corner_spoke[(size_t)i]},
                     {f, true, false}},
                    tcell[t]);
        int h2 = f ? half[(size_t)e][1] : half[(size_t)e][0];
        out.add_tri({{h2, corner_spoke[(size_t)(i + 1) % 3], mid_spoke[(size_t)i]},
                     {f, true, false}},
                    tcell[t]);
      }
    }
    return out;
  }

  SimplicialComplex2 to_simplicial() const {
    SimplicialComplex2 out;
    out.vertex_count = n_vertices;
    out.vertex_cells = vcell;
    std::map<std::array<int, 2>, int> edge_seen;
    for (size_t e = 0; e < edges.size(); ++e) {
      std::array<int, 2> key{std::min(edges[e][0], edges[e][1]),
                             std::max(edges[e][0], edges[e][1])};
      if (key[0] == key[1]) {
        throw Error(ErrorCode::kInvalidInput,
                    "internal: loop edge survived subdivision");
      }
      if (edge_seen.count(key)) {
        throw Error(ErrorCode::kInvalidInput,
                    "internal: doubled edge survived subdivision");
      }
      edge_seen[key] = static_cast<int>(out.edges.size());
      out.edges.push_back(key);
      out.edge_cells.push_back(ecell[e]);
    }
    std::set<std::array<int, 3>> tri_seen;
    for (size_t t = 0; t < tris.size(); ++t) {
      std::array<int, 3> cor = corners(tris[t]);
      std::sort(cor.begin(), cor.end());
      if (cor[0] == cor[1] || cor[1] == cor[2]) {
        throw Error(ErrorCode::kInvalidInput,
                    "internal: degenerate triangle survived subdivision");
      }
      if (!tri_seen.insert(cor).second) {
        throw Error(ErrorCode::kInvalidInput,
                    "internal: duplicate triangle survived subdivision");
      }
      out.triangles.push_back(cor);
      out.triangle_cells.push_back(tcell[t]);
    }
    return out;
  }
};

}  // namespace polyfold::detail
