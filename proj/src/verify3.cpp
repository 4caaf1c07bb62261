#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "polyfold/thicken.hpp"

namespace polyfold {

namespace {

std::array<int, 3> face_of(const std::array<int, 4>& tet, int f) {
  std::array<int, 3> tri{};
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != f) tri[(size_t)k++] = tet[(size_t)i];
  }
  return tri;
}

using FaceMap = std::map<std::array<int, 3>, std::vector<std::pair<int, int>>>;

FaceMap face_map(const Triangulation3& t) {
  FaceMap faces;
  for (size_t i = 0; i < t.tets.size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      faces[face_of(t.tets[i], f)].push_back({(int)i, f});
    }
  }
  return faces;
}

}  // namespace

int euler3(const Triangulation3& t) {
  std::set<int> verts;
  std::set<std::array<int, 2>> edges;
  std::set<std::array<int, 3>> faces;
  for (const auto& tet : t.tets) {
    for (int v : tet) verts.insert(v);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        edges.insert({tet[(size_t)i], tet[(size_t)j]});
      }
      faces.insert(face_of(tet, i));
    }
  }
  return (int)verts.size() - (int)edges.size() + (int)faces.size() -
         (int)t.tets.size();
}

ManifoldReport verify_manifold(const Triangulation3& t) {
  ManifoldReport rep;
  if (t.tets.empty()) {
    rep.findings.push_back("empty triangulation");
    return rep;
  }
  for (size_t i = 0; i < t.tets.size(); ++i) {
    const auto& tet = t.tets[i];
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (tet[(size_t)a] == tet[(size_t)b]) {
          rep.findings.push_back("tet " + std::to_string(i) + " has repeated vertices");
        }
      }
    }
  }
  FaceMap faces = face_map(t);
  for (const auto& [tri, inc] : faces) {
    (void)tri;
    if (inc.size() > 2) {
      rep.findings.push_back("face shared by " + std::to_string(inc.size()) +
                             " tetrahedra");
    }
    if (inc.size() == 2 && inc[0].first == inc[1].first) {
      rep.findings.push_back("tet " + std::to_string(inc[0].first) +
                             " glued to itself along a face");
    }
  }
  if (!rep.findings.empty()) return rep;

  // connectivity over the gluing graph
  {
    std::vector<int> comp(t.tets.size(), -1);
    std::queue<int> q;
    q.push(0);
    comp[0] = 0;
    std::map<std::pair<int, int>, int> partner;
    for (const auto& [tri, inc] : faces) {
      (void)tri;
      if (inc.size() == 2) {
        partner[inc[0]] = inc[1].first;
        partner[inc[1]] = inc[0].first;
      }
    }
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int f = 0; f < 4; ++f) {
        auto it = partner.find({i, f});
        if (it != partner.end() && comp[(size_t)it->second] == -1) {
          comp[(size_t)it->second] = 0;
          q.push(it->second);
        }
      }
    }
    rep.connected = std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
  }

  // edge links: the tets around an edge form one cycle or one path
  std::map<std::array<int, 2>, std::vector<int>> edge_tets;
  for (size_t i = 0; i < t.tets.size(); ++i) {
    const auto& tet = t.tets[i];
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        edge_tets[{tet[(size_t)a], tet[(size_t)b]}].push_back((int)i);
      }
    }
  }
  bool links_ok = true;
  for (const auto& [e, around] : edge_tets) {
    // walk: faces containing e pair up consecutive tets
    std::map<int, std::vector<std::array<int, 3>>> tet_faces;
    for (int i : around) {
      for (int f = 0; f < 4; ++f) {
        auto tri = face_of(t.tets[(size_t)i], f);
        if (std::find(tri.begin(), tri.end(), e[0]) != tri.end() &&
            std::find(tri.begin(), tri.end(), e[1]) != tri.end()) {
          tet_faces[i].push_back(tri);
        }
      }
    }
    // count boundary faces at this edge
    int boundary_faces = 0;
    std::set<std::array<int, 3>> seen_faces;
    for (int i : around) {
      for (const auto& tri : tet_faces[i]) {
        if (!seen_faces.insert(tri).second) continue;
        if (faces.at(tri).size() == 1) ++boundary_faces;
      }
    }
    // connectivity of the tets around the edge
    std::map<std::array<int, 3>, std::vector<int>> by_face;
    for (int i : around) {
      for (const auto& tri : tet_faces[i]) by_face[tri].push_back(i);
    }
    std::map<int, int> comp;
    std::function<void(int)> flood = [&](int i) {
      comp[i] = 0;
      for (const auto& tri : tet_faces[i]) {
        for (int j : by_face[tri]) {
          if (!comp.count(j)) flood(j);
        }
      }
    };
    flood(around[0]);
    bool connected_around = comp.size() == std::set<int>(around.begin(), around.end()).size();
    bool ok = connected_around && (boundary_faces == 0 || boundary_faces == 2);
    if (!ok) {
      links_ok = false;
      rep.findings.push_back("edge (" + std::to_string(e[0]) + "," +
                             std::to_string(e[1]) + ") has a bad link");
    }
  }

  // vertex links: closed surface must be a sphere, bounded one a disc
  std::set<int> verts;
  for (const auto& tet : t.tets) {
    for (int v : tet) verts.insert(v);
  }
  for (int v : verts) {
    // link complex: for each tet containing v, its opposite face is a link
    // triangle; link edges are tet faces through v.
    int link_tris = 0;
    std::map<std::array<int, 2>, int> link_edge_count;
    std::set<int> link_verts;
    for (size_t i = 0; i < t.tets.size(); ++i) {
      const auto& tet = t.tets[i];
      auto pos = std::find(tet.begin(), tet.end(), v);
      if (pos == tet.end()) continue;
      ++link_tris;
      std::array<int, 3> opp = face_of(tet, (int)(pos - tet.begin()));
      for (int k = 0; k < 3; ++k) {
        link_verts.insert(opp[(size_t)k]);
        std::array<int, 2> le{opp[(size_t)k], opp[(size_t)((k + 1) % 3)]};
        if (le[0] > le[1]) std::swap(le[0], le[1]);
        ++link_edge_count[le];
      }
    }
    int boundary_edges = 0;
    bool bad = false;
    for (const auto& [le, c] : link_edge_count) {
      (void)le;
      if (c == 1) {
        ++boundary_edges;
      } else if (c != 2) {
        bad = true;
      }
    }
    int chi = (int)link_verts.size() - (int)link_edge_count.size() + link_tris;
    bool sphere = !bad && boundary_edges == 0 && chi == 2;
    bool disc = !bad && boundary_edges > 0 && chi == 1;
    if (!(sphere || disc)) {
      links_ok = false;
      rep.findings.push_back("vertex " + std::to_string(v) + " has a bad link (chi " +
                             std::to_string(chi) + ")");
    }
  }
  rep.is_manifold = links_ok;

  // orientability: 2-color tets so every interior face is traversed with
  // opposite induced orientations.  With sorted vertex tuples the induced
  // orientation sign of face f is (-1)^f.
  {
    rep.tet_orientation.assign(t.tets.size(), 0);
    bool orientable = true;
    for (size_t seed = 0; seed < t.tets.size() && orientable; ++seed) {
      if (rep.tet_orientation[seed] != 0) continue;
      rep.tet_orientation[seed] = 1;
      std::queue<int> q;
      q.push((int)seed);
      while (!q.empty() && orientable) {
        int i = q.front();
        q.pop();
        for (int f = 0; f < 4; ++f) {
          const auto& inc = faces.at(face_of(t.tets[(size_t)i], f));
          if (inc.size() != 2) continue;
          auto other = inc[0].first == i && inc[0].second == f ? inc[1] : inc[0];
          int sign_here = (f % 2 == 0) ? 1 : -1;
          int sign_there = (other.second % 2 == 0) ? 1 : -1;
          int want = -rep.tet_orientation[(size_t)i] * sign_here * sign_there;
          int& cur = rep.tet_orientation[(size_t)other.first];
          if (cur == 0) {
            cur = want;
            q.push(other.first);
          } else if (cur != want) {
            orientable = false;
          }
        }
      }
    }
    rep.orientable = orientable;
    if (!orientable) rep.tet_orientation.clear();
  }

  // boundary components
  {
    std::vector<std::array<int, 3>> btris;
    for (const auto& [tri, inc] : faces) {
      if (inc.size() == 1) btris.push_back(tri);
    }
    std::map<std::array<int, 2>, std::vector<int>> bedges;
    for (size_t i = 0; i < btris.size(); ++i) {
      for (int k = 0; k < 3; ++k) {
        std::array<int, 2> e{btris[i][(size_t)k], btris[i][(size_t)((k + 1) % 3)]};
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        bedges[e].push_back((int)i);
      }
    }
    for (const auto& [e, inc] : bedges) {
      if (inc.size() != 2) {
        rep.findings.push_back("boundary edge (" + std::to_string(e[0]) + "," +
                               std::to_string(e[1]) + ") lies in " +
                               std::to_string(inc.size()) + " boundary triangles");
        rep.is_manifold = false;
      }
    }
    std::vector<int> comp(btris.size(), -1);
    int ncomp = 0;
    for (size_t i = 0; i < btris.size(); ++i) {
      if (comp[i] != -1) continue;
      int c = ncomp++;
      std::queue<int> q;
      q.push((int)i);
      comp[i] = c;
      while (!q.empty()) {
        int cur = q.front();
        q.pop();
        for (int k = 0; k < 3; ++k) {
          std::array<int, 2> e{btris[(size_t)cur][(size_t)k],
                               btris[(size_t)cur][(size_t)((k + 1) % 3)]};
          if (e[0] > e[1]) std::swap(e[0], e[1]);
          for (int j : bedges[e]) {
            if (comp[(size_t)j] == -1) {
              comp[(size_t)j] = c;
              q.push(j);
            }
          }
        }
      }
    }
    for (int c = 0; c < ncomp; ++c) {
      BoundaryComponentReport bc;
      std::set<int> vs;
      std::set<std::array<int, 2>> es;
      std::vector<int> tris;
      for (size_t i = 0; i < btris.size(); ++i) {
        if (comp[i] != c) continue;
        tris.push_back((int)i);
        ++bc.triangles;
        for (int k = 0; k < 3; ++k) {
          vs.insert(btris[i][(size_t)k]);
          std::array<int, 2> e{btris[i][(size_t)k], btris[i][(size_t)((k + 1) % 3)]};
          if (e[0] > e[1]) std::swap(e[0], e[1]);
          es.insert(e);
        }
      }
      bc.euler = (int)vs.size() - (int)es.size() + bc.triangles;
      // orientability of the component by 2-coloring
      std::map<int, int> color;
      bool orient = true;
      for (int seed : tris) {
        if (color.count(seed)) continue;
        color[seed] = 1;
        std::queue<int> q;
        q.push(seed);
        while (!q.empty() && orient) {
          int cur = q.front();
          q.pop();
          auto side = [&](int bi, const std::array<int, 2>& e) {
            // +1 if (e0,e1) appears in ascending cyclic order of the sorted tri
            const auto& tri = btris[(size_t)bi];
            if (e[0] == tri[0] && e[1] == tri[2]) return -1;
            return 1;
          };
          for (int k = 0; k < 3; ++k) {
            std::array<int, 2> e{btris[(size_t)cur][(size_t)k],
                                 btris[(size_t)cur][(size_t)((k + 1) % 3)]};
            if (e[0] > e[1]) std::swap(e[0], e[1]);
            for (int j : bedges[e]) {
              if (j == cur) continue;
              int want = -color[cur] * side(cur, e) * side(j, e);
              auto it = color.find(j);
              if (it == color.end()) {
                color[j] = want;
                q.push(j);
              } else if (it->second != want) {
                orient = false;
              }
            }
          }
        }
        break;  // component is connected
      }
      bc.orientable = orient;
      rep.boundary.push_back(bc);
    }
  }
  return rep;
}

HomologyResult homology3(const Triangulation3& t) {
  // collect cells
  std::set<int> vset;
  std::set<std::array<int, 2>> eset;
  std::set<std::array<int, 3>> fset;
  for (const auto& tet : t.tets) {
    for (int v : tet) vset.insert(v);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) eset.insert({tet[(size_t)i], tet[(size_t)j]});
      fset.insert(face_of(tet, i));
    }
  }
  std::map<int, int> vid;
  for (int v : vset) {
    int n = (int)vid.size();
    vid[v] = n;
  }
  std::map<std::array<int, 2>, int> eid;
  for (const auto& e : eset) {
    int n = (int)eid.size();
    eid[e] = n;
  }
  std::map<std::array<int, 3>, int> fid;
  for (const auto& f : fset) {
    int n = (int)fid.size();
    fid[f] = n;
  }

  ChainComplex c;
  c.dims = {(int)vset.size(), (int)eset.size(), (int)fset.size(), (int)t.tets.size()};
  c.boundary.resize(4);
  c.boundary[1].rows = c.dims[0];
  c.boundary[1].cols.resize((size_t)c.dims[1]);
  for (const auto& [e, idx] : eid) {
    c.boundary[1].cols[(size_t)idx][vid.at(e[1])] += 1;
    c.boundary[1].cols[(size_t)idx][vid.at(e[0])] += -1;
  }
  c.boundary[2].rows = c.dims[1];
  c.boundary[2].cols.resize((size_t)c.dims[2]);
  for (const auto& [f, idx] : fid) {
    c.boundary[2].cols[(size_t)idx][eid.at({f[1], f[2]})] += 1;
    c.boundary[2].cols[(size_t)idx][eid.at({f[0], f[2]})] += -1;
    c.boundary[2].cols[(size_t)idx][eid.at({f[0], f[1]})] += 1;
  }
  c.boundary[3].rows = c.dims[2];
  c.boundary[3].cols.resize((size_t)c.dims[3]);
  for (size_t i = 0; i < t.tets.size(); ++i) {
    const auto& tet = t.tets[i];
    for (int f = 0; f < 4; ++f) {
      int sign = (f % 2 == 0) ? 1 : -1;
      c.boundary[3].cols[i][fid.at(face_of(tet, f))] += sign;
    }
  }
  return homology(c);
}

WitnessReport projection_witness(const Triangulation3& t, const SimplePolyhedron& p) {
  WitnessReport rep;
  // incidence in the polyhedron
  std::set<std::pair<std::string, std::string>> incident;  // unordered keys
  auto mark = [&incident](const CellRef& a, const CellRef& b) {
    incident.insert({a.str(), b.str()});
    incident.insert({b.str(), a.str()});
  };
  std::set<std::string> all_cells;
  for (const auto& v : p.vertices) all_cells.insert(CellRef{CellRef::Kind::kVertex, v.id}.str());
  for (const auto& e : p.edges) all_cells.insert(CellRef{CellRef::Kind::kEdge, e.id}.str());
  for (const auto& r : p.regions) all_cells.insert(CellRef{CellRef::Kind::kRegion, r.id}.str());
  for (const auto& f : p.free_circles) all_cells.insert(CellRef{CellRef::Kind::kFreeCircle, f}.str());
  for (const auto& e : p.edges) {
    CellRef ec{CellRef::Kind::kEdge, e.id};
    for (const auto& ep : e.endpoints) mark(ec, {CellRef::Kind::kVertex, ep.vertex});
  }
  for (const auto& r : p.regions) {
    CellRef rc{CellRef::Kind::kRegion, r.id};
    for (const auto& bc : r.boundary) {
      if (const auto* fc = std::get_if<FreeCircleRef>(&bc)) {
        mark(rc, {CellRef::Kind::kFreeCircle, fc->id});
      } else {
        for (const auto& st : std::get<AttachedWord>(bc).steps) {
          if (const auto* es = std::get_if<EdgeStep>(&st)) {
            mark(rc, {CellRef::Kind::kEdge, es->edge});
          } else {
            const auto& vs = std::get<VertexStep>(st);
            mark(rc, {CellRef::Kind::kVertex, vs.vertex});
            // region corner strips also meet the edges at the vertex ports
          }
        }
      }
    }
  }
  // free-circle collar cells abut their region; also treat free circles as
  // incident to the regions that own them (marked above).

  FaceMap faces = face_map(t);
  std::set<std::string> covered;
  for (const auto& c : t.tet_cells) covered.insert(c.str());
  for (const auto& cell : all_cells) {
    if (!covered.count(cell)) {
      rep.covering = false;
      rep.findings.push_back("cell " + cell + " is not thickened by any tetrahedron");
    }
  }
  for (const auto& [tri, inc] : faces) {
    (void)tri;
    if (inc.size() != 2) continue;
    const CellRef& a = t.tet_cells[(size_t)inc[0].first];
    const CellRef& b = t.tet_cells[(size_t)inc[1].first];
    if (a == b) continue;
    if (!incident.count({a.str(), b.str()})) {
      rep.cellular = false;
      rep.findings.push_back("gluing joins non-incident cells " + a.str() + " and " +
                             b.str());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// .tri3 format

namespace {

std::string cell_str(const CellRef& c) { return c.str(); }

std::optional<CellRef> cell_parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string kind = s.substr(0, colon);
  std::string id = s.substr(colon + 1);
  if (kind == "region") return CellRef{CellRef::Kind::kRegion, id};
  if (kind == "edge") return CellRef{CellRef::Kind::kEdge, id};
  if (kind == "vertex") return CellRef{CellRef::Kind::kVertex, id};
  if (kind == "free") return CellRef{CellRef::Kind::kFreeCircle, id};
  return std::nullopt;
}

}  // namespace

std::string emit_tri3(const Triangulation3& t) {
  std::ostringstream os;
  os << "tri3 " << t.tets.size() << "\n";
  for (size_t i = 0; i < t.tets.size(); ++i) {
    os << "tet " << i << " cell " << cell_str(t.tet_cells[i]) << "\n";
  }
  std::vector<Triangulation3::Gluing> gl = t.gluings;
  for (auto& g : gl) {
    if (g.tet_a > g.tet_b || (g.tet_a == g.tet_b && g.face_a > g.face_b)) {
      // normalize direction: store from the smaller side
      std::array<int, 3> inv{};
      for (int i = 0; i < 3; ++i) inv[(size_t)g.perm[(size_t)i]] = i;
      std::swap(g.tet_a, g.tet_b);
      std::swap(g.face_a, g.face_b);
      g.perm = inv;
    }
  }
  std::sort(gl.begin(), gl.end(), [](const auto& a, const auto& b) {
    return std::tie(a.tet_a, a.face_a) < std::tie(b.tet_a, b.face_a);
  });
  for (const auto& g : gl) {
    os << "glue " << g.tet_a << "." << g.face_a << " " << g.tet_b << "." << g.face_b
       << " " << g.perm[0] << g.perm[1] << g.perm[2] << "\n";
  }
  return os.str();
}

Tri3ParseResult parse_tri3(const std::string& text) {
  Tri3ParseResult out;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  long declared = -1;
  std::vector<CellRef> cells;
  struct RawGlue {
    int ta, fa, tb, fb;
    std::array<int, 3> perm;
  };
  std::vector<RawGlue> glues;
  auto err = [&out, &line_no](const std::string& m) {
    out.errors.push_back("line " + std::to_string(line_no) + ": " + m);
  };
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "tri3") {
      if (!(ls >> declared) || declared < 0) err("bad tet count");
    } else if (kw == "tet") {
      long idx;
      std::string cellkw, cell;
      if (!(ls >> idx >> cellkw >> cell) || cellkw != "cell" ||
          idx != (long)cells.size()) {
        err("expected: tet <index> cell <cell>");
        continue;
      }
      auto c = cell_parse(cell);
      if (!c.has_value()) {
        err("bad cell reference '" + cell + "'");
        continue;
      }
      cells.push_back(*c);
    } else if (kw == "glue") {
      std::string a, b, perm;
      if (!(ls >> a >> b >> perm) || perm.size() != 3) {
        err("expected: glue <i>.<f> <j>.<g> <perm>");
        continue;
      }
      auto split = [](const std::string& s, int& tet, int& face) {
        auto dot = s.find('.');
        if (dot == std::string::npos) return false;
        try {
          tet = std::stoi(s.substr(0, dot));
          face = std::stoi(s.substr(dot + 1));
        } catch (...) {
          return false;
        }
        return face >= 0 && face < 4 && tet >= 0;
      };
      RawGlue g{};
      if (!split(a, g.ta, g.fa) || !split(b, g.tb, g.fb)) {
        err("bad gluing reference");
        continue;
      }
      bool perm_ok = true;
      std::array<bool, 3> seen{false, false, false};
      for (int i = 0; i < 3; ++i) {
        if (perm[(size_t)i] < '0' || perm[(size_t)i] > '2') {
          perm_ok = false;
          break;
        }
        int d = perm[(size_t)i] - '0';
        if (seen[(size_t)d]) perm_ok = false;
        seen[(size_t)d] = true;
        g.perm[(size_t)i] = d;
      }
      if (!perm_ok) {
        err("gluing permutation must be a permutation of 012");
        continue;
      }
      glues.push_back(g);
    } else {
      err("unknown keyword '" + kw + "'");
    }
  }
  if (declared >= 0 && declared != (long)cells.size()) {
    line_no = 0;
    err("header declares " + std::to_string(declared) + " tets, found " +
        std::to_string(cells.size()));
  }
  for (const auto& g : glues) {
    if (g.ta >= (int)cells.size() || g.tb >= (int)cells.size()) {
      line_no = 0;
      err("gluing references a missing tet");
    } else if (g.ta == g.tb && g.fa == g.fb) {
      line_no = 0;
      err("face glued to itself");
    }
  }
  // involutivity: no face may appear in two gluings
  std::set<std::pair<int, int>> used;
  for (const auto& g : glues) {
    if (!used.insert({g.ta, g.fa}).second || !used.insert({g.tb, g.fb}).second) {
      line_no = 0;
      err("face appears in more than one gluing");
    }
  }
  if (!out.errors.empty()) return out;

  // reconstruct shared vertex ids from the gluings
  std::vector<int> parent(cells.size() * 4);
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
  std::function<int(int)> find = [&](int x) {
    while (parent[(size_t)x] != x) {
      parent[(size_t)x] = parent[(size_t)parent[(size_t)x]];
      x = parent[(size_t)x];
    }
    return x;
  };
  auto corner = [](int tet, int k) { return tet * 4 + k; };
  for (const auto& g : glues) {
    std::array<int, 3> fa{}, fb{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != g.fa) fa[(size_t)k++] = i;
    }
    k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != g.fb) fb[(size_t)k++] = i;
    }
    for (int i = 0; i < 3; ++i) {
      int a = corner(g.ta, fa[(size_t)i]);
      int b = corner(g.tb, fb[(size_t)g.perm[(size_t)i]]);
      parent[(size_t)find(a)] = find(b);
    }
  }
  std::map<int, int> compact;
  Triangulation3& t = out.triangulation;
  for (size_t i = 0; i < cells.size(); ++i) {
    std::array<int, 4> ids{};
    for (int k = 0; k < 4; ++k) {
      int root = find(corner((int)i, k));
      auto it = compact.find(root);
      if (it == compact.end()) {
        it = compact.emplace(root, (int)compact.size()).first;
      }
      ids[(size_t)k] = it->second;
    }
    std::sort(ids.begin(), ids.end());
    t.tets.push_back(ids);
    t.tet_cells.push_back(cells[i]);
  }
  t.vertex_count = (int)compact.size();
  for (const auto& g : glues) {
    t.gluings.push_back({g.ta, g.fa, g.tb, g.fb, g.perm});
  }
  out.ok = true;
  return out;
}

}  // namespace polyfold
