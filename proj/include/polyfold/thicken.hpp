#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyfold/complexes.hpp"
#include "polyfold/model.hpp"

namespace polyfold {

// Tetrahedral complex with face gluings: the combinatorial 3-manifold.
// Vertices are global ids; two tetrahedra are glued along a face when they
// share its three vertex ids.
struct Triangulation3 {
  std::vector<std::array<int, 4>> tets;  // each sorted ascending
  std::vector<CellRef> tet_cells;        // provenance: thickened cell
  int vertex_count = 0;

  struct Gluing {
    int tet_a = 0;
    int face_a = 0;  // face index = opposite vertex position
    int tet_b = 0;
    int face_b = 0;
    std::array<int, 3> perm{};  // vertex correspondence face_a -> face_b
  };
  std::vector<Gluing> gluings;  // derived, involutive; unglued faces = boundary
};

struct BoundaryComponentReport {
  int triangles = 0;
  int euler = 0;
  bool orientable = false;
};

struct ManifoldReport {
  bool is_manifold = false;
  bool orientable = false;
  bool connected = false;
  std::vector<int> tet_orientation;  // +-1 per tet when orientable
  std::vector<BoundaryComponentReport> boundary;
  std::vector<std::string> findings;  // empty when everything holds

  bool boundary_nonempty() const { return !boundary.empty(); }
  int boundary_euler_total() const {
    int chi = 0;
    for (const auto& b : boundary) chi += b.euler;
    return chi;
  }
};

// Block-by-block thickening of a compatible simple polyhedron into an
// oriented triangulated 3-manifold with boundary.  Throws
// Error(kIncompatible) when the prong-bundle compatibility hypothesis fails,
// Error(kChartUnsupported) when a vertex pattern cannot be assembled.
Triangulation3 thicken(const SimplePolyhedron& p);

ManifoldReport verify_manifold(const Triangulation3& t);

// Simplicial homology of the 3-complex.
HomologyResult homology3(const Triangulation3& t);

struct WitnessReport {
  bool cellular = true;   // glued tets carry equal or incident cells
  bool covering = true;   // every polyhedron cell is thickened by some tet
  std::vector<std::string> findings;
};

// Consistency of the projection onto the polyhedron recorded in provenance.
WitnessReport projection_witness(const Triangulation3& t, const SimplePolyhedron& p);

// Euler characteristic of the 3-complex (vertices - edges + faces - tets).
int euler3(const Triangulation3& t);

// .tri3 text format (codec contract).
std::string emit_tri3(const Triangulation3& t);

struct Tri3ParseResult {
  bool ok = false;
  Triangulation3 triangulation;
  std::vector<std::string> errors;
};
Tri3ParseResult parse_tri3(const std::string& text);

}  // namespace polyfold
