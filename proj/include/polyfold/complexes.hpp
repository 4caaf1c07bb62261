#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyfold/model.hpp"

namespace polyfold {

// Which cell of the polyhedron a simplex subdivides.
struct CellRef {
  enum class Kind { kRegion, kEdge, kVertex, kFreeCircle };
  Kind kind = Kind::kRegion;
  std::string id;

  bool operator==(const CellRef&) const = default;
  bool operator<(const CellRef& o) const {
    return kind != o.kind ? kind < o.kind : id < o.id;
  }
  std::string str() const;
};

struct SimplicialComplex2 {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;      // sorted pairs
  std::vector<std::array<int, 3>> triangles;  // sorted triples
  std::vector<CellRef> vertex_cells;
  std::vector<CellRef> edge_cells;
  std::vector<CellRef> triangle_cells;

  int euler() const {
    return vertex_count - static_cast<int>(edges.size()) +
           static_cast<int>(triangles.size());
  }
};

// Canonical triangulation of the underlying 2-polyhedron.  Regions are
// realized from fundamental polygons and the whole complex is twice
// barycentrically subdivided.  Throws Error(kInvalidInput).
SimplicialComplex2 triangulate(const SimplePolyhedron& p);

// ---------------------------------------------------------------------------
// Integer linear algebra.

struct SmithResult {
  std::vector<std::int64_t> factors;  // d1 | d2 | ... , all > 0
  int rank = 0;
};

// Smith normal form over the integers; 64-bit arithmetic with explicit
// overflow detection (throws Error(kOverflow)).
SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& m);

// Sparse column representation used for the larger boundary matrices.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::map<int, std::int64_t>> cols;
};

SmithResult smith_normal_form(const SparseMatrix& m);

struct ChainComplex {
  // boundary[k] maps k-chains to (k-1)-chains; boundary[0] is empty.
  // dims[k] = number of k-cells.
  std::vector<int> dims;
  std::vector<SparseMatrix> boundary;
};

ChainComplex chain_complex(const SimplicialComplex2& k);

struct GroupSummary {
  int rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool free_abelian() const { return torsion.empty(); }
  bool operator==(const GroupSummary&) const = default;
  std::string str() const;
};

struct HomologyResult {
  std::vector<GroupSummary> groups;  // degree 0..top

  const GroupSummary& at(size_t k) const { return groups.at(k); }
};

// Throws Error(kNotAComplex) if some composite boundary is nonzero.
HomologyResult homology(const ChainComplex& c);

// ---------------------------------------------------------------------------
// Fundamental group.

enum class Pi1Status { kTrivial, kNontrivial, kUnknown };

struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;  // letters +-g, generators 1-based
  Pi1Status status = Pi1Status::kUnknown;
  std::string certificate;  // why the status holds
};

// Edge-path presentation from a spanning tree.  Throws Error(kDisconnected).
Presentation pi1_presentation(const SimplicialComplex2& k);

// Length-reducing Tietze simplification with the given move budget.  Status
// is upgraded only with a certificate: trivial needs the empty presentation,
// nontrivial needs nontrivial abelianization or a homomorphism onto a
// nontrivial finite group.
Presentation simplify_presentation(Presentation pres, int budget);

// ---------------------------------------------------------------------------
// Collapsibility.

enum class CollapseTarget { kPoint, kDisc };
enum class CollapseOutcome { kCollapsed, kExhaustedBudget, kProvenImpossible };

struct CollapseMove {
  int dim = 0;   // dimension of the free face (0 or 1)
  int face = 0;  // index of the free face
  int coface = 0;
};

struct CollapseBudget {
  int restarts = 50;
  int steps = 10000;
  int exhaustive_max = 60;
  std::uint64_t seed = 0;
};

struct ResidualSummary {
  int vertices = 0;
  int edges = 0;
  int triangles = 0;
};

struct CollapseResult {
  CollapseOutcome outcome = CollapseOutcome::kExhaustedBudget;
  std::vector<CollapseMove> sequence;  // meaningful when collapsed
  ResidualSummary residual;
  std::string reason;
};

CollapseResult collapse_search(const SimplicialComplex2& k, CollapseTarget target,
                               const CollapseBudget& budget);

// Replays a collapse sequence from the input complex; returns the residual
// cell counts, or nullopt if some move is not legal at its turn.
std::optional<ResidualSummary> replay_collapse(const SimplicialComplex2& k,
                                               const std::vector<CollapseMove>& seq);

}  // namespace polyfold
