#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyfold/charts.hpp"
#include "polyfold/model.hpp"

namespace polyfold {

// Node of the singular graph: a double point, or a marker placed on a triple
// circle that meets no double point.
struct SingularNode {
  enum class Kind { kDoublePoint, kCircleMarker };
  Kind kind = Kind::kDoublePoint;
  std::string id;  // vertex id, or edge id for circle markers
};

// Arc of the singular graph: one triple edge.  Circles become self-loops at
// their marker node and carry the slot identification as seam.
struct SingularArc {
  std::string edge_id;
  int from_node = 0;
  int to_node = 0;
  int from_port = -1;
  int to_port = -1;
  SlotPerm seam;  // identity for interval edges
};

struct SingularGraph {
  std::vector<SingularNode> nodes;
  std::vector<SingularArc> arcs;
  // Corner incidence per double point, for passage transitions.
  std::map<std::string, CornerIncidence> corners;
};

struct WalkStep {
  int arc = 0;
  bool forward = true;
};
using Walk = std::vector<WalkStep>;

struct CycleReport {
  Walk walk;
  SlotPerm monodromy;
  int sign = 1;
  std::string perm_class;  // "trivial", "free", "reversing"
};

struct MonodromyReport {
  bool compatible = false;
  std::vector<CycleReport> cycles;
  Walk witness;  // present iff incompatible
  bool has_witness = false;
  // why checking a cycle basis decides every simple loop
  std::string justification;
};

// Builds the singular graph.  Throws Error(kInvalidInput) if validation fails.
SingularGraph singular_graph(const SimplePolyhedron& p);

// Composite prong permutation along a closed walk, acting on the slots of the
// first arc.  Throws Error(kNotALoop) if the walk is not closed and composable.
SlotPerm loop_monodromy(const SingularGraph& g, const Walk& walk);

// Fundamental cycles of a spanning forest.  The seed shuffles tie-breaking;
// the span (and every monodromy sign) is independent of it.
std::vector<Walk> cycle_basis(const SingularGraph& g, std::uint64_t seed);

MonodromyReport check_compatibility(const SimplePolyhedron& p);

std::string describe_walk(const SingularGraph& g, const Walk& walk);

}  // namespace polyfold
