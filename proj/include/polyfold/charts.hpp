#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyfold/model.hpp"

namespace polyfold {

// The local model of a double point is the cone over the complete graph on
// the four germ ports: six surface wings, one per unordered port pair.  The
// wing between ports of the same through-pair is the sheet passing straight
// through; the other four turn a corner.  The chart catalog is the registry
// of admissible local models; each entry fixes which port pairs are
// through-pairs relative to the declared pairing.
struct ChartSpec {
  std::string id;
  // Whether the pairing declared on the vertex is taken as the set of
  // through-arcs of the crossing.  The standard chart accepts any pairing
  // whose two pairs partition {0,1,2,3}.
  bool requires_partition = true;
};

const ChartSpec* find_chart(const std::string& id);
std::vector<std::string> chart_ids();

// Derived incidence data of one double point: for each port, which wing each
// slot of the incident edge germ lies in.  Wings are named by the opposite
// port: slot s of port p lies in the wing between p and flank[p][s].
struct CornerIncidence {
  // flank[port][slot] = other port, or -1 when underivable.
  std::array<std::array<int, 3>, 4> flank;
  // edge id and whether this vertex is at the edge's tail (endpoint 0).
  std::array<std::string, 4> edge_at_port;
  // region id whose boundary word claims the wing {p,q}, keyed canonically.
  std::map<std::pair<int, int>, std::string> wing_region;

  CornerIncidence() {
    for (auto& row : flank) row = {-1, -1, -1};
  }

  int slot_in_wing(int port, int other) const {
    for (int s = 0; s < 3; ++s) {
      if (flank[static_cast<size_t>(port)][static_cast<size_t>(s)] == other) return s;
    }
    return -1;
  }
};

// Prong transport through a double point from port_in to port_out, derived
// from corner incidence: the slot lying in the wing between the two ports
// continues within that wing; every other slot keeps the port it flanks.
// Returns the slot bijection incoming-edge-slots -> outgoing-edge-slots, or
// nullopt when the incidence data is incomplete.
std::optional<SlotPerm> derived_transition(const CornerIncidence& inc, int port_in,
                                           int port_out);

struct ChartAnalysis {
  std::map<std::string, CornerIncidence> corners;  // by vertex id
  std::vector<ValidationIssue> errors;
  bool ok() const { return errors.empty(); }
};

// Derives corner incidence for every double point from the region boundary
// words, checking the chart catalog's admissibility conditions.
ChartAnalysis analyze_charts(const SimplePolyhedron& p);

}  // namespace polyfold
