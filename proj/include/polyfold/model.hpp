#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace polyfold {

// Error codes shared by the throwing operations of the library.
enum class ErrorCode {
  kInvalidInput,
  kUnknownExample,
  kNotALoop,
  kOverflow,
  kNotAComplex,
  kDisconnected,
  kIncompatible,
  kChartUnsupported,
  kTorsionAnomaly,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Permutation of the three prong slots {0,1,2} of a triple edge.
// Stored as images: perm[i] = image of slot i.
struct SlotPerm {
  std::array<std::uint8_t, 3> image{0, 1, 2};

  static SlotPerm identity() { return SlotPerm{}; }
  static std::optional<SlotPerm> from_digits(const std::string& digits);

  int operator()(int slot) const { return image[static_cast<size_t>(slot)]; }
  SlotPerm then(const SlotPerm& next) const;  // apply *this first, then next
  SlotPerm inverse() const;
  int sign() const;  // +1 even, -1 odd
  bool is_identity() const { return image == std::array<std::uint8_t, 3>{0, 1, 2}; }
  bool is_three_cycle() const { return !is_identity() && sign() == 1; }
  bool is_transposition() const { return sign() == -1; }
  std::string digits() const;

  bool operator==(const SlotPerm&) const = default;
};

// Reference to one of the four germ ports of a double point.
struct PortRef {
  std::string vertex;
  int port = 0;  // 0..3

  bool operator==(const PortRef&) const = default;
};

enum class EdgeKind { kInterval, kCircle };

// A triple edge: the image of an indefinite fold arc.  Three surface sheets
// (slots 0..2) are attached along it.  Circle edges carry the permutation
// identifying the slots across the closing seam.
struct TripleEdge {
  std::string id;
  EdgeKind kind = EdgeKind::kCircle;
  std::vector<PortRef> endpoints;  // empty for circles, exactly 2 for intervals
  SlotPerm circle_identification;  // identity for intervals

  bool operator==(const TripleEdge&) const = default;
};

// A double point: transverse crossing of two triple arcs.  The four germ
// ports are grouped into two through-arcs; each through-arc carries the slot
// bijection between its incoming and outgoing edge germs.
struct DoublePoint {
  std::string id;
  std::string chart_id;                       // key into the chart catalog
  std::array<std::array<int, 2>, 2> pairs{};  // two through-pairs of ports
  std::array<SlotPerm, 2> transitions{};      // slot bijection per through-pair

  // Through-partner of a port, or -1 if the port is not in any pair.
  int partner(int port) const {
    for (const auto& pr : pairs) {
      if (pr[0] == port) return pr[1];
      if (pr[1] == port) return pr[0];
    }
    return -1;
  }
  // Index of the pair containing the port, or -1.
  int pair_index(int port) const {
    for (int i = 0; i < 2; ++i) {
      if (pairs[static_cast<size_t>(i)][0] == port ||
          pairs[static_cast<size_t>(i)][1] == port) {
        return i;
      }
    }
    return -1;
  }

  bool operator==(const DoublePoint&) const = default;
};

// One step of an attached boundary word: either a full traversal of a triple
// edge in a given slot and direction, or a passage through a double point
// entering at port_in and leaving at port_out.
struct EdgeStep {
  std::string edge;
  int slot = 0;
  bool forward = true;

  bool operator==(const EdgeStep&) const = default;
};

struct VertexStep {
  std::string vertex;
  int port_in = 0;
  int port_out = 0;

  bool operator==(const VertexStep&) const = default;
};

using WordStep = std::variant<EdgeStep, VertexStep>;

struct AttachedWord {
  std::vector<WordStep> steps;

  bool operator==(const AttachedWord&) const = default;
};

struct FreeCircleRef {
  std::string id;

  bool operator==(const FreeCircleRef&) const = default;
};

using BoundaryComponent = std::variant<FreeCircleRef, AttachedWord>;

// A region: one stratum of regular values, an abstract compact surface given
// by its (genus, orientability) label and its boundary attachments.
struct Region {
  std::string id;
  int genus = 0;
  bool orientable = true;
  std::vector<BoundaryComponent> boundary;

  bool operator==(const Region&) const = default;
};

struct SimplePolyhedron {
  std::string name;
  std::vector<DoublePoint> vertices;
  std::vector<TripleEdge> edges;
  std::vector<Region> regions;
  std::vector<std::string> free_circles;

  const TripleEdge* find_edge(const std::string& id) const;
  const DoublePoint* find_vertex(const std::string& id) const;
  const Region* find_region(const std::string& id) const;

  bool operator==(const SimplePolyhedron&) const = default;
};

struct ValidationIssue {
  std::string code;
  std::string location;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
  bool ok = false;
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  int double_points = 0;
  int triple_edges = 0;
  int region_count = 0;
};

ValidationReport validate(const SimplePolyhedron& p);

// Euler characteristic of the underlying 2-polyhedron, computed additively
// from the canonical cellulation.  Throws Error(kInvalidInput) when
// validation fails.
int euler_characteristic(const SimplePolyhedron& p);

// Built-in example polyhedra.  Throws Error(kUnknownExample).
SimplePolyhedron catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace polyfold
