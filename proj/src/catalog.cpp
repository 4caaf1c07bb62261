#include <algorithm>
#include <array>
#include <cassert>
#include <map>

#include "polyfold/charts.hpp"
#include "two_vertex.hpp"
#include "polyfold/model.hpp"

namespace polyfold {

namespace {

Region disc_region(const std::string& id, BoundaryComponent bc) {
  Region r;
  r.id = id;
  r.genus = 0;
  r.orientable = true;
  r.boundary.push_back(std::move(bc));
  return r;
}

AttachedWord circle_word(const std::string& edge, std::initializer_list<int> slots) {
  AttachedWord w;
  for (int s : slots) w.steps.push_back(EdgeStep{edge, s, true});
  return w;
}

// One region (disc), one free boundary circle, no singular set.
SimplePolyhedron make_disc() {
  SimplePolyhedron p;
  p.name = "disc";
  p.free_circles = {"f0"};
  Region r = disc_region("r0", FreeCircleRef{"f0"});
  p.regions.push_back(std::move(r));
  return p;
}

// Annulus with a free outer boundary plus two discs, all meeting along one
// triple circle with trivial identification.
SimplePolyhedron make_round_bundle() {
  SimplePolyhedron p;
  p.name = "round_bundle";
  p.free_circles = {"f0"};
  p.edges.push_back({"c0", EdgeKind::kCircle, {}, SlotPerm::identity()});
  Region ann;
  ann.id = "ann";
  ann.genus = 0;
  ann.orientable = true;
  ann.boundary.push_back(FreeCircleRef{"f0"});
  ann.boundary.push_back(circle_word("c0", {0}));
  p.regions.push_back(std::move(ann));
  p.regions.push_back(disc_region("cap1", circle_word("c0", {1})));
  p.regions.push_back(disc_region("cap2", circle_word("c0", {2})));
  return p;
}

// Two nested triple circles: outer annulus with free boundary, a cap and a
// middle annulus on the first circle, two caps on the second.
SimplePolyhedron make_round_sum2() {
  SimplePolyhedron p;
  p.name = "round_sum2";
  p.free_circles = {"f0"};
  p.edges.push_back({"c0", EdgeKind::kCircle, {}, SlotPerm::identity()});
  p.edges.push_back({"c1", EdgeKind::kCircle, {}, SlotPerm::identity()});
  Region outer;
  outer.id = "outer";
  outer.genus = 0;
  outer.orientable = true;
  outer.boundary.push_back(FreeCircleRef{"f0"});
  outer.boundary.push_back(circle_word("c0", {0}));
  p.regions.push_back(std::move(outer));
  p.regions.push_back(disc_region("cap_a", circle_word("c0", {1})));
  Region mid;
  mid.id = "mid";
  mid.genus = 0;
  mid.orientable = true;
  mid.boundary.push_back(circle_word("c0", {2}));
  mid.boundary.push_back(circle_word("c1", {0}));
  p.regions.push_back(std::move(mid));
  p.regions.push_back(disc_region("cap_b", circle_word("c1", {1})));
  p.regions.push_back(disc_region("cap_c", circle_word("c1", {2})));
  return p;
}

// One triple circle whose identification is a transposition: the prong
// bundle over the core has reversing monodromy.
SimplePolyhedron make_incompatible_circle() {
  SimplePolyhedron p;
  p.name = "incompatible_circle";
  auto ident = SlotPerm::from_digits("102");
  p.edges.push_back({"c0", EdgeKind::kCircle, {}, *ident});
  p.regions.push_back(disc_region("wrap", circle_word("c0", {0, 1})));
  p.regions.push_back(disc_region("cap", circle_word("c0", {2})));
  return p;
}

// Two-vertex constructions live in two_vertex.hpp.

using detail::TwoVertexSpec;
using detail::make_two_vertex;

// Frozen two-vertex tables.  Chosen by exhaustive search over all flank
// assignments on this graph for the required invariants (validation,
// homology, fundamental group, prong-bundle compatibility); see the tests
// that re-verify each property.
extern const TwoVertexSpec kBingHouseSpec;
extern const TwoVertexSpec kSuzuokaSpec;
extern const TwoVertexSpec kTwoCrossingsSpec;

}  // namespace

SimplePolyhedron catalog(const std::string& name) {
  if (name == "disc") return make_disc();
  if (name == "round_bundle") return make_round_bundle();
  if (name == "round_sum2") return make_round_sum2();
  if (name == "incompatible_circle") return make_incompatible_circle();
  if (name == "bing_house") return make_two_vertex(kBingHouseSpec);
  if (name == "suzuoka") return make_two_vertex(kSuzuokaSpec);
  if (name == "two_crossings") return make_two_vertex(kTwoCrossingsSpec);
  throw Error(ErrorCode::kUnknownExample, "unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"bing_house",          "disc",       "incompatible_circle",
          "round_bundle",        "round_sum2", "suzuoka",
          "two_crossings"};
}

namespace {

// Frozen two-vertex tables.  The singular graph is a loop arc at each
// double point plus two connecting arcs (a chain of circles with two
// crossings).  The flank tables were selected by exhaustive search over all
// slot-wing assignments on the two 4-valent two-vertex graphs for the
// required invariants: validation, prong-bundle compatibility, homology,
// and fundamental group.  The tests re-verify every property.
using detail::ArcEnd;

// arcs: a = loop at v1 (ports 0,1), b = loop at v2 (ports 0,1),
//       c, d = connectors on ports 2, 3.
constexpr std::array<std::array<ArcEnd, 2>, 4> kChainEnds = {{
    {{{0, 0}, {0, 1}}},
    {{{1, 0}, {1, 1}}},
    {{{0, 2}, {1, 2}}},
    {{{0, 3}, {1, 3}}},
}};

const TwoVertexSpec kBingHouseSpec = {
    "bing_house",
    kChainEnds,
    {{{{{1, 2, 3}, {0, 2, 3}}},
      {{{1, 2, 3}, {0, 2, 3}}},
      {{{0, 1, 3}, {0, 3, 1}}},
      {{{0, 1, 2}, {0, 2, 1}}}}},
    {{{{{0, 1}, {2, 3}}}, {{{0, 1}, {2, 3}}}}},
    -1,
};
const TwoVertexSpec kSuzuokaSpec = {
    "suzuoka",
    kChainEnds,
    {{{{{1, 2, 3}, {0, 2, 3}}},
      {{{1, 2, 3}, {0, 2, 3}}},
      {{{0, 1, 3}, {0, 1, 3}}},
      {{{0, 1, 2}, {0, 1, 2}}}}},
    {{{{{0, 1}, {2, 3}}}, {{{0, 1}, {2, 3}}}}},
    0,
};
const TwoVertexSpec kTwoCrossingsSpec = {
    "two_crossings",
    kChainEnds,
    {{{{{1, 2, 3}, {0, 2, 3}}},
      {{{1, 2, 3}, {0, 2, 3}}},
      {{{0, 1, 3}, {0, 1, 3}}},
      {{{0, 1, 2}, {1, 2, 0}}}}},
    {{{{{0, 1}, {2, 3}}}, {{{0, 1}, {2, 3}}}}},
    0,
};
}  // namespace

}  // namespace polyfold
