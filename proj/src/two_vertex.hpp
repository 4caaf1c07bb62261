#pragma once

// Internal builder for the two-double-point catalog entries.
//
// The singular graph has two double points v1, v2 and four interval arcs.
// Each arc end sits at a (vertex, port); the three slots of an arc flank one
// wing each at either end.  Region boundary words are the closed trails of
// the flank data, and through transitions are derived from it.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "polyfold/model.hpp"

namespace polyfold::detail {

struct ArcEnd {
  int vertex = 0;  // 0 = v1, 1 = v2
  int port = 0;
};

struct TwoVertexSpec {
  const char* name;
  std::array<std::array<ArcEnd, 2>, 4> ends;
  // flank[arc][end][slot] = flanked port at that end's vertex.
  std::array<std::array<std::array<int, 3>, 2>, 4> flank;
  std::array<std::array<std::array<int, 2>, 2>, 2> pairs;  // per vertex
  int annulus_trail;  // trail that also owns a free circle, or -1
};

inline SimplePolyhedron make_two_vertex(const TwoVertexSpec& spec) {
  SimplePolyhedron p;
  p.name = spec.name;
  const std::array<const char*, 4> arc_names{"a", "b", "c", "d"};
  const std::array<const char*, 2> vertex_names{"v1", "v2"};

  for (int arc = 0; arc < 4; ++arc) {
    TripleEdge e;
    e.id = arc_names[static_cast<size_t>(arc)];
    e.kind = EdgeKind::kInterval;
    const auto& en = spec.ends[static_cast<size_t>(arc)];
    e.endpoints = {{vertex_names[static_cast<size_t>(en[0].vertex)], en[0].port},
                   {vertex_names[static_cast<size_t>(en[1].vertex)], en[1].port}};
    p.edges.push_back(std::move(e));
  }

  // port -> (arc, end) per vertex
  std::array<std::array<std::pair<int, int>, 4>, 2> at_port{};
  for (int arc = 0; arc < 4; ++arc) {
    for (int end = 0; end < 2; ++end) {
      const auto& en = spec.ends[static_cast<size_t>(arc)][static_cast<size_t>(end)];
      at_port[static_cast<size_t>(en.vertex)][static_cast<size_t>(en.port)] = {arc, end};
    }
  }
  auto flank = [&spec](int arc, int end, int slot) {
    return spec.flank[static_cast<size_t>(arc)][static_cast<size_t>(end)]
                     [static_cast<size_t>(slot)];
  };
  auto slot_in_wing = [&](int arc, int end, int other) {
    for (int s = 0; s < 3; ++s) {
      if (flank(arc, end, s) == other) return s;
    }
    return -1;
  };

  // Trails over directed germs (arc, slot); direction = which end we leave.
  std::map<std::pair<int, int>, bool> used;
  std::vector<AttachedWord> trails;
  for (int arc0 = 0; arc0 < 4; ++arc0) {
    for (int slot0 = 0; slot0 < 3; ++slot0) {
      if (used[{arc0, slot0}]) continue;
      AttachedWord word;
      int arc = arc0;
      int slot = slot0;
      int from_end = 0;
      while (true) {
        used[{arc, slot}] = true;
        word.steps.push_back(
            EdgeStep{arc_names[static_cast<size_t>(arc)], slot, from_end == 0});
        int to_end = 1 - from_end;
        const auto& en = spec.ends[static_cast<size_t>(arc)][static_cast<size_t>(to_end)];
        int pin = en.port;
        int pout = flank(arc, to_end, slot);
        auto [next_arc, next_end] =
            at_port[static_cast<size_t>(en.vertex)][static_cast<size_t>(pout)];
        int next_slot = slot_in_wing(next_arc, next_end, pin);
        word.steps.push_back(
            VertexStep{vertex_names[static_cast<size_t>(en.vertex)], pin, pout});
        if (next_arc == arc0 && next_slot == slot0 && next_end == 0) break;
        arc = next_arc;
        slot = next_slot;
        from_end = next_end;
      }
      trails.push_back(std::move(word));
    }
  }

  int trail_index = 0;
  for (auto& t : trails) {
    Region r;
    r.id = "r" + std::to_string(trail_index);
    r.genus = 0;
    r.orientable = true;
    if (trail_index == spec.annulus_trail) {
      p.free_circles.push_back("f0");
      r.boundary.push_back(FreeCircleRef{"f0"});
    }
    r.boundary.push_back(std::move(t));
    p.regions.push_back(std::move(r));
    ++trail_index;
  }

  for (int vi = 0; vi < 2; ++vi) {
    DoublePoint v;
    v.id = vertex_names[static_cast<size_t>(vi)];
    v.chart_id = "standard";
    v.pairs = {{{spec.pairs[static_cast<size_t>(vi)][0][0],
                 spec.pairs[static_cast<size_t>(vi)][0][1]},
                {spec.pairs[static_cast<size_t>(vi)][1][0],
                 spec.pairs[static_cast<size_t>(vi)][1][1]}}};
    for (int k = 0; k < 2; ++k) {
      int pa = v.pairs[static_cast<size_t>(k)][0];
      int pb = v.pairs[static_cast<size_t>(k)][1];
      auto [arc_a, end_a] = at_port[static_cast<size_t>(vi)][static_cast<size_t>(pa)];
      auto [arc_b, end_b] = at_port[static_cast<size_t>(vi)][static_cast<size_t>(pb)];
      SlotPerm trans;
      for (int s = 0; s < 3; ++s) {
        int u = flank(arc_a, end_a, s);
        int target = (u == pb) ? pa : u;
        int s2 = slot_in_wing(arc_b, end_b, target);
        trans.image[static_cast<size_t>(s)] = static_cast<std::uint8_t>(s2);
      }
      v.transitions[static_cast<size_t>(k)] = trans;
    }
    p.vertices.push_back(std::move(v));
  }
  return p;
}

}  // namespace polyfold::detail
