#include "polyfold/charts.hpp"

#include <algorithm>
#include <set>

namespace polyfold {

namespace {

const ChartSpec kCharts[] = {
    // Transverse crossing of two triple arcs with spherical fiber data:
    // enumeration of admissible singular fibers (two node points, every
    // nearby resolution a union of spheres) leaves exactly one local model,
    // the three-sphere chain, whose wing complex is the cone over K4.
    {"standard", true},
};

}  // namespace

const ChartSpec* find_chart(const std::string& id) {
  for (const auto& c : kCharts) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> chart_ids() {
  std::vector<std::string> ids;
  for (const auto& c : kCharts) ids.push_back(c.id);
  return ids;
}

std::optional<SlotPerm> derived_transition(const CornerIncidence& inc, int port_in,
                                           int port_out) {
  SlotPerm perm;
  std::array<bool, 3> hit{false, false, false};
  for (int s = 0; s < 3; ++s) {
    int u = inc.flank[static_cast<size_t>(port_in)][static_cast<size_t>(s)];
    if (u < 0) return std::nullopt;
    int target = (u == port_out) ? port_in : u;
    int s2 = inc.slot_in_wing(port_out, target);
    if (s2 < 0) return std::nullopt;
    if (hit[static_cast<size_t>(s2)]) return std::nullopt;
    hit[static_cast<size_t>(s2)] = true;
    perm.image[static_cast<size_t>(s)] = static_cast<std::uint8_t>(s2);
  }
  return perm;
}

ChartAnalysis analyze_charts(const SimplePolyhedron& p) {
  ChartAnalysis out;
  auto err = [&out](const std::string& code, const std::string& loc,
                    const std::string& msg) {
    out.errors.push_back({code, loc, msg});
  };

  // Which edge plugs into each port.
  for (const auto& v : p.vertices) {
    out.corners.emplace(v.id, CornerIncidence{});
  }
  for (const auto& e : p.edges) {
    for (const auto& ep : e.endpoints) {
      auto it = out.corners.find(ep.vertex);
      if (it == out.corners.end() || ep.port < 0 || ep.port > 3) continue;
      it->second.edge_at_port[static_cast<size_t>(ep.port)] = e.id;
    }
  }

  // Walk every attached word; each vertex passage claims the wing between its
  // two ports and pins the flanking slots of the adjacent edge steps.
  for (const auto& r : p.regions) {
    for (size_t bi = 0; bi < r.boundary.size(); ++bi) {
      const auto* word = std::get_if<AttachedWord>(&r.boundary[bi]);
      if (word == nullptr || word->steps.empty()) continue;
      const auto& steps = word->steps;
      const size_t n = steps.size();
      for (size_t i = 0; i < n; ++i) {
        const auto* vs = std::get_if<VertexStep>(&steps[i]);
        if (vs == nullptr) continue;
        auto cit = out.corners.find(vs->vertex);
        if (cit == out.corners.end()) continue;
        CornerIncidence& inc = cit->second;
        const std::string loc = "region:" + r.id + "/boundary:" + std::to_string(bi) +
                                "/step:" + std::to_string(i);
        if (vs->port_in == vs->port_out || vs->port_in < 0 || vs->port_in > 3 ||
            vs->port_out < 0 || vs->port_out > 3) {
          err("BAD_PASSAGE", loc, "vertex passage must join two distinct ports 0..3");
          continue;
        }
        auto key = std::minmax(vs->port_in, vs->port_out);
        auto [wit, fresh] = inc.wing_region.emplace(
            std::make_pair(key.first, key.second), r.id);
        if (!fresh) {
          err("WING_DOUBLY_CLAIMED", loc,
              "wing between ports " + std::to_string(key.first) + "," +
                  std::to_string(key.second) + " of vertex " + vs->vertex +
                  " claimed more than once");
          continue;
        }
        const auto* before = std::get_if<EdgeStep>(&steps[(i + n - 1) % n]);
        const auto* after = std::get_if<EdgeStep>(&steps[(i + 1) % n]);
        if (before == nullptr || after == nullptr) {
          err("BAD_WORD", loc, "vertex passage must sit between two edge steps");
          continue;
        }
        auto pin = [&](int port, int slot, int other, const char* side) {
          auto& cell = inc.flank[static_cast<size_t>(port)][static_cast<size_t>(slot)];
          if (cell != -1 && cell != other) {
            err("SLOT_CORNER_CONFLICT", loc,
                std::string("slot ") + std::to_string(slot) + " at port " +
                    std::to_string(port) + " of vertex " + vs->vertex +
                    " flanked by two different wings (" + side + ")");
            return;
          }
          cell = other;
        };
        pin(vs->port_in, before->slot, vs->port_out, "incoming");
        pin(vs->port_out, after->slot, vs->port_in, "outgoing");
      }
    }
  }

  // Chart admissibility per vertex.
  for (const auto& v : p.vertices) {
    const std::string loc = "vertex:" + v.id;
    const ChartSpec* chart = find_chart(v.chart_id);
    if (chart == nullptr) {
      err("CHART_UNKNOWN", loc, "unknown chart '" + v.chart_id + "'");
      continue;
    }
    std::set<int> ports;
    for (const auto& pr : v.pairs) {
      ports.insert(pr[0]);
      ports.insert(pr[1]);
    }
    if (chart->requires_partition &&
        ports != std::set<int>{0, 1, 2, 3}) {
      err("BAD_PAIRING", loc, "through-pairs must partition the four ports");
      continue;
    }
    CornerIncidence& inc = out.corners.at(v.id);
    if (inc.wing_region.size() != 6) {
      err("WING_UNCLAIMED", loc,
          "expected 6 wing passages, found " +
              std::to_string(inc.wing_region.size()));
      continue;
    }
    bool rows_ok = true;
    for (int port = 0; port < 4; ++port) {
      std::set<int> flanks;
      for (int s = 0; s < 3; ++s) {
        int u = inc.flank[static_cast<size_t>(port)][static_cast<size_t>(s)];
        if (u < 0) {
          err("SLOT_UNFLANKED", loc,
              "slot " + std::to_string(s) + " at port " + std::to_string(port) +
                  " not flanked by any wing");
          rows_ok = false;
        } else {
          flanks.insert(u);
        }
      }
      if (rows_ok && flanks.size() != 3) {
        err("SLOT_CORNER_CONFLICT", loc,
            "slots at port " + std::to_string(port) +
                " do not meet three distinct wings");
        rows_ok = false;
      }
    }
    if (!rows_ok) continue;
    for (int k = 0; k < 2; ++k) {
      int a = v.pairs[static_cast<size_t>(k)][0];
      int b = v.pairs[static_cast<size_t>(k)][1];
      auto derived = derived_transition(inc, a, b);
      if (!derived.has_value()) {
        err("TRANS_UNDERIVABLE", loc,
            "through transition for pair " + std::to_string(k) +
                " cannot be derived from corner incidence");
        continue;
      }
      if (!(v.transitions[static_cast<size_t>(k)] == *derived)) {
        err("TRANS_INCONSISTENT", loc,
            "declared transition " + v.transitions[static_cast<size_t>(k)].digits() +
                " for pair " + std::to_string(k) + " differs from derived " +
                derived->digits());
      }
    }
  }
  return out;
}

}  // namespace polyfold
