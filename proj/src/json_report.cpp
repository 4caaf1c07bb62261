#include "json.hpp"
#include "polyfold/codec.hpp"

namespace polyfold {

namespace {

nlohmann::json group_json(const GroupSummary& g) {
  nlohmann::json j;
  j["rank"] = g.rank;
  j["torsion"] = g.torsion;
  return j;
}

const char* pi1_status_str(Pi1Status s) {
  switch (s) {
    case Pi1Status::kTrivial: return "trivial";
    case Pi1Status::kNontrivial: return "nontrivial";
    case Pi1Status::kUnknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

std::string emit_report_json(const AnalysisBundle& b) {
  nlohmann::json j;
  j["polyhedron"] = b.polyhedron;
  j["euler"] = b.euler;
  nlohmann::json hom;
  const char* names[3] = {"H0", "H1", "H2"};
  for (int k = 0; k < 3; ++k) {
    hom[names[k]] = group_json(b.homology.at((size_t)k));
  }
  j["homology"] = hom;
  nlohmann::json pi1;
  pi1["status"] = pi1_status_str(b.pi1.status);
  nlohmann::json pres;
  pres["generators"] = b.pi1.generators;
  pres["relators"] = b.pi1.relators;
  pi1["presentation"] = pres;
  j["pi1"] = pi1;
  j["compatible"] = b.compatible;
  j["double_points"] = b.double_points;
  nlohmann::json src;
  src["dimension"] = b.source.dimension;
  src["h1"] = group_json(b.source.h1);
  src["h2_free"] = b.source.h2_free;
  if (b.source.rank_h2_source.has_value()) {
    src["rank_h2_source"] = *b.source.rank_h2_source;
  } else {
    src["rank_h2_source"] = nullptr;
  }
  src["transported_max_degree"] = b.source.transported_max_degree;
  j["source_invariants"] = src;
  nlohmann::json decisions = nlohmann::json::array();
  for (const auto& c : b.decisions) {
    nlohmann::json cj;
    cj["claim"] = c.statement;
    cj["paper_ref"] = c.paper_ref;
    nlohmann::json hyps = nlohmann::json::array();
    for (const auto& h : c.hypotheses) {
      nlohmann::json hj;
      hj["name"] = h.name;
      switch (h.verdict) {
        case Verdict::kHolds: hj["holds"] = true; break;
        case Verdict::kFails: hj["holds"] = false; break;
        case Verdict::kUnknown: hj["holds"] = "unknown"; break;
      }
      hyps.push_back(hj);
    }
    cj["hypotheses"] = hyps;
    cj["verdict"] = conclusion_str(c.conclusion);
    cj["caveats"] = c.caveats;
    decisions.push_back(cj);
  }
  j["decisions"] = decisions;
  return j.dump(2) + "\n";
}

}  // namespace polyfold
