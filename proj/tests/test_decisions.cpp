#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "polyfold/codec.hpp"
#include "polyfold/decisions.hpp"

using namespace polyfold;

namespace {

const Claim* find_claim(const DecisionReport& r, const std::string& needle) {
  for (const auto& c : r.claims) {
    if (c.statement.find(needle) != std::string::npos) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("source invariants transport ranks") {
  auto disc = source_invariants(catalog("disc"), 4);
  CHECK(disc.pi1 == Pi1Status::kTrivial);
  REQUIRE(disc.rank_h2_source.has_value());
  CHECK(*disc.rank_h2_source == 0);

  auto rb = source_invariants(catalog("round_bundle"), 4);
  CHECK(rb.h1.trivial());
  REQUIRE(rb.rank_h2_source.has_value());
  CHECK(*rb.rank_h2_source == 2);

  auto rs = source_invariants(catalog("round_sum2"), 4);
  REQUIRE(rs.rank_h2_source.has_value());
  CHECK(*rs.rank_h2_source == 4);

  auto sz = source_invariants(catalog("suzuoka"), 4);
  REQUIRE(sz.rank_h2_source.has_value());
  CHECK(*sz.rank_h2_source == 2);

  auto high = source_invariants(catalog("disc"), 6);
  CHECK_FALSE(high.rank_h2_source.has_value());
  CHECK(high.transported_max_degree == 3);

  CHECK_THROWS_AS(source_invariants(catalog("disc"), 2), Error);
}

TEST_CASE("special generic decision by dimension") {
  auto d4 = special_generic_decision(catalog("disc"), 4);
  auto* c4 = find_claim(d4, "special generic map");
  REQUIRE(c4 != nullptr);
  CHECK(c4->conclusion == Conclusion::kAffirmed);

  auto incompat = special_generic_decision(catalog("incompatible_circle"), 4);
  auto* ci = find_claim(incompat, "special generic map");
  REQUIRE(ci != nullptr);
  CHECK(ci->conclusion == Conclusion::kNotApplicable);

  auto d5 = special_generic_decision(catalog("bing_house"), 5);
  auto* c5 = find_claim(d5, "special generic map");
  REQUIRE(c5 != nullptr);
  CHECK(c5->conclusion == Conclusion::kAffirmed);

  // never affirmed in dimension 7, for any catalog entry
  for (const auto& name : catalog_names()) {
    auto d7 = special_generic_decision(catalog(name), 7);
    for (const auto& c : d7.claims) {
      CHECK(c.conclusion != Conclusion::kAffirmed);
    }
  }
}

TEST_CASE("sphere recognition") {
  auto bh4 = sphere_recognition(catalog("bing_house"), 4);
  auto* s4 = find_claim(bh4, "standard sphere or S^4");
  REQUIRE(s4 != nullptr);
  CHECK(s4->conclusion == Conclusion::kAffirmed);

  auto rb = sphere_recognition(catalog("round_bundle"), 4);
  auto* hs = find_claim(rb, "homotopy sphere");
  REQUIRE(hs != nullptr);
  CHECK(hs->conclusion == Conclusion::kNotApplicable);

  // disc in dimension 3: recognized as S^3 through the collapse criterion
  auto d3 = sphere_recognition(catalog("disc"), 3);
  auto* s3 = find_claim(d3, "diffeomorphic to S^3");
  REQUIRE(s3 != nullptr);
  CHECK(s3->conclusion == Conclusion::kAffirmed);

  // bing_house has double points: the collapse route does not apply
  auto bh = sphere_recognition(catalog("bing_house"), 4);
  auto* col = find_claim(bh, "collapses to the 2-disc");
  REQUIRE(col != nullptr);
  CHECK(col->conclusion == Conclusion::kNotApplicable);

  // disc in dimension 4: the collapse route applies and is corroborated
  auto d4 = sphere_recognition(catalog("disc"), 4);
  auto* col4 = find_claim(d4, "collapses to the 2-disc");
  REQUIRE(col4 != nullptr);
  CHECK(col4->conclusion == Conclusion::kAffirmed);
  bool corroborated = false;
  for (const auto& cav : col4->caveats) {
    if (cav.find("collapse to the disc was found") != std::string::npos) {
      corroborated = true;
    }
  }
  CHECK(corroborated);
}

TEST_CASE("affirmed claims carry nonempty references") {
  for (const auto& name : catalog_names()) {
    for (int m : {3, 4, 5, 6, 7}) {
      auto a = special_generic_decision(catalog(name), m);
      auto b = sphere_recognition(catalog(name), m);
      for (const auto* rep : {&a, &b}) {
        for (const auto& c : rep->claims) {
          if (c.conclusion == Conclusion::kAffirmed) {
            CHECK_FALSE(c.paper_ref.empty());
          }
        }
      }
    }
  }
}

TEST_CASE("hypothesis logic is a pure conjunction") {
  // strengthening a failing hypothesis to holding can only move the verdict
  // toward affirmed; no combination yields affirmed with a failing hypothesis
  for (const auto& name : catalog_names()) {
    auto r = sphere_recognition(catalog(name), 4);
    for (const auto& c : r.claims) {
      bool all_hold = true;
      bool any_unknown = false;
      for (const auto& h : c.hypotheses) {
        if (h.verdict != Verdict::kHolds) all_hold = false;
        if (h.verdict == Verdict::kUnknown) any_unknown = true;
      }
      if (c.conclusion == Conclusion::kAffirmed) CHECK(all_hold);
      if (any_unknown) CHECK(c.conclusion == Conclusion::kUnknown);
    }
  }
}

TEST_CASE("JSON report schema") {
  auto bundle = analyze(catalog("bing_house"), 4);
  std::string text = emit_report_json(bundle);
  auto j = nlohmann::json::parse(text);
  CHECK(j["polyhedron"] == "bing_house");
  CHECK(j["euler"] == 1);
  CHECK(j["compatible"] == true);
  CHECK(j["double_points"] == 2);
  CHECK(j["homology"]["H1"]["rank"] == 0);
  CHECK(j["homology"]["H2"]["rank"] == 0);
  CHECK(j["homology"]["H2"]["torsion"].empty());
  CHECK(j["pi1"]["status"] == "trivial");
  bool affirmed_sphere = false;
  for (const auto& d : j["decisions"]) {
    if (d["claim"].get<std::string>().find("standard sphere or S^4") !=
            std::string::npos &&
        d["verdict"] == "affirmed") {
      affirmed_sphere = true;
    }
  }
  CHECK(affirmed_sphere);

  auto disc = analyze(catalog("disc"), 4);
  auto jd = nlohmann::json::parse(emit_report_json(disc));
  CHECK(jd["compatible"] == true);
  CHECK(jd["double_points"] == 0);

  auto inc = analyze(catalog("incompatible_circle"), 4);
  auto ji = nlohmann::json::parse(emit_report_json(inc));
  CHECK(ji["compatible"] == false);
}

TEST_CASE("conclusion logic: unknown propagates, conjunction is pure") {
  using V = Verdict;
  auto C = [](std::vector<Verdict> vs) {
    std::vector<Hypothesis> hyps;
    for (auto v : vs) hyps.push_back({"h", v});
    return conclude_hypotheses(hyps);
  };
  CHECK(C({V::kHolds, V::kHolds}) == Conclusion::kAffirmed);
  CHECK(C({V::kHolds, V::kFails}) == Conclusion::kNotApplicable);
  CHECK(C({V::kHolds, V::kUnknown}) == Conclusion::kUnknown);
  CHECK(C({V::kFails, V::kUnknown}) == Conclusion::kUnknown);
  CHECK(C({}) == Conclusion::kAffirmed);
  // monotonicity: upgrading any single verdict never moves affirmed away
  std::vector<Verdict> base{V::kHolds, V::kFails, V::kHolds};
  auto before = C(base);
  base[1] = V::kHolds;
  auto after = C(base);
  CHECK(after == Conclusion::kAffirmed);
  CHECK(before == Conclusion::kNotApplicable);
}

TEST_CASE("tiny simplification budget degrades pi1 to unknown, never to wrong") {
  auto bundle = analyze(catalog("bing_house"), 4, 2);
  CHECK(bundle.pi1.status != Pi1Status::kNontrivial);
  // with the default budget the status is trivial and recognition affirms
  auto full = analyze(catalog("bing_house"), 4);
  CHECK(full.pi1.status == Pi1Status::kTrivial);
}
