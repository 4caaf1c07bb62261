#include "polyfold/decisions.hpp"

#include <algorithm>

#include "polyfold/monodromy.hpp"

namespace polyfold {

namespace {

// Registry of the mathematical results the engine cites.  Each entry is a
// self-contained statement of the criterion the verdict relies on.
constexpr const char* kRefThickening =
    "thickening theorem: an orientation-compatible simple polyhedron is the "
    "quotient of a map factoring through a compact connected orientable "
    "3-manifold with nonempty boundary";
constexpr const char* kRefSpecialGeneric =
    "existence corollary: the 3-dimensional thickening immerses into 3-space, "
    "so the source manifold admits a special generic map into 3-space";
constexpr const char* kRefPlaneMap =
    "plane-map addendum: composing with a projection to the plane yields a "
    "normal spherical fold map whose quotient is orientation-compatible";
constexpr const char* kRefDimensionFive =
    "dimension-5 extension: the construction applies verbatim to "
    "5-dimensional source manifolds";
constexpr const char* kRefTransport =
    "invariant transport: the quotient map induces isomorphisms on homology "
    "and homotopy in degrees up to m-3; in dimension 4 the quotient's second "
    "homology is free of half the source rank";
constexpr const char* kRefSphere =
    "sphere recognition: a simply connected quotient with vanishing second "
    "homology forces the source to be a homotopy sphere; standard in "
    "dimensions 5 and 6, and standard-or-S4 in dimension 4 under "
    "orientation-compatibility";
constexpr const char* kRefDiscCollapse =
    "disc collapse criterion: with no double points, a simply connected "
    "quotient with vanishing second homology collapses to the disc; the "
    "source is a homotopy sphere (standard in dimensions 4-6, S3 exactly in "
    "dimension 3)";
constexpr const char* kRefHighDimCaveat =
    "the construction does not extend beyond source dimension 5: in "
    "dimension 7 some exotic spheres admit no special generic map into "
    "3-space";
constexpr const char* kRefWordingCaveat =
    "hypothesis wording: the compatibility condition is read as "
    "orientation-compatibility of the prong bundles";

Verdict from_bool(bool b) { return b ? Verdict::kHolds : Verdict::kFails; }

Verdict from_pi1(Pi1Status s) {
  switch (s) {
    case Pi1Status::kTrivial: return Verdict::kHolds;
    case Pi1Status::kNontrivial: return Verdict::kFails;
    case Pi1Status::kUnknown: return Verdict::kUnknown;
  }
  return Verdict::kUnknown;
}



Claim make_claim(std::string statement, std::string ref,
                 std::vector<Hypothesis> hyps, std::vector<std::string> caveats = {}) {
  Claim c;
  c.statement = std::move(statement);
  c.paper_ref = std::move(ref);
  c.hypotheses = std::move(hyps);
  c.conclusion = conclude_hypotheses(c.hypotheses);
  c.caveats = std::move(caveats);
  return c;
}

struct Analysis {
  bool valid = false;
  HomologyResult h;
  Pi1Status pi1 = Pi1Status::kUnknown;
  bool compatible = false;
  int double_points = 0;
};

Analysis analyze_for_decisions(const SimplePolyhedron& p) {
  Analysis a;
  ValidationReport rep = validate(p);
  if (!rep.ok) {
    throw Error(ErrorCode::kInvalidInput, "decision engine: invalid polyhedron");
  }
  a.valid = true;
  auto k = triangulate(p);
  a.h = homology(chain_complex(k));
  a.pi1 = pi1_presentation(k).status;
  a.compatible = check_compatibility(p).compatible;
  a.double_points = static_cast<int>(p.vertices.size());
  return a;
}

}  // namespace

Conclusion conclude_hypotheses(const std::vector<Hypothesis>& hyps) {
  bool any_unknown = false;
  bool any_fails = false;
  for (const auto& h : hyps) {
    if (h.verdict == Verdict::kUnknown) any_unknown = true;
    if (h.verdict == Verdict::kFails) any_fails = true;
  }
  if (any_unknown) return Conclusion::kUnknown;
  return any_fails ? Conclusion::kNotApplicable : Conclusion::kAffirmed;
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

const char* conclusion_str(Conclusion c) {
  switch (c) {
    case Conclusion::kAffirmed: return "affirmed";
    case Conclusion::kNotApplicable: return "not-applicable";
    case Conclusion::kUnknown: return "unknown";
  }
  return "unknown";
}

SourceManifoldReport source_invariants(const SimplePolyhedron& p, int m) {
  if (m < 3) {
    throw Error(ErrorCode::kInvalidInput,
                "source_invariants: source dimension must be at least 3");
  }
  Analysis a = analyze_for_decisions(p);
  SourceManifoldReport rep;
  rep.dimension = m;
  rep.h1 = a.h.at(1);
  rep.pi1 = a.pi1;
  rep.transported_max_degree = m - 3;
  rep.h2_free = a.h.at(2).free_abelian();
  if (m == 4) {
    if (!rep.h2_free) {
      throw Error(ErrorCode::kTorsionAnomaly,
                  "source_invariants: degree-2 homology of the quotient has "
                  "torsion; the input cannot be a quotient of the stated kind");
    }
    rep.rank_h2_source = 2 * a.h.at(2).rank;
  }
  return rep;
}

DecisionReport special_generic_decision(const SimplePolyhedron& p, int m) {
  Analysis a = analyze_for_decisions(p);
  DecisionReport out;
  if (m == 4 || m == 5) {
    std::vector<Hypothesis> hyps{
        {"valid pseudo quotient encoding", from_bool(a.valid)},
        {"orientation-compatible prong bundles", from_bool(a.compatible)},
    };
    const char* how = (m == 4) ? kRefThickening : kRefDimensionFive;
    std::vector<std::string> caveats{kRefWordingCaveat};
    out.claims.push_back(make_claim(
        "there is a compact connected orientable 3-dimensional thickening "
        "with nonempty boundary and a projection onto the polyhedron",
        how, hyps, caveats));
    out.claims.push_back(make_claim(
        "the source " + std::to_string(m) +
            "-manifold admits a special generic map into 3-space",
        kRefSpecialGeneric, hyps));
    out.claims.push_back(make_claim(
        "composing with a projection gives a normal spherical fold map into "
        "the plane with orientation-compatible quotient",
        kRefPlaneMap, hyps));
  } else {
    std::vector<Hypothesis> hyps{
        {"source dimension is 4 or 5", Verdict::kFails},
    };
    out.claims.push_back(make_claim(
        "the source " + std::to_string(m) +
            "-manifold admits a special generic map into 3-space",
        kRefSpecialGeneric, hyps, {kRefHighDimCaveat}));
  }
  return out;
}

DecisionReport sphere_recognition(const SimplePolyhedron& p, int m) {
  Analysis a = analyze_for_decisions(p);
  DecisionReport out;

  // recognition through the transported invariants
  {
    std::vector<Hypothesis> hyps{
        {"quotient is simply connected", from_pi1(a.pi1)},
        {"second homology of the quotient vanishes", from_bool(a.h.at(2).trivial())},
        {"source dimension exceeds 3", from_bool(m > 3)},
    };
    out.claims.push_back(
        make_claim("the source manifold is a homotopy sphere", kRefSphere, hyps));
    if (m == 5 || m == 6) {
      out.claims.push_back(make_claim(
          "the source manifold is diffeomorphic to the standard sphere",
          kRefSphere, hyps));
    }
    if (m == 4) {
      auto hyps4 = hyps;
      hyps4.push_back(
          {"orientation-compatible prong bundles", from_bool(a.compatible)});
      out.claims.push_back(make_claim(
          "the source manifold is a standard sphere or S^4", kRefSphere, hyps4));
    }
  }

  // recognition through collapsibility of the quotient
  {
    bool no_double_points = a.double_points == 0;
    if (m >= 4) {
      std::vector<Hypothesis> hyps{
          {"singular set has no double points", from_bool(no_double_points)},
          {"source manifold is simply connected (via the quotient)",
           from_pi1(a.pi1)},
          {"second homology of the quotient vanishes",
           from_bool(a.h.at(2).trivial())},
      };
      Claim c = make_claim(
          "the quotient collapses to the 2-disc and the source manifold is a "
          "homotopy sphere" +
              std::string(m <= 6 ? "; in this dimension it is the standard sphere"
                                 : ""),
          kRefDiscCollapse, hyps);
      if (c.conclusion == Conclusion::kAffirmed) {
        CollapseBudget budget;
        auto res = collapse_search(triangulate(p), CollapseTarget::kDisc, budget);
        c.caveats.push_back(
            std::string("collapse search corroboration: ") +
            (res.outcome == CollapseOutcome::kCollapsed
                 ? "a collapse to the disc was found"
                 : (res.outcome == CollapseOutcome::kProvenImpossible
                        ? "no collapse exists for this triangulation"
                        : "no collapse found within budget")));
      }
      out.claims.push_back(std::move(c));
    } else if (m == 3) {
      std::vector<Hypothesis> hyps{
          {"singular set has no double points", from_bool(no_double_points)},
          {"quotient is simply connected", from_pi1(a.pi1)},
          {"second homology of the quotient vanishes",
           from_bool(a.h.at(2).trivial())},
      };
      out.claims.push_back(make_claim(
          "the source manifold is diffeomorphic to S^3", kRefDiscCollapse, hyps));
    }
  }
  return out;
}

AnalysisBundle analyze(const SimplePolyhedron& p, int m, int simplify_budget) {
  ValidationReport rep = validate(p);
  if (!rep.ok) {
    throw Error(ErrorCode::kInvalidInput, "analyze: polyhedron fails validation");
  }
  AnalysisBundle b;
  b.polyhedron = p.name;
  b.euler = euler_characteristic(p);
  auto k = triangulate(p);
  b.homology = homology(chain_complex(k));
  b.pi1 = pi1_presentation(k);
  if (simplify_budget != 100000) {
    Presentation raw = b.pi1;
    raw.status = Pi1Status::kUnknown;
    b.pi1 = simplify_presentation(std::move(raw), simplify_budget);
  }
  b.compatible = check_compatibility(p).compatible;
  b.double_points = static_cast<int>(p.vertices.size());
  b.source = source_invariants(p, m);
  auto sg = special_generic_decision(p, m);
  auto sr = sphere_recognition(p, m);
  b.decisions = std::move(sg.claims);
  for (auto& c : sr.claims) b.decisions.push_back(std::move(c));
  return b;
}

}  // namespace polyfold
