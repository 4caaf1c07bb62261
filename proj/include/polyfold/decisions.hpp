#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyfold/complexes.hpp"
#include "polyfold/model.hpp"

namespace polyfold {

// Derived invariants of the source manifold, transported through the
// quotient map.
struct SourceManifoldReport {
  int dimension = 4;
  GroupSummary h1;           // first homology of the quotient = of the source
  Pi1Status pi1 = Pi1Status::kUnknown;
  bool h2_free = true;       // second homology of the quotient is torsion-free
  std::optional<int> rank_h2_source;  // dimension 4 only: twice the quotient rank
  int transported_max_degree = 1;     // groups agree in degrees 0..m-3
};

enum class Verdict { kHolds, kFails, kUnknown };

struct Hypothesis {
  std::string name;
  Verdict verdict = Verdict::kUnknown;
};

enum class Conclusion { kAffirmed, kNotApplicable, kUnknown };

struct Claim {
  std::string statement;
  std::string paper_ref;  // registry string of the supporting result
  std::vector<Hypothesis> hypotheses;
  Conclusion conclusion = Conclusion::kUnknown;
  std::vector<std::string> caveats;
};

struct DecisionReport {
  std::vector<Claim> claims;
};

// Conjunction logic shared by every claim: affirmed only when every
// hypothesis holds; any unknown hypothesis makes the verdict unknown.
Conclusion conclude_hypotheses(const std::vector<Hypothesis>& hyps);

// Throws Error(kInvalidInput) on invalid input or m < 3.  For m = 4, torsion
// in degree-2 homology contradicts the structure of these quotient spaces
// and raises Error(kTorsionAnomaly).
SourceManifoldReport source_invariants(const SimplePolyhedron& p, int m);

DecisionReport special_generic_decision(const SimplePolyhedron& p, int m);
DecisionReport sphere_recognition(const SimplePolyhedron& p, int m);

const char* verdict_str(Verdict v);
const char* conclusion_str(Conclusion c);

// Everything the analyze pipeline reports for one polyhedron.
struct AnalysisBundle {
  std::string polyhedron;
  int euler = 0;
  HomologyResult homology;  // of the quotient, degrees 0..2
  Presentation pi1;
  bool compatible = false;
  int double_points = 0;
  SourceManifoldReport source;
  std::vector<Claim> decisions;
};

// Runs the full pipeline: homology, fundamental group, compatibility,
// transported invariants and both decision operations.  The budget bounds
// presentation simplification.
AnalysisBundle analyze(const SimplePolyhedron& p, int m, int simplify_budget = 100000);

}  // namespace polyfold
