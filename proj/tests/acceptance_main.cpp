// Acceptance suite: one pass/fail line per criterion.
//
// Every tolerance is exact-integer; the suite exercises the full pipeline on
// the built-in catalog plus randomized cross-checks against independent
// oracles.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "polyfold/codec.hpp"
#include "polyfold/complexes.hpp"
#include "polyfold/decisions.hpp"
#include "polyfold/model.hpp"
#include "polyfold/monodromy.hpp"
#include "polyfold/thicken.hpp"
#include "snf_oracle.hpp"

using namespace polyfold;

namespace {

int g_failures = 0;

struct Criterion {
  int number;
  std::string name;
  std::vector<std::string> problems;
  std::chrono::steady_clock::time_point start;

  Criterion(int n, std::string nm)
      : number(n), name(std::move(nm)), start(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (problems.empty()) {
      std::printf("PASS  criterion %d: %s (%lld ms)\n", number, name.c_str(),
                  (long long)ms);
    } else {
      ++g_failures;
      std::printf("FAIL  criterion %d: %s (%lld ms)\n", number, name.c_str(),
                  (long long)ms);
      for (const auto& p : problems) std::printf("      - %s\n", p.c_str());
    }
    std::fflush(stdout);
  }
};

GroupSummary Z(int rank) {
  GroupSummary g;
  g.rank = rank;
  return g;
}

SimplePolyhedron annulus_only() {
  SimplePolyhedron p;
  p.name = "annulus";
  p.free_circles = {"f0", "f1"};
  Region r;
  r.id = "r0";
  r.genus = 0;
  r.orientable = true;
  r.boundary.push_back(FreeCircleRef{"f0"});
  r.boundary.push_back(FreeCircleRef{"f1"});
  p.regions.push_back(r);
  return p;
}

void criterion1() {
  Criterion c(1, "catalog integrity");
  auto names = catalog_names();
  c.require(names.size() == 7, "catalog must have 7 entries");
  for (const auto& name : names) {
    auto rep = validate(catalog(name));
    c.require(rep.ok && rep.errors.empty(), name + " must validate with 0 errors");
  }
  auto bh = validate(catalog("bing_house"));
  c.require(bh.double_points == 2, "bing_house must report exactly 2 double points");
}

void criterion2() {
  Criterion c(2, "compatibility with witness and forest independence");
  for (const char* name :
       {"disc", "round_bundle", "round_sum2", "bing_house", "two_crossings"}) {
    auto rep = check_compatibility(catalog(name));
    c.require(rep.compatible, std::string(name) + " must be compatible");
  }
  auto inc = check_compatibility(catalog("incompatible_circle"));
  c.require(!inc.compatible, "incompatible_circle must be incompatible");
  c.require(inc.has_witness, "incompatible_circle must carry a witness loop");
  if (inc.has_witness) {
    auto g = singular_graph(catalog("incompatible_circle"));
    c.require(loop_monodromy(g, inc.witness).sign() == -1,
              "witness loop must have reversing monodromy");
  }
  for (const char* name : {"bing_house", "incompatible_circle", "suzuoka"}) {
    auto p = catalog(name);
    auto g = singular_graph(p);
    bool expected = check_compatibility(p).compatible;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      bool all_even = true;
      for (const auto& w : cycle_basis(g, seed)) {
        if (loop_monodromy(g, w).sign() < 0) all_even = false;
      }
      if (all_even != expected) {
        c.require(false, std::string(name) + " verdict changed under forest seed " +
                             std::to_string(seed));
        break;
      }
    }
  }
}

void criterion3() {
  Criterion c(3, "homology of the catalog and Smith oracle cross-check");
  auto H = [](const std::string& name) {
    return homology(chain_complex(triangulate(catalog(name))));
  };
  auto expect = [&c, &H](const std::string& name, const GroupSummary& h1,
                         const GroupSummary& h2) {
    auto h = H(name);
    c.require(h.at(0) == Z(1), name + ": H0 must be Z");
    c.require(h.at(1) == h1, name + ": H1 mismatch (got " + h.at(1).str() + ")");
    c.require(h.at(2) == h2, name + ": H2 mismatch (got " + h.at(2).str() + ")");
  };
  expect("disc", Z(0), Z(0));
  expect("bing_house", Z(0), Z(0));
  expect("round_bundle", Z(0), Z(1));
  expect("round_sum2", Z(0), Z(2));

  std::uint64_t state = 20260808;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  int mismatches = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int rows = 1 + (int)(next() % 5);
    int cols = 1 + (int)(next() % 5);
    std::vector<std::vector<std::int64_t>> m((size_t)rows,
                                             std::vector<std::int64_t>((size_t)cols));
    for (auto& row : m) {
      for (auto& x : row) x = (std::int64_t)(next() % 19) - 9;
    }
    auto a = smith_normal_form(m);
    auto b = oracle::snf_oracle(m);
    if (a.rank != b.rank || a.factors != b.factors) ++mismatches;
  }
  c.require(mismatches == 0, "Smith normal form disagreed with the minor-gcd oracle " +
                                 std::to_string(mismatches) + " times");
}

void criterion4() {
  Criterion c(4, "rank transport to the source manifold");
  auto rb = source_invariants(catalog("round_bundle"), 4);
  c.require(rb.rank_h2_source.has_value() && *rb.rank_h2_source == 2,
            "round_bundle: rank H2 of the source must be 2");
  auto rs = source_invariants(catalog("round_sum2"), 4);
  c.require(rs.rank_h2_source.has_value() && *rs.rank_h2_source == 4,
            "round_sum2: rank H2 of the source must be 4");
}

void criterion5() {
  Criterion c(5, "thickening construction on every compatible entry");
  for (const auto& name : catalog_names()) {
    auto p = catalog(name);
    if (!check_compatibility(p).compatible) continue;
    auto t = thicken(p);
    auto rep = verify_manifold(t);
    c.require(rep.is_manifold, name + ": output must be a manifold");
    c.require(rep.orientable, name + ": output must be orientable");
    c.require(rep.connected, name + ": output must be connected");
    c.require(rep.boundary_nonempty(), name + ": boundary must be nonempty");
    int chi_p = euler_characteristic(p);
    c.require(euler3(t) == chi_p, name + ": euler of thickening must equal euler of input");
    c.require(rep.boundary_euler_total() == 2 * chi_p,
              name + ": boundary euler must be twice the thickening euler");
    auto h3 = homology3(t);
    auto h2 = homology(chain_complex(triangulate(p)));
    for (size_t k = 0; k <= 2; ++k) {
      c.require(h3.at(k) == h2.at(k),
                name + ": homology transfer fails in degree " + std::to_string(k));
    }
    c.require(h3.at(3).trivial(), name + ": H3 must vanish");
    auto wit = projection_witness(t, p);
    c.require(wit.cellular, name + ": projection witness must be cellular");
    c.require(wit.covering, name + ": projection witness must cover all cells");
  }
}

void criterion6() {
  Criterion c(6, "thickening of the disc is a homology 3-ball");
  auto t = thicken(catalog("disc"));
  auto rep = verify_manifold(t);
  auto h = homology3(t);
  c.require(h.at(0) == Z(1) && h.at(1).trivial() && h.at(2).trivial() &&
                h.at(3).trivial(),
            "homology must be (Z,0,0,0)");
  c.require(rep.boundary.size() == 1, "boundary must have one component");
  if (rep.boundary.size() == 1) {
    c.require(rep.boundary[0].euler == 2, "boundary euler must be 2");
    c.require(rep.boundary[0].orientable, "boundary must be orientable");
  }
}

void criterion7() {
  Criterion c(7, "hypothesis gating");
#ifdef POLYFOLD_CLI_PATH
  {
    std::string out = std::string("/tmp/polyfold_acceptance_gate.tri3");
    std::remove(out.c_str());
    std::string cmd = std::string(POLYFOLD_CLI_PATH) +
                      " thicken catalog:incompatible_circle -o " + out +
                      " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    c.require(code == 2, "cli thicken on incompatible input must exit with code 2");
    std::FILE* f = std::fopen(out.c_str(), "rb");
    c.require(f == nullptr, "cli thicken on incompatible input must write nothing");
    if (f != nullptr) std::fclose(f);
  }
#endif
  {
    auto rep = sphere_recognition(catalog("bing_house"), 4);
    bool affirmed = false;
    for (const auto& cl : rep.claims) {
      if (cl.statement.find("a standard sphere or S^4") != std::string::npos &&
          cl.conclusion == Conclusion::kAffirmed) {
        affirmed = true;
      }
    }
    c.require(affirmed, "sphere recognition must affirm 'a standard sphere or S^4' "
                        "for bing_house in dimension 4");
  }
  {
    auto rep = special_generic_decision(catalog("bing_house"), 5);
    bool affirmed = false;
    for (const auto& cl : rep.claims) {
      if (cl.statement.find("special generic map") != std::string::npos &&
          cl.conclusion == Conclusion::kAffirmed) {
        affirmed = true;
      }
    }
    c.require(affirmed, "dimension-5 existence must be affirmed for bing_house");
  }
  for (const auto& name : catalog_names()) {
    auto rep = special_generic_decision(catalog(name), 7);
    for (const auto& cl : rep.claims) {
      c.require(cl.conclusion != Conclusion::kAffirmed,
                name + ": no dimension-7 claim may be affirmed");
    }
  }
}

void criterion8() {
  Criterion c(8, "collapse engine");
  CollapseBudget budget;
  budget.seed = 1;
  auto disc = collapse_search(triangulate(catalog("disc")), CollapseTarget::kPoint,
                              budget);
  c.require(disc.outcome == CollapseOutcome::kCollapsed, "disc must collapse to a point");
  if (disc.outcome == CollapseOutcome::kCollapsed) {
    auto replay = replay_collapse(triangulate(catalog("disc")), disc.sequence);
    c.require(replay.has_value() && replay->vertices == 1 && replay->edges == 0 &&
                  replay->triangles == 0,
              "replaying the disc collapse must reproduce the residual point");
  }
  auto ann = collapse_search(triangulate(annulus_only()), CollapseTarget::kPoint,
                             budget);
  c.require(ann.outcome == CollapseOutcome::kProvenImpossible,
            "annulus target-point must be proven impossible");
  auto bh = collapse_search(triangulate(catalog("bing_house")), CollapseTarget::kPoint,
                            budget);
  c.require(bh.outcome != CollapseOutcome::kCollapsed,
            "bing_house must not collapse within the default budget");
  c.require(bh.outcome == CollapseOutcome::kProvenImpossible,
            "bing_house collapse must be proven impossible (no free face exists)");
  // determinism given seed
  auto again = collapse_search(triangulate(catalog("disc")), CollapseTarget::kPoint,
                               budget);
  c.require(again.outcome == disc.outcome &&
                again.sequence.size() == disc.sequence.size(),
            "collapse must be deterministic for a fixed seed");
}

void criterion9() {
  Criterion c(9, "format round-trips and parser robustness");
  for (const auto& name : catalog_names()) {
    auto p = catalog(name);
    std::string text = emit_spoly(p);
    auto parsed = parse_spoly(text);
    c.require(parsed.ok, name + ": emitted text must parse");
    if (parsed.ok) {
      c.require(structurally_equal(parsed.polyhedron, p),
                name + ": round trip must reproduce the polyhedron");
      c.require(emit_spoly(parsed.polyhedron) == text,
                name + ": emission must be byte-stable");
    }
    if (check_compatibility(p).compatible) {
      auto t = thicken(p);
      // involutivity: every face appears in at most one gluing, both sides
      std::set<std::pair<int, int>> used;
      bool involutive = true;
      for (const auto& g : t.gluings) {
        if (!used.insert({g.tet_a, g.face_a}).second) involutive = false;
        if (!used.insert({g.tet_b, g.face_b}).second) involutive = false;
      }
      c.require(involutive, name + ": tri3 gluings must be involutive");
      auto reparsed = parse_tri3(emit_tri3(t));
      c.require(reparsed.ok, name + ": tri3 output must parse");
    }
  }
  // fuzzing: 100000 random inputs, no crash
  std::uint64_t state = 0xabcdef1234567ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int iter = 0; iter < 100000; ++iter) {
    std::string text;
    size_t len = next() % 160;
    for (size_t i = 0; i < len; ++i) {
      std::uint64_t r = next();
      char ch;
      switch (r % 8) {
        case 0: ch = ' '; break;
        case 1: ch = '\n'; break;
        case 2: ch = (char)('0' + (r >> 8) % 10); break;
        case 3: ch = (char)('a' + (r >> 8) % 26); break;
        case 4: ch = '>'; break;
        case 5: ch = '.'; break;
        case 6: ch = '('; break;
        default: ch = (char)((r >> 8) & 0xff); break;
      }
      text.push_back(ch);
    }
    (void)parse_spoly(text);
  }
  c.require(true, "");  // reaching here means the fuzz loop did not crash
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
