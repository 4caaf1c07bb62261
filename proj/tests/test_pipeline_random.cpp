#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "polyfold/codec.hpp"
#include "polyfold/monodromy.hpp"
#include "polyfold/thicken.hpp"
#include "two_vertex.hpp"

using namespace polyfold;
using detail::ArcEnd;
using detail::TwoVertexSpec;
using detail::make_two_vertex;

namespace {

std::uint64_t xorshift(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

// A pseudo-random two-vertex polyhedron: every flank assignment yields a
// valid encoding, compatible or not.
SimplePolyhedron sample(std::uint64_t seed) {
  std::uint64_t state = seed * 0x9e3779b97f4a7c15ull + 1;
  bool loops_graph = xorshift(state) % 2 == 0;
  std::array<std::array<ArcEnd, 2>, 4> ends =
      loops_graph
          ? std::array<std::array<ArcEnd, 2>, 4>{{{{{0, 0}, {0, 1}}},
                                                   {{{1, 0}, {1, 1}}},
                                                   {{{0, 2}, {1, 2}}},
                                                   {{{0, 3}, {1, 3}}}}}
          : std::array<std::array<ArcEnd, 2>, 4>{{{{{0, 0}, {1, 0}}},
                                                   {{{0, 1}, {1, 1}}},
                                                   {{{0, 2}, {1, 2}}},
                                                   {{{0, 3}, {1, 3}}}}};
  TwoVertexSpec spec{"sample", ends, {}, {{{{{0, 1}, {2, 3}}}, {{{0, 1}, {2, 3}}}}}, -1};
  for (int arc = 0; arc < 4; ++arc) {
    for (int end = 0; end < 2; ++end) {
      int own = ends[(size_t)arc][(size_t)end].port;
      std::array<int, 3> others{};
      int k = 0;
      for (int p = 0; p < 4; ++p) {
        if (p != own) others[(size_t)k++] = p;
      }
      for (size_t i = 2; i > 0; --i) {
        std::swap(others[i], others[xorshift(state) % (i + 1)]);
      }
      spec.flank[(size_t)arc][(size_t)end] = others;
    }
  }
  auto p = make_two_vertex(spec);
  p.name = "sample" + std::to_string(seed);
  return p;
}

}  // namespace

TEST_CASE("pipeline invariants hold on sampled two-vertex polyhedra") {
  int compatibles = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto p = sample(seed);
    INFO("seed ", seed);
    auto rep = validate(p);
    REQUIRE(rep.ok);

    // euler characteristic: additive formula vs canonical triangulation
    auto k = triangulate(p);
    CHECK(euler_characteristic(p) == k.euler());

    // round trip
    auto parsed = parse_spoly(emit_spoly(p));
    REQUIRE(parsed.ok);
    CHECK(structurally_equal(parsed.polyhedron, p));

    // alternating sum of betti numbers matches euler
    auto h = homology(chain_complex(k));
    int alt = 0;
    for (size_t d = 0; d < h.groups.size(); ++d) {
      alt += (d % 2 == 0 ? 1 : -1) * h.groups[d].rank;
    }
    CHECK(alt == k.euler());

    auto mono = check_compatibility(p);
    if (!mono.compatible) {
      CHECK_THROWS_AS(thicken(p), Error);
      continue;
    }
    ++compatibles;
    auto t = thicken(p);
    auto vrep = verify_manifold(t);
    CHECK(vrep.is_manifold);
    CHECK(vrep.orientable);
    CHECK(vrep.connected);
    CHECK(euler3(t) == k.euler());
    CHECK(vrep.boundary_euler_total() == 2 * k.euler());
    auto h3 = homology3(t);
    for (size_t d = 0; d <= 2; ++d) CHECK(h3.at(d) == h.at(d));
    CHECK(h3.at(3).trivial());
    auto wit = projection_witness(t, p);
    CHECK(wit.cellular);
    CHECK(wit.covering);
  }
  // the sample is fixed, so this is stable: make sure both branches ran
  CHECK(compatibles >= 1);
  CHECK(compatibles <= 9);
}

TEST_CASE("mutation fuzzing of valid documents never crashes the parser") {
  std::string base = emit_spoly(catalog("bing_house"));
  std::uint64_t state = 4242;
  for (int iter = 0; iter < 3000; ++iter) {
    std::string text = base;
    int edits = 1 + (int)(xorshift(state) % 4);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      size_t pos = xorshift(state) % text.size();
      switch (xorshift(state) % 3) {
        case 0: text[pos] = (char)(xorshift(state) & 0xff); break;
        case 1: text.erase(pos, 1 + xorshift(state) % 5); break;
        default: text.insert(pos, 1, (char)('0' + xorshift(state) % 10)); break;
      }
    }
    auto res = parse_spoly(text);
    if (res.ok) {
      // mutated but still valid: the polyhedron must satisfy the validator
      CHECK(validate(res.polyhedron).ok);
    }
  }
}
