#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>

#include "polyfold/codec.hpp"
#include "polyfold/model.hpp"

using namespace polyfold;

TEST_CASE("round-trip over the whole catalog") {
  for (const auto& name : catalog_names()) {
    auto p = catalog(name);
    std::string text = emit_spoly(p);
    auto parsed = parse_spoly(text);
    for (const auto& e : parsed.errors) {
      INFO(name, " line ", e.line, ": ", e.code, " ", e.message);
      CHECK(false);
    }
    REQUIRE(parsed.ok);
    CHECK(structurally_equal(parsed.polyhedron, p));
    // emission is canonical: re-emission is byte-identical
    CHECK(emit_spoly(parsed.polyhedron) == text);
  }
}

TEST_CASE("disc text contains exactly one region and one free boundary") {
  std::string text = emit_spoly(catalog("disc"));
  size_t regions = 0, frees = 0, pos = 0;
  while ((pos = text.find("region ", pos)) != std::string::npos) {
    ++regions;
    pos += 7;
  }
  pos = 0;
  while ((pos = text.find("boundary free ", pos)) != std::string::npos) {
    ++frees;
    pos += 14;
  }
  CHECK(regions == 1);
  CHECK(frees == 1);
}

TEST_CASE("bing_house text declares exactly 2 vertex lines") {
  std::string text = emit_spoly(catalog("bing_house"));
  size_t vertices = 0, pos = 0;
  while ((pos = text.find("vertex ", pos)) != std::string::npos) {
    ++vertices;
    pos += 7;
  }
  CHECK(vertices == 2);
}

TEST_CASE("dangling reference reported with its line") {
  std::string text =
      "polyhedron broken\n"
      "# comment line\n"
      "edge e0 interval ghost.0 ghost.1\n";
  auto parsed = parse_spoly(text);
  CHECK_FALSE(parsed.ok);
  bool found = false;
  for (const auto& e : parsed.errors) {
    if (e.code == "DANGLING_REFERENCE" && e.line == 3) found = true;
  }
  CHECK(found);
}

TEST_CASE("multiple errors are all reported") {
  std::string text =
      "polyhedron broken\n"
      "edge e0 circle ident 9xz\n"
      "region r0 genus -1 orientable maybe\n"
      "boundary attached zzz\n";
  auto parsed = parse_spoly(text);
  CHECK_FALSE(parsed.ok);
  CHECK(parsed.errors.size() >= 2);
}

TEST_CASE("structural equality ignores declaration order") {
  auto p = catalog("round_sum2");
  auto q = p;
  std::swap(q.regions[0], q.regions[3]);
  std::swap(q.edges[0], q.edges[1]);
  CHECK(structurally_equal(p, q));
  CHECK(emit_spoly(p) == emit_spoly(q));
}

TEST_CASE("parser survives random byte fuzzing") {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  int parsed_ok = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    std::string text;
    size_t len = next() % 300;
    for (size_t i = 0; i < len; ++i) {
      // mix of printable structure-ish bytes and arbitrary ones
      std::uint64_t r = next();
      char c;
      switch (r % 7) {
        case 0: c = ' '; break;
        case 1: c = '\n'; break;
        case 2: c = static_cast<char>('0' + (r >> 8) % 10); break;
        case 3: c = static_cast<char>('a' + (r >> 8) % 26); break;
        case 4: c = '>'; break;
        case 5: c = '.'; break;
        default: c = static_cast<char>((r >> 8) & 0xff); break;
      }
      text.push_back(c);
    }
    auto res = parse_spoly(text);
    if (res.ok) ++parsed_ok;
  }
  CHECK(parsed_ok >= 0);  // reaching here means no crash
}

TEST_CASE("canonical form is rotation-invariant, including passage starts") {
  auto p = catalog("bing_house");
  auto q = p;
  // rotate one attached word so it starts with a vertex passage
  for (auto& r : q.regions) {
    for (auto& bc : r.boundary) {
      auto* aw = std::get_if<AttachedWord>(&bc);
      if (aw == nullptr || aw->steps.size() < 4) continue;
      std::rotate(aw->steps.begin(), aw->steps.begin() + 1, aw->steps.end());
      CHECK(std::holds_alternative<VertexStep>(aw->steps[0]));
      goto rotated;
    }
  }
rotated:
  CHECK(validate(q).ok);
  CHECK(structurally_equal(p, q));
  CHECK(emit_spoly(p) == emit_spoly(q));
}
