#include "polyfold/model.hpp"

#include <algorithm>

namespace polyfold {

std::optional<SlotPerm> SlotPerm::from_digits(const std::string& digits) {
  if (digits.size() != 3) return std::nullopt;
  SlotPerm p;
  std::array<bool, 3> seen{false, false, false};
  for (int i = 0; i < 3; ++i) {
    char c = digits[static_cast<size_t>(i)];
    if (c < '0' || c > '2') return std::nullopt;
    int v = c - '0';
    if (seen[static_cast<size_t>(v)]) return std::nullopt;
    seen[static_cast<size_t>(v)] = true;
    p.image[static_cast<size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return p;
}

SlotPerm SlotPerm::then(const SlotPerm& next) const {
  SlotPerm r;
  for (int i = 0; i < 3; ++i) {
    r.image[static_cast<size_t>(i)] = next.image[image[static_cast<size_t>(i)]];
  }
  return r;
}

SlotPerm SlotPerm::inverse() const {
  SlotPerm r;
  for (int i = 0; i < 3; ++i) {
    r.image[image[static_cast<size_t>(i)]] = static_cast<std::uint8_t>(i);
  }
  return r;
}

int SlotPerm::sign() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (image[static_cast<size_t>(i)] > image[static_cast<size_t>(j)]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string SlotPerm::digits() const {
  std::string s(3, '0');
  for (int i = 0; i < 3; ++i) {
    s[static_cast<size_t>(i)] = static_cast<char>('0' + image[static_cast<size_t>(i)]);
  }
  return s;
}

const TripleEdge* SimplePolyhedron::find_edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const DoublePoint* SimplePolyhedron::find_vertex(const std::string& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const Region* SimplePolyhedron::find_region(const std::string& id) const {
  for (const auto& r : regions) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace polyfold
