#pragma once
// Coloring of G(n,3,1) for n = 2^t via XOR difference classes: identify
// [n] with F_2^t through e <-> e-1, and color each triple {a,b,c} by the
// set {a^b, a^c, b^c}. The three differences XOR to zero, so classes are
// the (n-1)(n-2)/6 lines through the origin minus 0; triples sharing a
// class never meet in exactly one element.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "kneser/kneser_graph.hpp"

namespace kneser::boolean31 {

// Sorted XOR differences of a distinct triple, elements 1-based in [2^t].
inline std::array<uint16_t, 3> class_key(uint16_t a, uint16_t b, uint16_t c) {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("class_key: elements must be distinct");
  uint16_t x = (uint16_t)((a - 1) ^ (b - 1));
  uint16_t y = (uint16_t)((a - 1) ^ (c - 1));
  uint16_t z = (uint16_t)((b - 1) ^ (c - 1));
  std::array<uint16_t, 3> k{x, y, z};
  std::sort(k.begin(), k.end());
  return k;
}

inline std::array<uint16_t, 3> class_key(const graph::VertexSet& v) {
  if (v.size() != 3) throw std::invalid_argument("class_key: need exactly 3 elements");
  return class_key(v[0], v[1], v[2]);
}

// Proper coloring of G(2^t, 3, 1) with (n-1)(n-2)/6 colors, ids dense in
// lexicographic key order.
inline graph::Coloring color_g_n31(int t) {
  if (t < 2 || t > 8)
    throw std::invalid_argument("color_g_n31: t must be in [2,8], got " + std::to_string(t));
  const int n = 1 << t;
  graph::KneserGraph g(n, 3, 1, graph::Mode::Exact);
  graph::Coloring c(g, "boolean31", 0);

  // Keys are {x, y, x^y} with 0 < x < y; enumerate in lex order for dense ids.
  std::vector<std::array<uint16_t, 3>> keys;
  for (uint16_t x = 1; x < n; ++x)
    for (uint16_t y = (uint16_t)(x + 1); y < n; ++y) {
      uint16_t z = (uint16_t)(x ^ y);
      if (z > y) keys.push_back({x, y, z});
    }
  std::sort(keys.begin(), keys.end());

  g.for_each_vertex([&](uint64_t rank, const graph::VertexSet& v) {
    auto k = class_key(v);
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k)
      throw std::logic_error("color_g_n31: triple produced an unknown difference class");
    c.color[rank] = (int32_t)(it - keys.begin());
  });
  return c;
}

}  // namespace kneser::boolean31
