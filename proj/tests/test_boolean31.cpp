#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "kneser/boolean31.hpp"
#include "kneser/kneser_graph.hpp"
#include "kneser/rng.hpp"

using namespace kneser;
using namespace kneser::boolean31;
using kneser::graph::KneserGraph;
using kneser::graph::Mode;
using kneser::graph::VertexSet;

TEST_CASE("class keys are the sorted pairwise xor pattern") {
  // oracle: independent recomputation over 0-based labels
  SplitMix64 rng{31};
  const int t = 5, n = 1 << t;
  for (int trial = 0; trial < 500; ++trial) {
    uint16_t a = (uint16_t)(1 + rng.next_below(n));
    uint16_t b = (uint16_t)(1 + rng.next_below(n));
    uint16_t c = (uint16_t)(1 + rng.next_below(n));
    if (a == b || a == c || b == c) continue;
    std::array<uint16_t, 3> want = {(uint16_t)((a - 1) ^ (b - 1)),
                                    (uint16_t)((a - 1) ^ (c - 1)),
                                    (uint16_t)((b - 1) ^ (c - 1))};
    std::sort(want.begin(), want.end());
    REQUIRE(class_key(a, b, c) == want);
    // order of arguments is irrelevant
    REQUIRE(class_key(c, a, b) == want);
    REQUIRE(class_key(b, c, a) == want);
  }
  REQUIRE_THROWS_AS(class_key(3, 3, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(class_key(VertexSet{1, 2}), std::invalid_argument);
}

TEST_CASE("xor of the two smaller key entries gives the third") {
  // {a^b, a^c, b^c} always xors to zero, so the key is determined by any two
  SplitMix64 rng{7};
  for (int trial = 0; trial < 200; ++trial) {
    uint16_t a = (uint16_t)(1 + rng.next_below(64));
    uint16_t b = (uint16_t)(1 + rng.next_below(64));
    uint16_t c = (uint16_t)(1 + rng.next_below(64));
    if (a == b || a == c || b == c) continue;
    auto key = class_key(a, b, c);
    REQUIRE((key[0] ^ key[1]) == key[2]);
  }
}

TEST_CASE("triple coloring uses exactly (n-1)(n-2)/6 colors and is proper") {
  for (int t : {2, 3, 4, 5}) {
    const int n = 1 << t;
    graph::Coloring c = color_g_n31(t);
    REQUIRE(c.method == "boolean31");
    REQUIRE(c.n == n);
    REQUIRE(c.r == 3);
    REQUIRE(c.s == 1);
    REQUIRE(c.total());
    KneserGraph g(n, 3, 1, Mode::Exact);
    REQUIRE(c.num_colors() == (n - 1) * (n - 2) / 6);
    graph::VerifyOptions vo;
    vo.edge_scan = t <= 4;  // cross-check both verification paths when cheap
    REQUIRE(verify_coloring(g, c, vo).proper);
  }
  REQUIRE_THROWS_AS(color_g_n31(1), std::invalid_argument);
  REQUIRE_THROWS_AS(color_g_n31(9), std::invalid_argument);
}

TEST_CASE("every color class has exactly n members sharing one xor pattern") {
  for (int t : {3, 4, 5}) {
    const int n = 1 << t;
    graph::Coloring c = color_g_n31(t);
    KneserGraph g(n, 3, 1, Mode::Exact);
    std::map<int32_t, std::vector<VertexSet>> classes;
    g.for_each_vertex([&](uint64_t rank, const VertexSet& v) {
      classes[c.color[rank]].push_back(v);
    });
    REQUIRE((int)classes.size() == (n - 1) * (n - 2) / 6);
    uint64_t size_errors = 0, key_errors = 0, meet_one = 0;
    for (auto& [col, members] : classes) {
      if ((int)members.size() != n) ++size_errors;
      auto key = class_key(members.front());
      for (const auto& v : members)
        if (class_key(v) != key) ++key_errors;
      // no two triples of one class may meet in exactly one element
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          if (intersection_size(members[i].data(), 3, members[j].data(), 3) == 1)
            ++meet_one;
    }
    REQUIRE(size_errors == 0);
    REQUIRE(key_errors == 0);
    REQUIRE(meet_one == 0);
  }
}

TEST_CASE("color ids are dense and ordered by class key") {
  const int t = 3, n = 1 << t;
  graph::Coloring c = color_g_n31(t);
  KneserGraph g(n, 3, 1, Mode::Exact);
  std::map<int32_t, std::array<uint16_t, 3>> key_of_color;
  bool consistent = true;
  g.for_each_vertex([&](uint64_t rank, const VertexSet& v) {
    auto key = class_key(v);
    auto [it, fresh] = key_of_color.emplace(c.color[rank], key);
    if (!fresh && it->second != key) consistent = false;
  });
  REQUIRE(consistent);
  REQUIRE((int)key_of_color.size() == 7);
  REQUIRE(key_of_color.begin()->first == 0);
  REQUIRE(key_of_color.rbegin()->first == 6);
  // increasing color id corresponds to increasing key
  std::array<uint16_t, 3> prev{};
  bool first = true;
  for (auto& [col, key] : key_of_color) {
    if (!first) REQUIRE(prev < key);
    prev = key;
    first = false;
  }
}

TEST_CASE("the t=2 graph is edgeless and gets one color") {
  KneserGraph g(4, 3, 1, Mode::Exact);
  REQUIRE(g.degree() == 0);  // C(3,1) * C(1,2) = 0
  graph::Coloring c = color_g_n31(2);
  REQUIRE(c.num_colors() == 1);
  REQUIRE(verify_coloring(g, c).proper);
}
