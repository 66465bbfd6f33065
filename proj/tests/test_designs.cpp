#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "kneser/designs.hpp"
#include "kneser/kneser_graph.hpp"

using namespace kneser;
using namespace kneser::design;
using kneser::graph::KneserGraph;
using kneser::graph::Mode;
using kneser::graph::VertexSet;

namespace {

// Fano plane: every pair of [7] lies in exactly one line.
DesignFamily fano() {
  return DesignFamily{7,
                      3,
                      2,
                      {{1, 2, 3},
                       {1, 4, 5},
                       {1, 6, 7},
                       {2, 4, 6},
                       {2, 5, 7},
                       {3, 4, 7},
                       {3, 5, 6}}};
}

// Count coverage of each s-subset directly.
std::map<std::vector<uint16_t>, int> coverage(const DesignFamily& f) {
  std::map<std::vector<uint16_t>, int> cov;
  std::vector<uint16_t> idx(f.s), sub(f.s);
  for (const auto& b : f.blocks) {
    if (f.s == 0) {
      ++cov[{}];
      continue;
    }
    first_subset(f.s, idx.data());
    do {
      for (int i = 0; i < f.s; ++i) sub[i] = b[idx[i] - 1];
      ++cov[std::vector<uint16_t>(sub.begin(), sub.end())];
    } while (next_subset(f.r, f.s, idx.data()));
  }
  return cov;
}

}  // namespace

TEST_CASE("design checker recognizes exact, approximate, and broken families") {
  SECTION("the Fano plane is an exact (7,3,2) design") {
    DesignReport rep = check_design(fano());
    REQUIRE(rep.exact_pass);
    REQUIRE(rep.approx_pass);
    REQUIRE(rep.uncovered_count == 0);
    REQUIRE(rep.uncovered_fraction == 0.0);
    REQUIRE(rep.multi_covered_count == 0);
  }

  SECTION("dropping a block leaves an approximate design with 3 uncovered pairs") {
    DesignFamily f = fano();
    f.blocks.pop_back();
    DesignReport rep = check_design(f);
    REQUIRE_FALSE(rep.exact_pass);
    REQUIRE(rep.approx_pass);
    REQUIRE(rep.uncovered_count == 3);  // pairs of the removed line
    REQUIRE(rep.uncovered_fraction == 3.0 / binom(7, 2));
    REQUIRE(rep.multi_covered_count == 0);
  }

  SECTION("duplicating a block breaks at-most-once coverage") {
    DesignFamily f = fano();
    f.blocks.push_back(f.blocks.front());
    DesignReport rep = check_design(f);
    REQUIRE_FALSE(rep.exact_pass);
    REQUIRE_FALSE(rep.approx_pass);
    REQUIRE(rep.multi_covered_count == 3);
    REQUIRE(rep.uncovered_count == 0);
  }

  SECTION("the checker agrees with a direct coverage count on random families") {
    DesignFamily f{9, 4, 2, {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 7, 8, 9}, {2, 3, 7, 8}}};
    auto cov = coverage(f);
    DesignReport rep = check_design(f);
    uint64_t multi = 0;
    for (auto& [k, c] : cov)
      if (c > 1) ++multi;
    REQUIRE(rep.multi_covered_count == multi);
    REQUIRE(rep.uncovered_count == binom(9, 2) - cov.size());
    REQUIRE_FALSE(rep.exact_pass);
  }

  SECTION("malformed blocks are rejected with context") {
    DesignFamily f{5, 2, 1, {{1, 1}}};
    REQUIRE_THROWS_AS(check_design(f), std::invalid_argument);
    f.blocks = {{0, 2}};
    REQUIRE_THROWS_AS(check_design(f), std::invalid_argument);
    f.blocks = {{1, 2, 3}};
    REQUIRE_THROWS_AS(check_design(f), std::invalid_argument);
  }
}

TEST_CASE("round-robin matchings partition every pair exactly once") {
  for (int n : {2, 4, 6, 8, 12, 14}) {
    Resolution res = one_factorization(n);
    REQUIRE(res.n == n);
    REQUIRE(res.r == 2);
    REQUIRE((int)res.parts.size() == (n == 2 ? 1 : n - 1));

    // each part: a perfect matching = exact (n,2,1) design
    for (size_t i = 0; i < res.parts.size(); ++i) {
      DesignReport rep = check_design(res.part(i, 1));
      REQUIRE(rep.exact_pass);
    }

    // all parts together: every pair exactly once
    std::set<std::pair<uint16_t, uint16_t>> seen;
    for (const auto& part : res.parts)
      for (const auto& b : part) REQUIRE(seen.emplace(b[0], b[1]).second);
    REQUIRE(seen.size() == binom(n, 2));
  }
  REQUIRE_THROWS_AS(one_factorization(7), std::invalid_argument);
  REQUIRE_THROWS_AS(one_factorization(0), std::invalid_argument);
}

TEST_CASE("resolution coloring colors by part index and hits the bound") {
  for (int n : {4, 6, 8, 10}) {
    KneserGraph g(n, 2, 1, Mode::Exact);
    Resolution res = one_factorization(n);
    graph::Coloring c = resolution_coloring(res, g);
    REQUIRE(c.total());
    REQUIRE(verify_coloring(g, c).proper);
    REQUIRE(c.num_colors() == n - 1);
    REQUIRE(resolution_color_bound(n, 2, 1) == (uint64_t)(n - 1));
    REQUIRE(c.method == "factorization");
    // the color of a pair is the index of the matching containing it
    for (size_t pi = 0; pi < res.parts.size(); ++pi)
      for (const auto& b : res.parts[pi])
        REQUIRE(c.color[g.rank({b[0], b[1]})] == (int32_t)pi);
  }
}

TEST_CASE("resolution coloring reports structural failures by r-set") {
  KneserGraph g(6, 2, 1, Mode::Exact);
  Resolution res = one_factorization(6);

  SECTION("an r-set in two parts") {
    res.parts[1][0] = res.parts[0][0];  // duplicate block across parts
    REQUIRE_THROWS_WITH(resolution_coloring(res, g),
                        Catch::Matchers::ContainsSubstring("parts 0 and 1"));
  }

  SECTION("an r-set in no block") {
    res.parts[0].erase(res.parts[0].begin());
    REQUIRE_THROWS_WITH(resolution_coloring(res, g),
                        Catch::Matchers::ContainsSubstring("no block"));
  }
}

TEST_CASE("stars through an (s+1)-core are independent sets of the right size") {
  for (auto [n, r, s] : std::vector<std::array<int, 3>>{
           {7, 3, 1}, {8, 4, 2}, {9, 4, 1}, {6, 2, 0}, {9, 5, 3}}) {
    KneserGraph g(n, r, s, Mode::Exact);
    VertexSet core;
    for (int e = 1; e <= s + 1; ++e) core.push_back((uint16_t)e);
    auto star = star_family(n, r, s, core);
    REQUIRE(star.size() == binom(n - s - 1, r - s - 1));
    uint64_t adjacent_pairs = 0;
    for (size_t i = 0; i < star.size(); ++i)
      for (size_t j = i + 1; j < star.size(); ++j)
        if (g.adjacent(star[i], star[j])) ++adjacent_pairs;
    REQUIRE(adjacent_pairs == 0);  // any two share the core: s+1 > s elements
  }
  REQUIRE_THROWS_AS(star_family(7, 3, 1, {1}), std::invalid_argument);
  REQUIRE_THROWS_AS(star_family(7, 3, 1, {1, 9}), std::invalid_argument);
  REQUIRE_THROWS_AS(star_family(7, 3, 1, {2, 1}), std::invalid_argument);
}

TEST_CASE("resolution bound reproduces its defining ratio") {
  for (int n : {4, 6, 8, 10, 12}) {
    // r=2, s=1: [C(n,2)/C(2,2)] / [C(n,1)/C(2,1)] = (n(n-1)/2) / (n/2) = n-1
    REQUIRE(resolution_color_bound(n, 2, 1) == (uint64_t)(n - 1));
  }
  // independent recomputation for a (4,2) instance
  int n = 16, r = 4, s = 2, k = 2 * r - s - 1;
  uint64_t expect = (binom(n, r) / binom(k, r)) / (binom(n, s) / binom(k, s));
  REQUIRE(resolution_color_bound(n, r, s) == expect);
}

TEST_CASE("design files round-trip with parts and strength intact") {
  Resolution res = one_factorization(6);
  std::ostringstream os;
  write_design(os, res, 1);
  std::string blob = os.str();
  REQUIRE(blob.rfind("#design n=6 r=2 s=1", 0) == 0);
  REQUIRE(std::count(blob.begin(), blob.end(), '%') == (long)res.parts.size() - 1);

  std::istringstream is(blob);
  DesignFile back = read_design(is);
  REQUIRE(back.res.n == 6);
  REQUIRE(back.res.r == 2);
  REQUIRE(back.s == 1);
  REQUIRE(back.res.parts.size() == res.parts.size());
  for (size_t i = 0; i < res.parts.size(); ++i) REQUIRE(back.res.parts[i] == res.parts[i]);

  std::ostringstream os2;
  write_design(os2, back.res, back.s);
  REQUIRE(os2.str() == blob);
}

TEST_CASE("design file reader rejects malformed input") {
  auto read = [](const std::string& text) {
    std::istringstream is(text);
    return read_design(is);
  };
  REQUIRE_THROWS_AS(read("nope\n"), std::invalid_argument);
  REQUIRE_THROWS_AS(read("#design n=6 r=2 s=1\n1,2,3\n"), std::invalid_argument);  // size
  REQUIRE_THROWS_AS(read("#design n=6 r=2 s=1\n2,1\n"), std::invalid_argument);  // order
  REQUIRE_THROWS_AS(read("#design n=6 r=2 s=1\n1,9\n"), std::invalid_argument);  // range
  REQUIRE_THROWS_AS(read("#design n=6 r=2 s=1\n1,x\n"), std::invalid_argument);  // token
}
