#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "kneser/explicit_graph.hpp"
#include "kneser/kneser_graph.hpp"
#include "kneser/rng.hpp"
#include "kneser/solver.hpp"

using namespace kneser;
using namespace kneser::graph;
using Catch::Matchers::ContainsSubstring;

namespace {

// Backtracking k-colorability oracle for tiny graphs (adjacency matrix).
bool oracle_colorable(const std::vector<std::vector<bool>>& adj, int k,
                      std::vector<int>& col, size_t at) {
  if (at == adj.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (size_t j = 0; j < at && ok; ++j)
      if (adj[at][j] && col[j] == c) ok = false;
    if (!ok) continue;
    col[at] = c;
    if (oracle_colorable(adj, k, col, at + 1)) return true;
    col[at] = -1;
  }
  return false;
}

int oracle_chi(const KneserGraph& g) {
  size_t nv = g.num_vertices();
  std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
  std::vector<VertexSet> verts;
  g.for_each_vertex([&](const VertexSet& v) { verts.push_back(v); });
  for (size_t i = 0; i < nv; ++i)
    for (size_t j = i + 1; j < nv; ++j)
      if (g.adjacent(verts[i], verts[j])) adj[i][j] = adj[j][i] = true;
  for (int k = 1;; ++k) {
    std::vector<int> col(nv, -1);
    if (oracle_colorable(adj, k, col, 0)) return k;
  }
}

uint64_t oracle_alpha(const KneserGraph& g) {
  // exhaustive over subsets; only for very small graphs
  size_t nv = g.num_vertices();
  REQUIRE(nv <= 24);
  std::vector<VertexSet> verts;
  g.for_each_vertex([&](const VertexSet& v) { verts.push_back(v); });
  uint64_t best = 0;
  for (uint64_t mask = 0; mask < (1ull << nv); ++mask) {
    bool indep = true;
    for (size_t i = 0; i < nv && indep; ++i)
      if (mask >> i & 1)
        for (size_t j = i + 1; j < nv && indep; ++j)
          if ((mask >> j & 1) && g.adjacent(verts[i], verts[j])) indep = false;
    if (indep) best = std::max<uint64_t>(best, __builtin_popcountll(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("greedy coloring is proper and within the degree bound") {
  for (auto [n, r, s] : std::vector<std::array<int, 3>>{{7, 3, 1}, {8, 3, 0}, {9, 4, 2}}) {
    KneserGraph g(n, r, s, Mode::Exact);
    Coloring c = solver::greedy_coloring(g);
    REQUIRE(c.total());
    REQUIRE(verify_coloring(g, c).proper);
    REQUIRE(c.max_color() <= (int32_t)g.degree());
    REQUIRE(c.method == "greedy");
  }
}

TEST_CASE("exact chromatic numbers match a backtracking oracle") {
  for (auto [n, r, s] : std::vector<std::array<int, 3>>{
           {5, 2, 0}, {6, 2, 0}, {6, 2, 1}, {6, 3, 1}, {4, 2, 1}}) {
    KneserGraph g(n, r, s, Mode::Exact);
    REQUIRE(exact::chi_exact(g) == oracle_chi(g));
  }
}

TEST_CASE("exact independence numbers match the subset oracle") {
  for (auto [n, r, s] : std::vector<std::array<int, 3>>{{5, 2, 0}, {6, 2, 1}, {6, 3, 2}}) {
    KneserGraph g(n, r, s, Mode::Exact);
    REQUIRE(exact::alpha_exact(g) == (int)oracle_alpha(g));
  }
}

TEST_CASE("exact solvers refuse oversized instances loudly") {
  KneserGraph big(10, 5, 0, Mode::Exact);  // 252 vertices
  REQUIRE_THROWS_WITH(exact::chi_exact(big), ContainsSubstring("hard limit 64"));
  REQUIRE_THROWS_AS(exact::alpha_exact(big), std::invalid_argument);
  KneserGraph mid(8, 3, 0, Mode::Exact);  // 56 vertices: above default cap 40
  REQUIRE_THROWS_WITH(exact::chi_exact(mid), ContainsSubstring("exceeds cap 40"));
  REQUIRE_NOTHROW(exact::chi_exact(mid, 64));  // raised cap admits it
}

TEST_CASE("cover combination handles partitions, overlaps, and ambient colors") {
  KneserGraph g(7, 3, 0, Mode::Exact);
  const uint64_t nv = g.num_vertices();

  SECTION("single part holding every vertex") {
    solver::CoverSystem cover;
    cover.parts.emplace_back();
    for (uint64_t i = 0; i < nv; ++i) cover.parts[0].push_back(i);
    cover.l = (int)g.degree() + 1;
    cover.d = 0;
    solver::CombineStats stats;
    Coloring c = solver::cover_combine(g, cover, nullptr, nullptr, &stats);
    REQUIRE(c.total());
    REQUIRE(verify_coloring(g, c).proper);
    REQUIRE(c.max_color() < cover.l + cover.d);
    REQUIRE(stats.colored == nv);
    REQUIRE(stats.max_external_distinct == 0);
  }

  SECTION("overlapping parts: second occurrence keeps the first color") {
    solver::CoverSystem cover;
    std::vector<uint64_t> front, back;
    for (uint64_t i = 0; i < nv; ++i) {
      if (i <= nv / 2) front.push_back(i);
      if (i >= nv / 3) back.push_back(i);  // overlaps front on the middle third
    }
    cover.parts = {front, back};
    cover.l = (int)g.degree() + 1;
    cover.d = (int)g.degree();
    Coloring c = solver::cover_combine(g, cover);
    REQUIRE(c.total());
    REQUIRE(verify_coloring(g, c).proper);
    REQUIRE(c.max_color() < cover.l + cover.d);
  }

  SECTION("ambient pre-coloring is kept and respected") {
    Coloring ambient(g, "test", 0);
    ambient.color[0] = 5;
    ambient.color[1] = 6;
    solver::CoverSystem cover;
    cover.parts.emplace_back();
    for (uint64_t i = 0; i < nv; ++i) cover.parts[0].push_back(i);
    cover.l = (int)g.degree() + 1;
    cover.d = (int)g.degree();
    Coloring c = solver::cover_combine(g, cover, nullptr, &ambient);
    REQUIRE(c.color[0] == 5);
    REQUIRE(c.color[1] == 6);
    REQUIRE(c.total());
    REQUIRE(verify_coloring(g, c).proper);
  }

  SECTION("interference beyond the declared budget is an error naming the part") {
    Coloring ambient(g, "test", 0);
    // give vertex 0's neighbors many distinct colors, then declare d=1
    std::vector<uint64_t> nbr;
    g.for_each_neighbor(g.unrank(0), [&](const VertexSet& w) { nbr.push_back(g.rank(w)); });
    for (size_t i = 0; i < nbr.size(); ++i) ambient.color[nbr[i]] = (int32_t)i % 5;
    solver::CoverSystem cover;
    cover.parts.push_back({0});
    cover.l = 1;
    cover.d = 1;
    REQUIRE_THROWS_WITH(solver::cover_combine(g, cover, nullptr, &ambient),
                        Catch::Matchers::ContainsSubstring("part 0") &&
                            Catch::Matchers::ContainsSubstring("exceeds d=1"));
  }

  SECTION("oracle failure names the offending part") {
    solver::PartOracle failing = [](const KneserGraph&, const std::vector<uint64_t>&,
                                    const std::vector<std::vector<int32_t>>&,
                                    std::vector<int32_t>&) { return false; };
    solver::CoverSystem cover;
    cover.parts.push_back({0, 1});
    cover.parts.push_back({2, 3});
    cover.l = (int)g.degree() + 1;
    cover.d = 0;
    REQUIRE_THROWS_WITH(solver::cover_combine(g, cover, failing),
                        Catch::Matchers::ContainsSubstring("part 0"));
  }

  SECTION("bad part contents are rejected") {
    solver::CoverSystem cover;
    cover.parts.push_back({0, 0});  // duplicate within one part
    cover.l = 2;
    cover.d = 0;
    REQUIRE_THROWS_AS(solver::cover_combine(g, cover), std::invalid_argument);
    cover.parts = {{nv}};  // rank out of range
    REQUIRE_THROWS_AS(solver::cover_combine(g, cover), std::invalid_argument);
  }
}

TEST_CASE("chromatic bound from covers: parts of an exact design partition") {
  // color classes of a greedy run, replayed as a cover with l = 1:
  // each part is an independent set, so a 1-element list suffices
  KneserGraph g(7, 3, 1, Mode::Exact);
  Coloring base = solver::greedy_coloring(g);
  int32_t k = base.num_colors();
  solver::CoverSystem cover;
  cover.parts.assign(k, {});
  for (uint64_t i = 0; i < g.num_vertices(); ++i)
    cover.parts[base.color[i]].push_back(i);
  cover.l = 1;
  cover.d = k - 1;  // neighbors can hold every earlier part's color
  solver::CombineStats stats;
  Coloring c = solver::cover_combine(g, cover, nullptr, nullptr, &stats);
  REQUIRE(verify_coloring(g, c).proper);
  REQUIRE(c.max_color() < cover.l + cover.d);
  REQUIRE(stats.max_external_distinct <= cover.d);
}

TEST_CASE("list files parse, validate, and reject gaps") {
  KneserGraph g(5, 2, 0, Mode::Exact);  // 10 vertices
  std::ostringstream os;
  g.for_each_vertex([&](const VertexSet& v) {
    os << v[0] << ',' << v[1] << "\t1,3,5,7\n";
  });
  {
    std::istringstream is(os.str());
    solver::ListAssignment la = solver::read_lists(is, g);
    REQUIRE(la.lists.size() == g.num_vertices());
    REQUIRE(la.lists[4] == std::vector<int32_t>({1, 3, 5, 7}));
  }
  {
    std::istringstream is("1,2\t1,2\n");  // the other nine vertices missing
    REQUIRE_THROWS_AS(solver::read_lists(is, g), std::invalid_argument);
  }
  {
    std::istringstream is("1,2\tx,2\n");
    REQUIRE_THROWS_AS(solver::read_lists(is, g), std::invalid_argument);
  }
}

TEST_CASE("random-map list coloring matches its contract") {
  KneserGraph g(6, 2, 0, Mode::Exact);  // 15 vertices, s+1 = 1-subsets
  const uint64_t m = solver::default_list_size(g);
  REQUIRE(m == (uint64_t)std::ceil(2.0 * 6 * std::log(6.0)));

  SECTION("uniform lists succeed and color properly") {
    solver::ListAssignment lists = solver::make_uniform_lists(g, m);
    solver::ProbListResult res = solver::probabilistic_list_coloring(g, lists, 7);
    REQUIRE(res.success);
    REQUIRE(res.attempts >= 1);
    REQUIRE(res.attempts <= 32);
    REQUIRE(res.coloring.total());
    REQUIRE(verify_coloring(g, res.coloring).proper);
    // each vertex holds the 1-subset drawn for its color
    for (uint64_t v = 0; v < g.num_vertices(); ++v) {
      int32_t col = res.coloring.color[v];
      VertexSet vs = g.unrank(v);
      VertexSet sub(1);
      BinomTable bt(g.n, 1);
      colex_unrank(res.phi[col], g.n, 1, bt, sub.data());
      REQUIRE(std::includes(vs.begin(), vs.end(), sub.begin(), sub.end()));
    }
  }

  SECTION("determinism in the master seed") {
    solver::ListAssignment lists = solver::make_uniform_lists(g, m);
    solver::ProbListResult a = solver::probabilistic_list_coloring(g, lists, 11);
    solver::ProbListResult b = solver::probabilistic_list_coloring(g, lists, 11);
    REQUIRE(a.success == b.success);
    REQUIRE(a.attempts == b.attempts);
    REQUIRE(a.coloring.color == b.coloring.color);
  }

  SECTION("undersized lists are rejected up front") {
    solver::ListAssignment lists = solver::make_uniform_lists(g, m - 1);
    REQUIRE_THROWS_AS(solver::probabilistic_list_coloring(g, lists, 0),
                      std::invalid_argument);
  }

  SECTION("impossible lists fail with the uncovered vertices reported") {
    // one shared color id: only vertices containing the drawn 1-subset get it
    solver::ListAssignment lists;
    lists.lists.assign(g.num_vertices(), {0});
    solver::ProbListResult res = solver::probabilistic_list_coloring(g, lists, 3, 1);
    REQUIRE_FALSE(res.success);
    REQUIRE(res.attempts == 32);
    REQUIRE_FALSE(res.uncovered.empty());
  }

  SECTION("only exact intersection mode is supported") {
    KneserGraph ga(6, 3, 1, Mode::AtLeast);
    solver::ListAssignment lists = solver::make_uniform_lists(ga, 50);
    REQUIRE_THROWS_AS(solver::probabilistic_list_coloring(ga, lists, 0),
                      std::invalid_argument);
  }
}
