#pragma once
// Coloring constructions that work on implicit Kneser graphs: the plain
// greedy Delta+1 bound, cover combination (a cover by parts that are
// list-colorable with l colors under external interference <= d combines
// into an (l+d)-coloring), and the random-map list coloring that assigns
// vertices the least listed palette id mapping into them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneser/kneser_graph.hpp"
#include "kneser/rng.hpp"

namespace kneser::solver {

using graph::Coloring;
using graph::KneserGraph;
using graph::VertexSet;

// Greedy in lex vertex order; uses at most Delta+1 colors.
inline Coloring greedy_coloring(const KneserGraph& g) {
  Coloring c(g, "greedy", 0);
  std::vector<uint32_t> stamp;  // color -> last vertex that forbade it
  stamp.resize((size_t)g.degree() + 2, 0);
  uint32_t tick = 0;
  g.for_each_vertex([&](const VertexSet& v) {
    ++tick;
    uint64_t rv = g.rank(v);
    g.for_each_neighbor(v, [&](const VertexSet& w) {
      int32_t cw = c.color[g.rank(w)];
      if (cw >= 0 && (size_t)cw < stamp.size()) stamp[cw] = tick;
    });
    int32_t pick = 0;
    while (stamp[pick] == tick) ++pick;
    c.color[rv] = pick;
  });
  return c;
}

// ---- cover combination ----

// Parts jointly covering a vertex subset; parts may overlap (a cover, not a
// partition) and a vertex colored by an earlier part keeps its color. `l`:
// every part can be properly colored from any per-vertex lists of size >= l
// (certified by the part oracle). `d`: max number of distinct palette colors
// already held by a vertex's neighbors when its part is processed.
struct CoverSystem {
  std::vector<std::vector<uint64_t>> parts;  // vertex ranks
  int l = 1;
  int d = 0;
};

// Colors one part from per-vertex lists. Writes colors for exactly the part's
// vertices into `out` (same indexing as the part), returns false on failure.
using PartOracle = std::function<bool(const KneserGraph&, const std::vector<uint64_t>& part,
                                      const std::vector<std::vector<int32_t>>& lists,
                                      std::vector<int32_t>& out)>;

// Default oracle: greedy from lists in part order. Complete whenever each
// vertex's list exceeds its degree inside the part (in particular for
// independent parts), which is what the callers here guarantee.
inline bool greedy_part_oracle(const KneserGraph& g, const std::vector<uint64_t>& part,
                               const std::vector<std::vector<int32_t>>& lists,
                               std::vector<int32_t>& out) {
  out.assign(part.size(), -1);
  std::vector<std::pair<uint64_t, size_t>> pos;
  pos.reserve(part.size());
  for (size_t i = 0; i < part.size(); ++i) pos.emplace_back(part[i], i);
  std::sort(pos.begin(), pos.end());
  auto index_of = [&](uint64_t rk) -> int64_t {
    auto it = std::lower_bound(pos.begin(), pos.end(), std::make_pair(rk, (size_t)0));
    if (it == pos.end() || it->first != rk) return -1;
    return (int64_t)it->second;
  };
  for (size_t i = 0; i < part.size(); ++i) {
    VertexSet v = g.unrank(part[i]);
    std::vector<int32_t> taken;
    g.for_each_neighbor(v, [&](const VertexSet& w) {
      int64_t j = index_of(g.rank(w));
      if (j >= 0 && out[j] >= 0) taken.push_back(out[j]);
    });
    std::sort(taken.begin(), taken.end());
    int32_t pick = -1;
    for (int32_t cand : lists[i]) {
      if (!std::binary_search(taken.begin(), taken.end(), cand)) { pick = cand; break; }
    }
    if (pick < 0) return false;
    out[i] = pick;
  }
  return true;
}

struct CombineStats {
  uint64_t colored = 0;              // vertices colored by this run
  uint64_t max_external_degree = 0;  // colored neighbors seen by any vertex
  int max_external_distinct = 0;     // distinct palette colors among them
  int32_t max_color_used = -1;
};

// Combines a cover into a proper coloring using palette {0..l+d-1}. Parts are
// processed in order; each still-uncolored part member's list is the palette
// minus all colors already on its neighbors (earlier parts and, if given, the
// ambient coloring the run starts from). The interference bound d is
// validated as the run proceeds; violations and oracle failures report the
// offending part.
inline Coloring cover_combine(const KneserGraph& g, const CoverSystem& cover,
                              PartOracle oracle = nullptr, const Coloring* ambient = nullptr,
                              CombineStats* stats = nullptr) {
  if (!oracle) oracle = greedy_part_oracle;
  if (cover.l < 1) throw std::invalid_argument("cover_combine: l must be >= 1");
  if (cover.d < 0) throw std::invalid_argument("cover_combine: d must be >= 0");
  const int32_t palette = cover.l + cover.d;

  Coloring c = ambient ? *ambient : Coloring(g, "cover", 0);
  if (ambient && c.color.size() != g.num_vertices())
    throw std::invalid_argument("cover_combine: ambient coloring is for another graph");
  CombineStats st;

  for (size_t pi = 0; pi < cover.parts.size(); ++pi) {
    std::vector<uint64_t> sorted = cover.parts[pi];
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] >= g.num_vertices())
        throw std::invalid_argument("cover_combine: vertex rank out of range in part " +
                                    std::to_string(pi));
      if (i && sorted[i] == sorted[i - 1])
        throw std::invalid_argument("cover_combine: duplicate vertex within part " +
                                    std::to_string(pi));
    }
  }

  for (size_t pi = 0; pi < cover.parts.size(); ++pi) {
    std::vector<uint64_t> todo;
    for (uint64_t v : cover.parts[pi])
      if (c.color[v] < 0) todo.push_back(v);
    if (todo.empty()) continue;

    std::vector<std::vector<int32_t>> lists(todo.size());
    for (size_t i = 0; i < todo.size(); ++i) {
      VertexSet v = g.unrank(todo[i]);
      std::vector<int32_t> forb;
      uint64_t ext = 0;
      g.for_each_neighbor(v, [&](const VertexSet& w) {
        int32_t cw = c.color[g.rank(w)];
        if (cw >= 0) {
          ++ext;
          if (cw < palette) forb.push_back(cw);
        }
      });
      std::sort(forb.begin(), forb.end());
      forb.erase(std::unique(forb.begin(), forb.end()), forb.end());
      if ((int)forb.size() > cover.d)
        throw std::runtime_error("cover_combine: vertex in part " + std::to_string(pi) +
                                 " already sees " + std::to_string(forb.size()) +
                                 " palette colors on neighbors, exceeds d=" +
                                 std::to_string(cover.d));
      st.max_external_degree = std::max(st.max_external_degree, ext);
      st.max_external_distinct = std::max(st.max_external_distinct, (int)forb.size());
      auto& L = lists[i];
      for (int32_t col = 0; col < palette; ++col)
        if (!std::binary_search(forb.begin(), forb.end(), col)) L.push_back(col);
    }
    std::vector<int32_t> got;
    if (!oracle(g, todo, lists, got) || got.size() != todo.size())
      throw std::runtime_error("cover_combine: part oracle failed on part " +
                               std::to_string(pi));
    for (size_t i = 0; i < todo.size(); ++i) {
      if (got[i] < 0 || got[i] >= palette ||
          std::find(lists[i].begin(), lists[i].end(), got[i]) == lists[i].end())
        throw std::runtime_error("cover_combine: oracle picked a color off-list in part " +
                                 std::to_string(pi));
      c.color[todo[i]] = got[i];
      st.max_color_used = std::max(st.max_color_used, got[i]);
      ++st.colored;
    }
  }
  if (stats) *stats = st;
  return c;
}

// ---- random-map list coloring ----

// Palette ids are abstract; a random map phi sends each id to an (s+1)-subset
// of [n] (by colex rank). A vertex takes the least id on its list whose image
// lies inside it; two vertices sharing an id share an (s+1)-subset, so color
// classes are independent in exact mode.

struct ListAssignment {
  std::vector<std::vector<int32_t>> lists;  // indexed by vertex colex rank
};

// File format: one line per vertex, "<e1,...,er>\t<c1,c2,...>".
inline ListAssignment read_lists(std::istream& is, const KneserGraph& g) {
  ListAssignment la;
  la.lists.resize(g.num_vertices());
  std::vector<char> seen(g.num_vertices(), 0);
  std::string line;
  uint64_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": missing tab separator");
    VertexSet v;
    {
      std::string elems = line.substr(0, tab);
      size_t pos = 0;
      while (pos <= elems.size()) {
        size_t comma = elems.find(',', pos);
        std::string tok = elems.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        try {
          v.push_back((uint16_t)std::stoi(tok));
        } catch (const std::exception&) {
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": bad vertex element '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    try {
      g.check_vertex(v);
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    uint64_t rk = g.rank(v);
    if (seen[rk])
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate vertex");
    seen[rk] = 1;
    std::string rest = line.substr(tab + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      try {
        int32_t col = std::stoi(tok);
        if (col < 0) throw std::out_of_range("color");
        la.lists[rk].push_back(col);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad color '" +
                                    tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  for (uint64_t v = 0; v < g.num_vertices(); ++v)
    if (!seen[v]) throw std::invalid_argument("list file does not cover all vertices");
  return la;
}

// Default list length: ceil(r * n^(s+1) * ln n).
inline uint64_t default_list_size(const KneserGraph& g) {
  double m = g.r * std::pow((double)g.n, g.s + 1) * std::log((double)g.n);
  return (uint64_t)std::ceil(m);
}

// Every vertex gets the same list {0..m-1}.
inline ListAssignment make_uniform_lists(const KneserGraph& g, uint64_t m) {
  ListAssignment la;
  std::vector<int32_t> base(m);
  for (uint64_t i = 0; i < m; ++i) base[i] = (int32_t)i;
  la.lists.assign(g.num_vertices(), base);
  return la;
}

struct ProbListResult {
  bool success = false;
  int attempts = 0;                 // attempts consumed (index of success if any)
  Coloring coloring;                // valid iff success; colors are palette ids
  std::vector<uint64_t> phi;        // id -> (s+1)-subset colex rank (winning draw)
  std::vector<uint64_t> uncovered;  // vertex ranks left colorless (last failed draw)
};

// Draws phi uniformly per attempt from child seeds of `master_seed` and gives
// each vertex the least listed id whose subset it contains; retries until all
// vertices are covered or `max_retries` draws are spent. Lists shorter than
// `m` (default: the r*n^(s+1)*ln n bound) are rejected up front.
inline ProbListResult probabilistic_list_coloring(const KneserGraph& g,
                                                  const ListAssignment& lists,
                                                  uint64_t master_seed, uint64_t m = 0,
                                                  int max_retries = 32) {
  if (g.mode != graph::Mode::Exact)
    throw std::invalid_argument("random-map list coloring needs exact intersection mode");
  if (lists.lists.size() != g.num_vertices())
    throw std::invalid_argument("list assignment does not match the graph");
  if (m == 0) m = default_list_size(g);
  int64_t universe = 0;
  std::vector<std::vector<int32_t>> ordered(lists.lists.size());
  for (uint64_t v = 0; v < g.num_vertices(); ++v) {
    ordered[v] = lists.lists[v];
    std::sort(ordered[v].begin(), ordered[v].end());
    ordered[v].erase(std::unique(ordered[v].begin(), ordered[v].end()), ordered[v].end());
    if (ordered[v].size() < m)
      throw std::invalid_argument("vertex rank " + std::to_string(v) + " has a list of " +
                                  std::to_string(ordered[v].size()) +
                                  " < m=" + std::to_string(m));
    universe = std::max(universe, (int64_t)ordered[v].back() + 1);
  }
  const int t = g.s + 1;
  const uint64_t subsets = binom(g.n, t);
  BinomTable btt(g.n, t);

  ProbListResult res;
  SplitMix64 master{master_seed};
  std::vector<uint64_t> phi((size_t)universe);
  std::vector<uint16_t> images((size_t)universe * t);
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    res.attempts = attempt;
    SplitMix64 rng = master.split((uint64_t)attempt);
    for (size_t id = 0; id < phi.size(); ++id) {
      phi[id] = rng.next_below(subsets);
      colex_unrank(phi[id], g.n, t, btt, &images[id * t]);
    }
    Coloring c(g, "problist", master_seed);
    res.uncovered.clear();
    g.for_each_vertex([&](const VertexSet& v) {
      for (int32_t id : ordered[g.rank(v)]) {
        const uint16_t* sub = &images[(size_t)id * t];
        if (std::includes(v.begin(), v.end(), sub, sub + t)) {
          c.color[g.rank(v)] = id;
          return;
        }
      }
      res.uncovered.push_back(g.rank(v));
    });
    if (res.uncovered.empty()) {
      res.success = true;
      res.coloring = std::move(c);
      res.phi = phi;
      return res;
    }
  }
  return res;
}

}  // namespace kneser::solver
