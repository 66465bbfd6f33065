#pragma once
// Dense bitmask graphs for exact solvers. Everything here is exponential-time
// branch and bound, deliberately restricted to tiny instances: the hard vertex
// cap is 64 (one word per adjacency row) and chi_exact refuses anything above
// its configured cap so runaway instances fail loudly instead of hanging.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneser/kneser_graph.hpp"

namespace kneser::exact {

struct ExplicitGraph {
  int nv = 0;
  std::vector<uint64_t> adj;  // adj[v] = neighbor mask

  ExplicitGraph() = default;
  explicit ExplicitGraph(int nv_) : nv(nv_), adj(nv_, 0) {
    if (nv < 0 || nv > 64) throw std::invalid_argument("explicit graph capped at 64 vertices");
  }
  void add_edge(int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= nv || b >= nv)
      throw std::invalid_argument("bad edge");
    adj[a] |= 1ull << b;
    adj[b] |= 1ull << a;
  }
  bool has_edge(int a, int b) const { return (adj[a] >> b) & 1; }

  static ExplicitGraph from_kneser(const graph::KneserGraph& g) {
    if (g.num_vertices() > 64)
      throw std::invalid_argument("graph has " + std::to_string(g.num_vertices()) +
                                  " vertices; explicit form capped at 64");
    ExplicitGraph eg((int)g.num_vertices());
    g.for_each_vertex([&](const graph::VertexSet& v) {
      int rv = (int)g.rank(v);
      g.for_each_neighbor(v, [&](const graph::VertexSet& w) {
        int rw = (int)g.rank(w);
        if (rw > rv) eg.add_edge(rv, rw);
      });
    });
    return eg;
  }
};

namespace detail {

inline int mis_rec(const ExplicitGraph& g, uint64_t pool, int best_floor) {
  if (!pool) return 0;
  int cnt = std::popcount(pool);
  if (cnt <= best_floor) { /* no pruning value, popcount is the trivial bound */ }
  // pick the pool vertex with most pool-neighbors
  int pick = -1, pdeg = -1;
  for (uint64_t m = pool; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int d = std::popcount(g.adj[v] & pool);
    if (d > pdeg) { pdeg = d; pick = v; }
  }
  if (pdeg <= 1) {
    // pool is a disjoint union of edges and isolated vertices: count components
    int take = 0;
    uint64_t rest = pool;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= ~(1ull << v);
      rest &= ~g.adj[v];
      ++take;
    }
    return take;
  }
  int with = 1 + mis_rec(g, pool & ~(g.adj[pick] | (1ull << pick)), best_floor - 1);
  int without = mis_rec(g, pool & ~(1ull << pick), std::max(best_floor, with));
  return std::max(with, without);
}

inline void clique_rec(const ExplicitGraph& g, uint64_t cand, int size, int& best) {
  if (size + std::popcount(cand) <= best) return;
  if (!cand) { best = std::max(best, size); return; }
  while (cand) {
    if (size + std::popcount(cand) <= best) return;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    clique_rec(g, cand & g.adj[v], size + 1, best);
  }
}

// DFS test: is g k-colorable? Saturation-first vertex order, with the usual
// symmetry break (a fresh color may only be the next unused index).
struct KColor {
  const ExplicitGraph& g;
  int k;
  std::vector<int8_t> col;
  explicit KColor(const ExplicitGraph& g_, int k_) : g(g_), k(k_), col(g_.nv, -1) {}

  bool run(int colored, int used) {
    if (colored == g.nv) return true;
    int pick = -1, psat = -1, pdeg = -1;
    for (int v = 0; v < g.nv; ++v) {
      if (col[v] >= 0) continue;
      uint64_t satmask = 0;
      int deg = 0;
      for (uint64_t m = g.adj[v]; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        if (col[u] >= 0) satmask |= 1ull << col[u];
        else ++deg;
      }
      int sat = std::popcount(satmask);
      if (sat > psat || (sat == psat && deg > pdeg)) { psat = sat; pdeg = deg; pick = v; }
    }
    uint64_t forbidden = 0;
    for (uint64_t m = g.adj[pick]; m;) {
      int u = std::countr_zero(m);
      m &= m - 1;
      if (col[u] >= 0) forbidden |= 1ull << col[u];
    }
    int cmax = std::min(k, used + 1);
    for (int c = 0; c < cmax; ++c) {
      if ((forbidden >> c) & 1) continue;
      col[pick] = (int8_t)c;
      if (run(colored + 1, std::max(used, c + 1))) return true;
      col[pick] = -1;
    }
    return false;
  }
};

}  // namespace detail

// Maximum independent set size.
inline int alpha_exact(const ExplicitGraph& g) {
  uint64_t pool = g.nv == 64 ? ~0ull : (1ull << g.nv) - 1;
  return detail::mis_rec(g, pool, 0);
}

// Maximum clique size.
inline int max_clique(const ExplicitGraph& g) {
  int best = 0;
  uint64_t pool = g.nv == 64 ? ~0ull : (1ull << g.nv) - 1;
  detail::clique_rec(g, pool, 0, best);
  return best;
}

// DSATUR greedy upper bound; also usable as a standalone heuristic.
inline int dsatur_bound(const ExplicitGraph& g, std::vector<int8_t>* out = nullptr) {
  std::vector<int8_t> col(g.nv, -1);
  for (int step = 0; step < g.nv; ++step) {
    int pick = -1, psat = -1, pdeg = -1;
    for (int v = 0; v < g.nv; ++v) {
      if (col[v] >= 0) continue;
      uint64_t satmask = 0;
      int deg = 0;
      for (uint64_t m = g.adj[v]; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        if (col[u] >= 0) satmask |= 1ull << col[u];
        else ++deg;
      }
      int sat = std::popcount(satmask);
      if (sat > psat || (sat == psat && deg > pdeg)) { psat = sat; pdeg = deg; pick = v; }
    }
    uint64_t forbidden = 0;
    for (uint64_t m = g.adj[pick]; m;) {
      int u = std::countr_zero(m);
      m &= m - 1;
      if (col[u] >= 0) forbidden |= 1ull << col[u];
    }
    int c = 0;
    while ((forbidden >> c) & 1) ++c;
    col[pick] = (int8_t)c;
  }
  int k = 0;
  for (int8_t c : col) k = std::max(k, (int)c + 1);
  if (out) *out = std::move(col);
  return k;
}

// Exact chromatic number. Clique lower bound, DSATUR upper bound, then
// iterative k-colorability search between them. Instances above `cap`
// vertices are refused (default 40, hard limit 64).
inline int chi_exact(const ExplicitGraph& g, int cap = 40) {
  if (cap > 64) cap = 64;
  if (g.nv > cap)
    throw std::runtime_error("chi_exact: " + std::to_string(g.nv) +
                             " vertices exceeds cap " + std::to_string(cap) +
                             "; refusing exponential search");
  if (g.nv == 0) return 0;
  int lo = max_clique(g);
  int hi = dsatur_bound(g);
  for (int k = lo; k < hi; ++k) {
    detail::KColor kc(g, k);
    if (kc.run(0, 0)) return k;
  }
  return hi;
}

inline int chi_exact(const graph::KneserGraph& g, int cap = 40) {
  if ((uint64_t)g.num_vertices() > 64)
    throw std::runtime_error("chi_exact: " + std::to_string(g.num_vertices()) +
                             " vertices exceeds hard limit 64");
  return chi_exact(ExplicitGraph::from_kneser(g), cap);
}

inline int alpha_exact(const graph::KneserGraph& g) {
  return alpha_exact(ExplicitGraph::from_kneser(g));
}

}  // namespace kneser::exact
