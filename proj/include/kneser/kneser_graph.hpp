#pragma once
// Implicit generalized Kneser graphs G(n,r,s): vertices are the r-subsets of
// {1..n}; edges join sets meeting in exactly s elements (exact mode) or in at
// least s elements (atleast mode). Vertices are never materialized: adjacency,
// neighbor enumeration and verification work combinatorially.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "kneser/combinatorics.hpp"

namespace kneser::graph {

using VertexSet = std::vector<uint16_t>;  // sorted, distinct, 1-based elements

enum class Mode { Exact, AtLeast };

inline std::string mode_name(Mode m) { return m == Mode::Exact ? "exact" : "atleast"; }
inline Mode mode_from_name(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "atleast") return Mode::AtLeast;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

struct KneserGraph {
  int n = 1, r = 1, s = 0;
  Mode mode = Mode::Exact;
  BinomTable bt;  // C(x,k) for x <= n, k <= r

  KneserGraph() = default;
  KneserGraph(int n_, int r_, int s_, Mode mode_ = Mode::Exact)
      : n(n_), r(r_), s(s_), mode(mode_) {
    if (n < 1 || n > 2048) throw std::invalid_argument("n out of range");
    if (!(0 <= s && s < r && r <= n))
      throw std::invalid_argument("require 0 <= s < r <= n, got n=" + std::to_string(n) +
                                  " r=" + std::to_string(r) + " s=" + std::to_string(s));
    binom(n, r);  // throws if the vertex count does not fit 64 bits
    bt = BinomTable(n, r);
  }

  uint64_t num_vertices() const { return bt.at(n, r); }

  void check_vertex(const VertexSet& v) const {
    if ((int)v.size() != r)
      throw std::invalid_argument("vertex has " + std::to_string(v.size()) +
                                  " elements, expected " + std::to_string(r));
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > n)
        throw std::invalid_argument("vertex element " + std::to_string(v[i]) +
                                    " outside [1," + std::to_string(n) + "]");
      if (i && v[i] <= v[i - 1])
        throw std::invalid_argument("vertex elements not strictly increasing");
    }
  }

  uint64_t rank(const VertexSet& v) const { return colex_rank(v.data(), r, bt); }
  VertexSet unrank(uint64_t rk) const {
    VertexSet v(r);
    colex_unrank(rk, n, r, bt, v.data());
    return v;
  }

  bool adjacent(const VertexSet& a, const VertexSet& b) const {
    check_vertex(a);
    check_vertex(b);
    int is = intersection_size(a.data(), r, b.data(), r);
    if (is == r) return false;  // same vertex
    return mode == Mode::Exact ? is == s : is >= s;
  }

  // Degree is vertex-independent. Exact mode: C(r,s) C(n-r,r-s).
  uint64_t degree() const {
    if (mode == Mode::Exact) return binom(r, s) * binom(n - r, r - s);
    uint64_t d = 0;
    for (int j = s; j < r; ++j) d += binom(r, j) * binom(n - r, r - j);
    return d;
  }

  // Lexicographic enumeration of all vertices; the callback takes either the
  // vertex alone or (rank, vertex).
  template <class Fn>
  void for_each_vertex(Fn&& fn) const {
    VertexSet v(r);
    first_subset(r, v.data());
    do {
      if constexpr (std::is_invocable_v<Fn&, uint64_t, const VertexSet&>)
        fn(rank(v), (const VertexSet&)v);
      else
        fn((const VertexSet&)v);
    } while (next_subset(n, r, v.data()));
  }

  // All neighbors of v, grouped by intersection size j (j = s for exact mode).
  template <class Fn>
  void for_each_neighbor(const VertexSet& v, Fn&& fn) const {
    check_vertex(v);
    std::vector<uint16_t> rest;
    rest.reserve(n - r);
    {
      size_t k = 0;
      for (int e = 1; e <= n; ++e) {
        if (k < v.size() && v[k] == e) { ++k; continue; }
        rest.push_back((uint16_t)e);
      }
    }
    int jhi = mode == Mode::Exact ? s : r - 1;
    for (int j = s; j <= jhi; ++j) {
      if (r - j > (int)rest.size()) continue;
      std::vector<uint16_t> keep(j), add(r - j);
      VertexSet b(r);
      // iterate j-subsets of v (indices) and (r-j)-subsets of rest (indices)
      std::vector<uint16_t> ki(j), ai(r - j);
      bool kf = true;
      if (j > 0) first_subset(j, ki.data());
      while (kf) {
        for (int i = 0; i < j; ++i) keep[i] = v[ki[i] - 1];
        bool af = true;
        if (r - j > 0) first_subset(r - j, ai.data());
        while (af) {
          for (int i = 0; i < r - j; ++i) add[i] = rest[ai[i] - 1];
          std::merge(keep.begin(), keep.end(), add.begin(), add.end(), b.begin());
          fn((const VertexSet&)b);
          af = (r - j > 0) && next_subset((int)rest.size(), r - j, ai.data());
        }
        kf = (j > 0) && next_subset(r, j, ki.data());
      }
    }
  }

  // Vertex/edge streams of the subgraph induced by a predicate. Each edge is
  // reported once, from the endpoint of smaller rank.
  template <class Pred, class Fn>
  void for_each_induced_vertex(Pred&& pred, Fn&& fn) const {
    for_each_vertex([&](const VertexSet& v) {
      if (pred(v)) fn(v);
    });
  }
  template <class Pred, class Fn>
  void for_each_induced_edge(Pred&& pred, Fn&& fn) const {
    for_each_vertex([&](const VertexSet& v) {
      if (!pred(v)) return;
      uint64_t rv = rank(v);
      for_each_neighbor(v, [&](const VertexSet& w) {
        if (rank(w) > rv && pred(w)) fn(v, w);
      });
    });
  }
};

struct Coloring {
  int n = 1, r = 1, s = 0;
  Mode mode = Mode::Exact;
  std::string method = "unknown";
  uint64_t seed = 0;
  int64_t repairs = 0;                // vertices recolored by repair passes
  std::vector<int32_t> color;         // indexed by colex rank; -1 = unassigned

  Coloring() = default;
  explicit Coloring(const KneserGraph& g, const std::string& method_ = "unknown",
                    uint64_t seed_ = 0)
      : n(g.n), r(g.r), s(g.s), mode(g.mode), method(method_), seed(seed_),
        color(g.num_vertices(), -1) {}

  bool total() const {
    for (int32_t c : color)
      if (c < 0) return false;
    return true;
  }
  int32_t max_color() const {
    int32_t m = -1;
    for (int32_t c : color) m = std::max(m, c);
    return m;
  }
  // Renumber used colors onto the contiguous range [0, k).
  void make_dense() {
    int32_t m = max_color();
    std::vector<int32_t> remap((size_t)m + 1, -1);
    for (int32_t c : color)
      if (c >= 0) remap[c] = 0;
    int32_t k = 0;
    for (auto& x : remap)
      if (x == 0) x = k++;
    for (auto& c : color)
      if (c >= 0) c = remap[c];
  }
  int32_t num_colors() const {
    std::vector<char> used((size_t)std::max<int32_t>(max_color() + 1, 0), 0);
    int32_t k = 0;
    for (int32_t c : color)
      if (c >= 0 && !used[c]) { used[c] = 1; ++k; }
    return k;
  }
};

struct VerificationReport {
  bool proper = false;
  uint64_t num_vertices = 0;
  int32_t num_colors = 0;
  uint64_t max_class_size = 0;
  uint64_t violation_count = 0;                        // total found
  std::vector<std::pair<VertexSet, VertexSet>> violations;  // first 100, lex order
  std::vector<uint64_t> class_sizes;                   // per color id
};

namespace detail {

// Violations inside one color class. Members sharing an s-subset are the only
// candidate pairs when s >= 1 (a pair meeting in >= s elements shares some
// s-subset of the intersection); s = 0 degenerates to all pairs.
inline void class_violations(const KneserGraph& g, const std::vector<uint64_t>& members,
                             std::vector<std::pair<uint64_t, uint64_t>>& out) {
  const int r = g.r, s = g.s;
  if (s == 0) {
    for (size_t i = 0; i < members.size(); ++i) {
      VertexSet a = g.unrank(members[i]);
      for (size_t j = i + 1; j < members.size(); ++j) {
        VertexSet b = g.unrank(members[j]);
        int is = intersection_size(a.data(), r, b.data(), r);
        bool adj = g.mode == Mode::Exact ? is == 0 : is < r;
        if (adj) out.emplace_back(std::min(members[i], members[j]),
                                  std::max(members[i], members[j]));
      }
    }
    return;
  }
  BinomTable bts(g.n, s);
  std::vector<std::pair<uint64_t, uint64_t>> keys;  // (s-subset colex rank, member rank)
  keys.reserve(members.size() * binom(r, s));
  std::vector<uint16_t> idx(s), sub(s);
  for (uint64_t m : members) {
    VertexSet v = g.unrank(m);
    first_subset(s, idx.data());
    do {
      for (int i = 0; i < s; ++i) sub[i] = v[idx[i] - 1];
      keys.emplace_back(colex_rank(sub.data(), s, bts), m);
    } while (next_subset(r, s, idx.data()));
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<uint64_t, uint64_t>> cand;
  for (size_t lo = 0; lo < keys.size();) {
    size_t hi = lo;
    while (hi < keys.size() && keys[hi].first == keys[lo].first) ++hi;
    for (size_t i = lo; i < hi; ++i)
      for (size_t j = i + 1; j < hi; ++j)
        cand.emplace_back(std::min(keys[i].second, keys[j].second),
                          std::max(keys[i].second, keys[j].second));
    lo = hi;
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (auto [a, b] : cand) {
    VertexSet va = g.unrank(a), vb = g.unrank(b);
    int is = intersection_size(va.data(), r, vb.data(), r);
    bool adj = g.mode == Mode::Exact ? is == s : (is >= s && is < r);
    if (adj) out.emplace_back(a, b);
  }
}

inline int thread_budget(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KNESER_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  return 1;
}

}  // namespace detail

struct VerifyOptions {
  bool edge_scan = false;  // additionally run the independent full edge scan
  int threads = 0;         // 0 = KNESER_THREADS env or 1
};

// Class-based verification: group vertices by color, find violating pairs per
// class. Optional cross-check by exhaustive edge scan; both paths must agree.
inline VerificationReport verify_coloring(const KneserGraph& g, const Coloring& c,
                                          VerifyOptions opt = {}) {
  if (c.n != g.n || c.r != g.r || c.s != g.s || c.mode != g.mode)
    throw std::invalid_argument("coloring is for a different graph");
  if (c.color.size() != g.num_vertices() || !c.total())
    throw std::invalid_argument("coloring is not a total assignment");

  VerificationReport rep;
  rep.num_vertices = g.num_vertices();
  int32_t kmax = c.max_color();
  std::vector<std::vector<uint64_t>> classes((size_t)kmax + 1);
  for (uint64_t v = 0; v < c.color.size(); ++v)
    classes[c.color[v]].push_back(v);

  rep.class_sizes.resize(classes.size(), 0);
  for (size_t k = 0; k < classes.size(); ++k) {
    rep.class_sizes[k] = classes[k].size();
    if (!classes[k].empty()) ++rep.num_colors;
    rep.max_class_size = std::max(rep.max_class_size, (uint64_t)classes[k].size());
  }

  int nthreads = std::min<int>(detail::thread_budget(opt.threads), (int)classes.size());
  std::vector<std::vector<std::pair<uint64_t, uint64_t>>> found(std::max(nthreads, 1));
  if (nthreads <= 1) {
    for (auto& cls : classes) detail::class_violations(g, cls, found[0]);
  } else {
    std::vector<std::thread> ths;
    for (int t = 0; t < nthreads; ++t)
      ths.emplace_back([&, t] {
        for (size_t k = t; k < classes.size(); k += nthreads)
          detail::class_violations(g, classes[k], found[t]);
      });
    for (auto& th : ths) th.join();
  }
  std::vector<std::pair<uint64_t, uint64_t>> viol;
  for (auto& f : found) viol.insert(viol.end(), f.begin(), f.end());
  std::sort(viol.begin(), viol.end());
  viol.erase(std::unique(viol.begin(), viol.end()), viol.end());

  if (opt.edge_scan) {
    std::vector<std::pair<uint64_t, uint64_t>> scan;
    g.for_each_vertex([&](const VertexSet& v) {
      uint64_t rv = g.rank(v);
      g.for_each_neighbor(v, [&](const VertexSet& w) {
        uint64_t rw = g.rank(w);
        if (rw > rv && c.color[rv] == c.color[rw]) scan.emplace_back(rv, rw);
      });
    });
    std::sort(scan.begin(), scan.end());
    scan.erase(std::unique(scan.begin(), scan.end()), scan.end());
    if (scan != viol)
      throw std::logic_error("verification paths disagree: class-based vs edge scan");
  }

  rep.violation_count = viol.size();
  rep.proper = viol.empty();
  size_t keep = std::min<size_t>(viol.size(), 100);
  rep.violations.reserve(keep);
  for (size_t i = 0; i < keep; ++i)
    rep.violations.emplace_back(g.unrank(viol[i].first), g.unrank(viol[i].second));
  return rep;
}

// ---- coloring file format ----
// line 1: #kneser n=<n> r=<r> s=<s> mode=<exact|atleast> method=<name> seed=<u64>
// then one line per vertex, lex order: <e1,e2,...,er>\t<color>

inline void write_coloring(std::ostream& os, const KneserGraph& g, const Coloring& c) {
  if (c.color.size() != g.num_vertices() || !c.total())
    throw std::invalid_argument("refusing to write a partial coloring");
  os << "#kneser n=" << g.n << " r=" << g.r << " s=" << g.s
     << " mode=" << mode_name(g.mode) << " method=" << c.method << " seed=" << c.seed
     << "\n";
  std::string line;
  g.for_each_vertex([&](const VertexSet& v) {
    line.clear();
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) line += ',';
      line += std::to_string(v[i]);
    }
    line += '\t';
    line += std::to_string(c.color[g.rank(v)]);
    line += '\n';
    os << line;
  });
}

namespace detail {
inline std::string header_field(const std::string& header, const std::string& key,
                                const char* what) {
  std::string pat = key + "=";
  size_t at = header.find(pat);
  if (at == std::string::npos)
    throw std::invalid_argument(std::string("header missing ") + what + " field '" + key + "'");
  size_t end = header.find(' ', at);
  return header.substr(at + pat.size(),
                       end == std::string::npos ? std::string::npos : end - at - pat.size());
}
}  // namespace detail

struct ColoringFile {
  KneserGraph g;
  Coloring c;
};

inline ColoringFile read_coloring(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("#kneser ", 0) != 0)
    throw std::invalid_argument("line 1: expected '#kneser ...' header");
  int n = std::stoi(detail::header_field(header, "n", "graph"));
  int r = std::stoi(detail::header_field(header, "r", "graph"));
  int s = std::stoi(detail::header_field(header, "s", "graph"));
  Mode mode = mode_from_name(detail::header_field(header, "mode", "graph"));
  std::string method = detail::header_field(header, "method", "metadata");
  uint64_t seed = std::stoull(detail::header_field(header, "seed", "metadata"));

  ColoringFile out{KneserGraph(n, r, s, mode), Coloring()};
  out.c.n = n; out.c.r = r; out.c.s = s; out.c.mode = mode;
  out.c.method = method;
  out.c.seed = seed;
  out.c.color.assign(out.g.num_vertices(), -1);

  std::string line;
  uint64_t lineno = 1;
  VertexSet v;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": missing tab separator");
    v.clear();
    size_t pos = 0;
    const std::string elems = line.substr(0, tab);
    while (pos <= elems.size()) {
      size_t comma = elems.find(',', pos);
      std::string tok = elems.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      try {
        int e = std::stoi(tok);
        if (e < 1 || e > n) throw std::out_of_range("element");
        v.push_back((uint16_t)e);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bad vertex element '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    int32_t col;
    try {
      col = std::stoi(line.substr(tab + 1));
      if (col < 0) throw std::out_of_range("color");
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad color value");
    }
    try {
      out.g.check_vertex(v);
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    uint64_t rk = out.g.rank(v);
    if (out.c.color[rk] >= 0)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate vertex");
    out.c.color[rk] = col;
  }
  if (!out.c.total())
    throw std::invalid_argument("coloring file does not cover all vertices");
  return out;
}

}  // namespace kneser::graph
