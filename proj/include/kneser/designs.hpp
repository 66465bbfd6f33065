#pragma once
// Block-design predicates and the resolution-based colorer: an (n,k,r)-design
// split into (n,k,s)-designs colors G(n,r,s) with one color per part (each
// r-set inherits the part index of its unique containing block). Ships a
// round-robin 1-factorization generator as the desk-scale witness for
// (r,s) = (2,1); larger resolutions are inputs, never synthesized.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneser/kneser_graph.hpp"

namespace kneser::design {

using Block = std::vector<uint16_t>;  // sorted, distinct, 1-based

struct DesignFamily {
  int n = 1;          // ground set [n]
  int r = 1;          // block size
  int s = 0;          // declared strength
  std::vector<Block> blocks;
};

struct DesignReport {
  bool exact_pass = false;    // every s-subset in exactly one block
  bool approx_pass = false;   // every s-subset in at most one block
  uint64_t uncovered_count = 0;
  double uncovered_fraction = 0.0;
  uint64_t multi_covered_count = 0;
};

inline void check_block(const Block& b, int n, int r, const std::string& where) {
  if ((int)b.size() != r)
    throw std::invalid_argument(where + ": block has " + std::to_string(b.size()) +
                                " elements, expected " + std::to_string(r));
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1 || b[i] > n)
      throw std::invalid_argument(where + ": element " + std::to_string(b[i]) +
                                  " outside [1," + std::to_string(n) + "]");
    if (i && b[i] <= b[i - 1])
      throw std::invalid_argument(where + ": elements not strictly increasing");
  }
}

// Counts containing blocks for every s-subset of [n].
inline DesignReport check_design(const DesignFamily& f) {
  if (!(0 <= f.s && f.s <= f.r && f.r <= f.n))
    throw std::invalid_argument("check_design: need 0 <= s <= r <= n");
  uint64_t total = binom(f.n, f.s);
  BinomTable bts(f.n, f.s);
  std::vector<uint32_t> count(total, 0);
  std::vector<uint16_t> idx(f.s), sub(f.s);
  for (size_t bi = 0; bi < f.blocks.size(); ++bi) {
    const Block& b = f.blocks[bi];
    check_block(b, f.n, f.r, "block " + std::to_string(bi));
    if (f.s == 0) {
      ++count[0];
      continue;
    }
    first_subset(f.s, idx.data());
    do {
      for (int i = 0; i < f.s; ++i) sub[i] = b[idx[i] - 1];
      ++count[colex_rank(sub.data(), f.s, bts)];
    } while (next_subset(f.r, f.s, idx.data()));
  }
  DesignReport rep;
  for (uint32_t c : count) {
    if (c == 0) ++rep.uncovered_count;
    if (c > 1) ++rep.multi_covered_count;
  }
  rep.uncovered_fraction = total ? (double)rep.uncovered_count / (double)total : 0.0;
  rep.exact_pass = rep.uncovered_count == 0 && rep.multi_covered_count == 0;
  rep.approx_pass = rep.multi_covered_count == 0;
  return rep;
}

struct Resolution {
  int n = 1;
  int r = 1;  // block size, shared by all parts
  std::vector<std::vector<Block>> parts;

  DesignFamily whole(int strength) const {
    DesignFamily f{n, r, strength, {}};
    for (const auto& p : parts) f.blocks.insert(f.blocks.end(), p.begin(), p.end());
    return f;
  }
  DesignFamily part(size_t i, int strength) const {
    return DesignFamily{n, r, strength, parts.at(i)};
  }
};

// Round-robin (circle method) 1-factorization of K_n: n-1 perfect matchings
// partitioning all pairs. Player n sits fixed; the others rotate.
inline Resolution one_factorization(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("one_factorization: n must be even and >= 2, got " +
                                std::to_string(n));
  Resolution res;
  res.n = n;
  res.r = 2;
  const int m = n - 1;
  for (int round = 0; round < m; ++round) {
    std::vector<Block> matching;
    {
      uint16_t a = (uint16_t)(round + 1), b = (uint16_t)n;
      matching.push_back({std::min(a, b), std::max(a, b)});
    }
    for (int i = 1; i <= n / 2 - 1; ++i) {
      uint16_t a = (uint16_t)((round + i) % m + 1);
      uint16_t b = (uint16_t)(((round - i) % m + m) % m + 1);
      matching.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(matching.begin(), matching.end());
    res.parts.push_back(std::move(matching));
  }
  return res;
}

// Colors each r-set of the target graph with the index of the part owning its
// unique containing block. Requires the resolution's blocks to cover every
// r-set exactly once across parts (the strength-r design property).
inline graph::Coloring resolution_coloring(const Resolution& res, const graph::KneserGraph& g) {
  if (res.n != g.n)
    throw std::invalid_argument("resolution ground set does not match graph");
  if (res.r < g.r)
    throw std::invalid_argument("resolution blocks smaller than the graph's r");
  graph::Coloring c(g, "factorization", 0);
  std::vector<int32_t>& col = c.color;
  BinomTable btr(g.n, g.r);
  std::vector<uint16_t> idx(g.r), sub(g.r);
  for (size_t pi = 0; pi < res.parts.size(); ++pi) {
    for (const Block& b : res.parts[pi]) {
      check_block(b, res.n, res.r, "part " + std::to_string(pi));
      first_subset(g.r, idx.data());
      do {
        for (int i = 0; i < g.r; ++i) sub[i] = b[idx[i] - 1];
        uint64_t rk = colex_rank(sub.data(), g.r, btr);
        if (col[rk] >= 0 && col[rk] != (int32_t)pi) {
          std::string name;
          for (int i = 0; i < g.r; ++i) name += (i ? "," : "") + std::to_string(sub[i]);
          throw std::runtime_error("r-set {" + name + "} lies in blocks of parts " +
                                   std::to_string(col[rk]) + " and " + std::to_string(pi));
        }
        col[rk] = (int32_t)pi;
      } while (next_subset(res.r, g.r, idx.data()));
    }
  }
  for (uint64_t v = 0; v < col.size(); ++v)
    if (col[v] < 0) {
      graph::VertexSet vs = g.unrank(v);
      std::string name;
      for (int i = 0; i < g.r; ++i) name += (i ? "," : "") + std::to_string(vs[i]);
      throw std::runtime_error("r-set {" + name + "} is contained in no block");
    }
  return c;
}

// Closed-form color count of the resolution colorer on G(n,r,s) when the
// resolution is a complete (n,k,r) -> (n,k,s) decomposition, k = 2r-s-1:
// N = [C(n,r)/C(k,r)] / [C(n,s)/C(k,s)].
inline uint64_t resolution_color_bound(int n, int r, int s) {
  int k = 2 * r - s - 1;
  uint64_t blocks = binom(n, r) / binom(k, r);
  uint64_t per_part = binom(n, s) / binom(k, s);
  return blocks / per_part;
}

// All r-sets containing a fixed core; independent in exact-mode G(n,r,s) when
// |core| = s+1, with exactly C(n-s-1, r-s-1) members.
inline std::vector<graph::VertexSet> star_family(int n, int r, int s,
                                                 const graph::VertexSet& core) {
  if ((int)core.size() != s + 1)
    throw std::invalid_argument("star core must have s+1 elements");
  for (size_t i = 0; i < core.size(); ++i) {
    if (core[i] < 1 || core[i] > n) throw std::invalid_argument("star core out of range");
    if (i && core[i] <= core[i - 1])
      throw std::invalid_argument("star core not strictly increasing");
  }
  std::vector<uint16_t> rest;
  for (int e = 1; e <= n; ++e)
    if (!std::binary_search(core.begin(), core.end(), (uint16_t)e))
      rest.push_back((uint16_t)e);
  int extra = r - (int)core.size();
  if (extra < 0) throw std::invalid_argument("star core larger than r");
  std::vector<graph::VertexSet> out;
  std::vector<uint16_t> idx(extra);
  graph::VertexSet v(r);
  bool go = true;
  if (extra > 0) first_subset(extra, idx.data());
  while (go) {
    std::vector<uint16_t> add(extra);
    for (int i = 0; i < extra; ++i) add[i] = rest[idx[i] - 1];
    std::merge(core.begin(), core.end(), add.begin(), add.end(), v.begin());
    out.push_back(v);
    go = extra > 0 && next_subset((int)rest.size(), extra, idx.data());
  }
  return out;
}

// ---- design / resolution file format ----
// header: #design n=<n> r=<r> s=<s>
// one block per line, comma-joined sorted integers; parts separated by '%'.

inline void write_design(std::ostream& os, const Resolution& res, int s) {
  os << "#design n=" << res.n << " r=" << res.r << " s=" << s << "\n";
  for (size_t pi = 0; pi < res.parts.size(); ++pi) {
    if (pi) os << "%\n";
    for (const Block& b : res.parts[pi]) {
      for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
      os << "\n";
    }
  }
}

struct DesignFile {
  Resolution res;
  int s = 0;  // declared strength from the header
};

inline DesignFile read_design(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("#design ", 0) != 0)
    throw std::invalid_argument("line 1: expected '#design ...' header");
  DesignFile out;
  out.res.n = std::stoi(graph::detail::header_field(header, "n", "design"));
  out.res.r = std::stoi(graph::detail::header_field(header, "r", "design"));
  out.s = std::stoi(graph::detail::header_field(header, "s", "design"));
  out.res.parts.emplace_back();
  std::string line;
  uint64_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line == "%") {
      out.res.parts.emplace_back();
      continue;
    }
    Block b;
    size_t pos = 0;
    while (pos <= line.size()) {
      size_t comma = line.find(',', pos);
      std::string tok = line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      try {
        b.push_back((uint16_t)std::stoi(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bad block element '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    check_block(b, out.res.n, out.res.r, "line " + std::to_string(lineno));
    out.res.parts.back().push_back(std::move(b));
  }
  return out;
}

}  // namespace kneser::design
