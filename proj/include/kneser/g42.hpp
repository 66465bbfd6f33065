#pragma once
// Coloring pipeline for G(n,4,2) with n = p^2 - 1: vertices are 4-subsets of
// the nonzero points of F_p^2 (point <-> element by enc = x*p + y). A 4-set
// whose five-point completion A = X u {-sum X} has pairwise non-collinear
// points lies in a unique member of the family; members split into GL2(F_p)
// orbits carrying determinant data (dependences, boxes, walls, 20-colorings),
// and everything else is covered by collinear-pair parts and a degenerate
// part. Final assembly verifies properness and repairs or fails loudly.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneser/algebra.hpp"
#include "kneser/designs.hpp"
#include "kneser/kneser_graph.hpp"
#include "kneser/rng.hpp"
#include "kneser/solver.hpp"

namespace kneser::g42 {

namespace alg = kneser::algebra;

inline uint16_t enc(const alg::FpVec& v) { return (uint16_t)(v.x * v.p + v.y); }
inline alg::FpVec dec(uint16_t e, uint32_t p) { return alg::FpVec(e / p, e % p, p); }

// ---- ordered 5-tuples and dependences ----

struct ATuple {
  uint32_t p = 5;
  std::array<alg::FpVec, 5> v;

  void validate() const {
    alg::FpVec sum(0, 0, p);
    for (const auto& x : v) {
      if (x.p != p) throw std::invalid_argument("tuple entries carry mixed moduli");
      if (x.zero()) throw std::invalid_argument("tuple entry is the zero vector");
      sum = sum + x;
    }
    if (!sum.zero()) throw std::invalid_argument("tuple entries do not sum to zero");
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (alg::collinear(v[i], v[j]))
          throw std::invalid_argument("tuple entries " + std::to_string(i) + "," +
                                      std::to_string(j) + " are collinear");
  }
};

inline ATuple tuple_from_points(uint32_t p,
                                const std::array<std::array<int64_t, 2>, 5>& pts) {
  ATuple a;
  a.p = p;
  for (int i = 0; i < 5; ++i) a.v[i] = alg::FpVec(pts[i][0], pts[i][1], p);
  a.validate();
  return a;
}

inline std::array<uint16_t, 5> sorted_encs(const ATuple& a) {
  std::array<uint16_t, 5> e;
  for (int i = 0; i < 5; ++i) e[i] = enc(a.v[i]);
  std::sort(e.begin(), e.end());
  return e;
}

// Lexicographically least ordering = ascending point encodings.
inline ATuple canonical(const ATuple& a) {
  ATuple c = a;
  std::sort(c.v.begin(), c.v.end(),
            [](const alg::FpVec& u, const alg::FpVec& w) { return enc(u) < enc(w); });
  return c;
}

inline ATuple act(const alg::FpOp& h, const ATuple& a) {
  ATuple b;
  b.p = a.p;
  for (int i = 0; i < 5; ++i) b.v[i] = alg::apply(h, a.v[i]);
  return b;
}

// Operator with columns (v_i, v_j); its determinant is cross(v_i, v_j).
inline alg::FpOp g_op(const ATuple& a, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 4 || j > 4)
    throw std::invalid_argument("g_op: need distinct indices in [0,5)");
  return alg::g_ab(a.v[i], a.v[j]);
}

struct Dependence {
  std::array<std::array<int32_t, 5>, 5> d{};  // diagonal unused, must stay 0

  void validate() const {
    int64_t total = 0;
    for (int i = 0; i < 5; ++i) {
      if (d[i][i] != 0) throw std::invalid_argument("dependence has a diagonal entry");
      for (int j = 0; j < 5; ++j) total += d[i][j];
    }
    if (total != 0) throw std::invalid_argument("dependence entries do not sum to zero");
  }
  int length() const {
    int64_t two = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) two += std::abs((int64_t)d[i][j] + d[j][i]);
    return (int)(two / 2);
  }
};

// prod over i != j of det(g_ij)^{d_ij}; det(g_ij) = cross(v_i, v_j).
inline alg::Fp eval_dependence(const Dependence& w, const ATuple& a) {
  w.validate();
  alg::Fp acc(1, a.p);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j || w.d[i][j] == 0) continue;
      alg::Fp det = alg::Fp::raw(alg::cross(a.v[i], a.v[j]), a.p);
      acc = acc * det.pow(w.d[i][j]);
    }
  return acc;
}

// Antisymmetric with even upper sum: such dependences evaluate to 1 on every
// tuple (det g_ji = -det g_ij pairs off, leaving (-1)^{sum}).
inline bool is_trivial(const Dependence& w) {
  w.validate();
  int64_t upper = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (w.d[i][j] + w.d[j][i] != 0) return false;
      upper += w.d[i][j];
    }
  return upper % 2 == 0;
}

namespace detail {

// Pair slots (i,j), i<j, in lex order; slot rank doubles as the psi value of
// g_ij (g_ji gets rank+10).
inline const std::array<std::array<int, 2>, 10>& pair_slots() {
  static const std::array<std::array<int, 2>, 10> slots = {{{0, 1},
                                                            {0, 2},
                                                            {0, 3},
                                                            {0, 4},
                                                            {1, 2},
                                                            {1, 3},
                                                            {1, 4},
                                                            {2, 3},
                                                            {2, 4},
                                                            {3, 4}}};
  return slots;
}

// Every dependence evaluates as (-1)^D * prod_{i<j} det(g_ij)^{e_ij} with
// e_ij = d_ij + d_ji and D freely adjustable in parity at fixed e (shift some
// d_ij by +-1 against d_ji). So nontrivial classes of length <= t are exactly
// the nonzero integer vectors e with sum e = 0 and positive part <= t, taken
// with either sign; one evaluates to 1 iff prod det^e = +-1.
inline bool short_scan(const std::array<int32_t, 10>& logs, uint32_t p, int t,
                       uint64_t budget) {
  const int64_t mod = p - 1;
  const int64_t half = mod / 2;
  uint64_t visited = 0;
  // slot-by-slot enumeration with positive/negative budgets and running log sum
  std::array<int32_t, 10> e{};
  bool found = false;
  auto rec = [&](auto&& self, int slot, int pos, int neg, int64_t lsum) -> void {
    if (found) return;
    if (slot == 10) {
      if (++visited > budget)
        throw std::runtime_error("dependence class enumeration exceeded budget of " +
                                 std::to_string(budget) + " classes");
      if (pos == neg && pos > 0) {
        int64_t r = ((lsum % mod) + mod) % mod;
        if (r == 0 || r == half) found = true;
      }
      return;
    }
    // remaining slots cannot rebalance more than the leftover budgets allow
    if (pos - neg > t - neg || neg - pos > t - pos) return;
    for (int val = -(t - neg); val <= t - pos; ++val) {
      e[slot] = val;
      int np = pos + (val > 0 ? val : 0);
      int nn = neg + (val < 0 ? -val : 0);
      self(self, slot + 1, np, nn, lsum + (int64_t)val * logs[slot]);
      if (found) return;
    }
  };
  rec(rec, 0, 0, 0, 0);
  return found;
}

}  // namespace detail

// True iff some nontrivial dependence class of length <= t evaluates to 1.
inline bool detect_short(const ATuple& a, int t, uint64_t budget = 50'000'000) {
  if (t < 0) throw std::invalid_argument("detect_short: t must be >= 0");
  if (a.p == 2) throw std::invalid_argument("detect_short: p=2 has degenerate signs");
  if (t == 0) return false;  // only the pure-sign class remains, and -1 != 1
  alg::UnitLog ul(a.p);
  std::array<int32_t, 10> logs;
  for (int slot = 0; slot < 10; ++slot) {
    auto [i, j] = detail::pair_slots()[slot];
    logs[slot] = ul.log[alg::cross(a.v[i], a.v[j])];
  }
  return detail::short_scan(logs, a.p, t, budget);
}

// Rejection-sampled valid tuple, returned in canonical order.
inline ATuple random_atuple(uint32_t p, SplitMix64& rng) {
  alg::check_modulus(p);
  if (p < 5) throw std::invalid_argument("no valid tuples exist for p < 5");
  const uint32_t n = p * p - 1;
  for (int tries = 0; tries < 100000; ++tries) {
    ATuple a;
    a.p = p;
    alg::FpVec sum(0, 0, p);
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      a.v[i] = dec((uint16_t)(1 + rng.next_below(n)), p);
      for (int j = 0; j < i; ++j)
        if (a.v[i] == a.v[j] || alg::collinear(a.v[i], a.v[j])) ok = false;
      if (ok) sum = sum + a.v[i];
    }
    if (!ok) continue;
    a.v[4] = -sum;
    if (a.v[4].zero()) continue;
    for (int j = 0; j < 4 && ok; ++j)
      if (a.v[4] == a.v[j] || alg::collinear(a.v[4], a.v[j])) ok = false;
    if (!ok) continue;
    return canonical(a);
  }
  throw std::logic_error("tuple sampling failed to converge");
}

// ---- the family ----

struct Family {
  uint32_t p = 5;
  uint32_t n = 24;  // p^2 - 1
  std::vector<std::array<uint16_t, 5>> members;  // ascending encs, lex-sorted
  std::vector<uint64_t> keys;                    // packed members, parallel
  std::vector<uint64_t> pair_off;                // CSR: pair key a*p^2+b (a<b)
  std::vector<int32_t> pair_mem;
  std::vector<uint64_t> coll;                    // enc x enc collinearity bits

  static uint64_t key_of(const std::array<uint16_t, 5>& m) {
    uint64_t k = 0;
    for (int i = 0; i < 5; ++i) k = (k << 8) | (uint64_t)m[i];
    return k;
  }
  bool collinear_enc(uint32_t a, uint32_t b) const {
    uint64_t bit = (uint64_t)a * (p * p) + b;
    return (coll[bit >> 6] >> (bit & 63)) & 1;
  }
  int64_t find(const std::array<uint16_t, 5>& m) const {
    uint64_t k = key_of(m);
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) return -1;
    return it - keys.begin();
  }
  ATuple tuple(int64_t idx) const {
    ATuple a;
    a.p = p;
    for (int i = 0; i < 5; ++i) a.v[i] = dec(members[idx][i], p);
    return a;
  }
  const int32_t* pair_begin(uint32_t a, uint32_t b) const {
    return pair_mem.data() + pair_off[(uint64_t)a * (p * p) + b];
  }
  const int32_t* pair_end(uint32_t a, uint32_t b) const {
    return pair_mem.data() + pair_off[(uint64_t)a * (p * p) + b + 1];
  }
};

// All 5-subsets of F_p^2 \ 0 with zero sum and pairwise non-collinear points,
// enumerated as sorted 4-prefixes with a determined fifth point above them.
inline Family build_family_A(uint32_t p) {
  alg::check_modulus(p);
  if (p < 5) throw std::invalid_argument("no valid tuples exist for p < 5");
  if (p > 13) throw std::invalid_argument("family enumeration is capped at p <= 13");
  Family fam;
  fam.p = p;
  fam.n = p * p - 1;
  const uint32_t p2 = p * p;

  fam.coll.assign(((uint64_t)p2 * p2 + 63) / 64, 0);
  for (uint32_t a = 1; a < p2; ++a)
    for (uint32_t b = 1; b < p2; ++b) {
      if (alg::cross(dec(a, p), dec(b, p)) == 0) {
        uint64_t bit = (uint64_t)a * p2 + b;
        fam.coll[bit >> 6] |= 1ull << (bit & 63);
      }
    }

  // negation table on encodings, and component sums done on encodings too
  std::vector<uint16_t> negEnc(p2, 0);
  for (uint32_t a = 1; a < p2; ++a) negEnc[a] = enc(-dec(a, p));
  auto addEnc = [&](uint32_t a, uint32_t b) -> uint16_t {
    uint32_t x = a / p + b / p, y = a % p + b % p;
    if (x >= p) x -= p;
    if (y >= p) y -= p;
    return (uint16_t)(x * p + y);
  };

  for (uint32_t e1 = 1; e1 < p2; ++e1)
    for (uint32_t e2 = e1 + 1; e2 < p2; ++e2) {
      if (fam.collinear_enc(e1, e2)) continue;
      uint16_t s12 = addEnc(e1, e2);
      for (uint32_t e3 = e2 + 1; e3 < p2; ++e3) {
        if (fam.collinear_enc(e1, e3) || fam.collinear_enc(e2, e3)) continue;
        uint16_t s13 = addEnc(s12, e3);
        for (uint32_t e4 = e3 + 1; e4 < p2; ++e4) {
          if (fam.collinear_enc(e1, e4) || fam.collinear_enc(e2, e4) ||
              fam.collinear_enc(e3, e4))
            continue;
          uint16_t e5 = negEnc[addEnc(s13, e4)];
          if (e5 <= e4) continue;  // zero fifth or out of order; sets are sorted
          if (fam.collinear_enc(e1, e5) || fam.collinear_enc(e2, e5) ||
              fam.collinear_enc(e3, e5) || fam.collinear_enc(e4, e5))
            continue;
          fam.members.push_back({(uint16_t)e1, (uint16_t)e2, (uint16_t)e3,
                                 (uint16_t)e4, e5});
        }
      }
    }

  fam.keys.resize(fam.members.size());
  for (size_t i = 0; i < fam.members.size(); ++i) fam.keys[i] = Family::key_of(fam.members[i]);

  // CSR from unordered point pairs to the members containing them
  std::vector<uint32_t> cnt((uint64_t)p2 * p2 + 1, 0);
  for (const auto& m : fam.members)
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) ++cnt[(uint64_t)m[i] * p2 + m[j] + 1];
  fam.pair_off.assign((uint64_t)p2 * p2 + 1, 0);
  for (uint64_t k = 1; k < fam.pair_off.size(); ++k)
    fam.pair_off[k] = fam.pair_off[k - 1] + cnt[k];
  fam.pair_mem.resize(fam.pair_off.back());
  std::vector<uint64_t> cursor(fam.pair_off.begin(), fam.pair_off.end() - 1);
  for (size_t idx = 0; idx < fam.members.size(); ++idx) {
    const auto& m = fam.members[idx];
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        fam.pair_mem[cursor[(uint64_t)m[i] * p2 + m[j]]++] = (int32_t)idx;
  }
  return fam;
}

// Members as blocks of a (n, 5, 4) design candidate: every 4-subset of the
// point set lies in at most one member (the fifth point is determined).
inline design::DesignFamily family_to_design(const Family& fam) {
  design::DesignFamily f;
  f.n = (int)fam.n;
  f.r = 5;
  f.s = 4;
  f.blocks.reserve(fam.members.size());
  for (const auto& m : fam.members)
    f.blocks.push_back({m[0], m[1], m[2], m[3], m[4]});
  return f;
}

// ---- parameters, orbits, walls ----

struct PipelineParams {
  uint32_t p = 5;
  int t = 3;       // dependence-length threshold
  int lam = 1;     // box radius
  int64_t q = -1;  // sampled box translates; -1 means "use p"
  uint64_t seed = 0;

  int64_t q_eff() const { return q < 0 ? (int64_t)p : q; }
  void validate() const {
    alg::check_modulus(p);
    if (p < 5) throw std::invalid_argument("pipeline requires p >= 5");
    if (t < 1) throw std::invalid_argument("pipeline requires t >= 1");
    if (lam < 1) throw std::invalid_argument("pipeline requires lambda >= 1");
    if (q_eff() < 1) throw std::invalid_argument("pipeline requires q >= 1");
  }
};

struct OrbitRecord {
  int32_t index = 0;
  int32_t rep = 0;                  // family index of the representative
  std::vector<int32_t> members;     // sorted family indices
  std::vector<alg::FpOp> ops;       // first realizing operator, parallel to members
  std::array<uint32_t, 10> dets{};  // det g_ij of the representative, slot order
  std::vector<uint32_t> tset;       // distinct determinant values, sorted
  bool is_short = false;
  std::vector<int32_t> wall;        // sorted member subset (long orbits only)
};

// Partition of the whole family into GL2 orbits, walked in enumeration order
// from the least-index unassigned representative. Shortness is an orbit
// invariant (determinant logs shift uniformly and sum e = 0), so it is
// computed once per representative.
inline std::vector<OrbitRecord> orbit_decompose(const Family& fam, int t) {
  std::vector<OrbitRecord> orbits;
  std::vector<int32_t> orbitOf(fam.members.size(), -1);
  const std::vector<alg::FpOp> gl2 = alg::gl2_enumerate(fam.p);

  for (size_t start = 0; start < fam.members.size(); ++start) {
    if (orbitOf[start] >= 0) continue;
    OrbitRecord rec;
    rec.index = (int32_t)orbits.size();
    rec.rep = (int32_t)start;
    ATuple repT = fam.tuple((int64_t)start);
    for (int slot = 0; slot < 10; ++slot) {
      auto [i, j] = detail::pair_slots()[slot];
      rec.dets[slot] = alg::cross(repT.v[i], repT.v[j]);
    }
    rec.tset.assign(rec.dets.begin(), rec.dets.end());
    std::sort(rec.tset.begin(), rec.tset.end());
    rec.tset.erase(std::unique(rec.tset.begin(), rec.tset.end()), rec.tset.end());
    rec.is_short = detect_short(repT, t);

    std::vector<std::pair<int32_t, alg::FpOp>> found;
    for (const alg::FpOp& h : gl2) {
      std::array<uint16_t, 5> img = sorted_encs(act(h, repT));
      int64_t idx = fam.find(img);
      if (idx < 0) throw std::logic_error("orbit walk left the family");
      if (orbitOf[idx] == -1) {
        orbitOf[idx] = rec.index;
        found.emplace_back((int32_t)idx, h);
      } else if (orbitOf[idx] != rec.index) {
        throw std::logic_error("orbit walk collided with another orbit");
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rec.members.reserve(found.size());
    rec.ops.reserve(found.size());
    for (auto& [idx, h] : found) {
      rec.members.push_back(idx);
      rec.ops.push_back(h);
    }
    orbits.push_back(std::move(rec));
  }
  return orbits;
}

// Multiplicative box over a 10-value determinant table: all +-prod a^{l_a}
// with exponents in [-lam, lam] summing to 0. The boundary is the outermost
// shell, box(lam) minus box(lam-1); both are closed under negation.
struct BoxPair {
  std::vector<uint8_t> box;       // indexed by unit value 1..p-1
  std::vector<uint8_t> boundary;  // subset of box
};

namespace detail {

inline std::vector<uint8_t> box_values(const std::array<uint32_t, 10>& tvals, int lam,
                                       const alg::UnitLog& ul) {
  const uint32_t p = ul.p;
  const int mod = (int)p - 1;
  const int width = 20 * lam + 1;  // running exponent sum in [-10lam, 10lam]
  std::vector<uint8_t> cur((size_t)mod * width, 0), nxt;
  cur[(size_t)0 * width + 10 * lam] = 1;  // log 0, exponent sum 0
  for (int a = 0; a < 10; ++a) {
    nxt.assign(cur.size(), 0);
    int32_t lg = ul.log[tvals[a]];
    for (int l = 0; l < mod; ++l)
      for (int s = 0; s < width; ++s) {
        if (!cur[(size_t)l * width + s]) continue;
        for (int la = -lam; la <= lam; ++la) {
          int ns = s + la;
          if (ns < 0 || ns >= width) continue;
          int nl = (int)(((int64_t)l + (int64_t)la * lg) % mod + mod) % mod;
          nxt[(size_t)nl * width + ns] = 1;
        }
      }
    cur.swap(nxt);
  }
  std::vector<uint8_t> in(p, 0);
  const int64_t half = mod / 2;
  for (int l = 0; l < mod; ++l)
    if (cur[(size_t)l * width + 10 * lam]) {
      in[ul.exp[l]] = 1;
      in[ul.exp[(l + half) % mod]] = 1;  // negation closure: times -1
    }
  return in;
}

}  // namespace detail

inline BoxPair build_box(const std::array<uint32_t, 10>& tvals, int lam,
                         const alg::UnitLog& ul) {
  if (lam < 1) throw std::invalid_argument("box radius must be >= 1");
  for (uint32_t v : tvals)
    if (v == 0 || v >= ul.p) throw std::invalid_argument("box table entry not a unit");
  BoxPair bp;
  bp.box = detail::box_values(tvals, lam, ul);
  std::vector<uint8_t> inner =
      lam == 1 ? std::vector<uint8_t>() : detail::box_values(tvals, lam - 1, ul);
  if (lam == 1) {
    inner.assign(ul.p, 0);
    inner[1] = 1;
    inner[ul.p - 1] = 1;  // radius-0 box: just +-1
  }
  bp.boundary.assign(ul.p, 0);
  for (uint32_t v = 1; v < ul.p; ++v)
    if (bp.box[v] && !inner[v]) bp.boundary[v] = 1;
  return bp;
}

// Per-orbit wall: sample q nonzero residues rho_i, take C = union of rho_i *
// box and its shell-boundary, R = units outside C, shift by a per-orbit random
// unit delta, and put every member whose realizing determinant lands in
// (boundary(C) u R) * delta on the wall. Short orbits and orbits with a
// degenerate determinant table are left untouched (they go to the residual
// pool wholesale). q = 0 is accepted as the degenerate "no sampling" case:
// C is empty, R is everything, the wall is the entire orbit.
inline void build_wall(const Family& fam, std::vector<OrbitRecord>& orbits,
                       const PipelineParams& params) {
  const uint32_t p = fam.p;
  alg::UnitLog ul(p);
  SplitMix64 master{params.seed};
  SplitMix64 wallRoot = master.split(0x77616c6c);  // independent lane per purpose
  const int64_t q = params.q < 0 ? params.q_eff() : params.q;
  for (OrbitRecord& rec : orbits) {
    rec.wall.clear();
    if (rec.is_short || rec.tset.size() != 10) continue;  // residual handling
    SplitMix64 rng = wallRoot.split((uint64_t)rec.index);
    BoxPair bp = build_box(rec.dets, params.lam, ul);
    std::vector<uint8_t> inC(p, 0), inBoundC(p, 0);
    for (int64_t i = 0; i < q; ++i) {
      uint32_t rho = (uint32_t)(1 + rng.next_below(p - 1));
      for (uint32_t v = 1; v < p; ++v) {
        uint32_t shifted = (uint32_t)((uint64_t)rho * v % p);
        if (bp.box[v]) inC[shifted] = 1;
        if (bp.boundary[v]) inBoundC[shifted] = 1;
      }
    }
    uint32_t delta = (uint32_t)(1 + rng.next_below(p - 1));
    std::vector<uint8_t> bad(p, 0);  // (boundary(C) u R) * delta
    for (uint32_t v = 1; v < p; ++v)
      if (inBoundC[v] || !inC[v]) bad[(uint32_t)((uint64_t)v * delta % p)] = 1;
    for (size_t k = 0; k < rec.members.size(); ++k)
      if (bad[rec.ops[k].det]) rec.wall.push_back(rec.members[k]);
  }
}

// ---- per-orbit 20-coloring ----

inline int psi_rank(int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 4 || j > 4)
    throw std::invalid_argument("psi_rank: need distinct indices in [0,5)");
  if (i < j) {
    int rank = 0;
    for (int slot = 0; slot < 10; ++slot) {
      auto [a, b] = detail::pair_slots()[slot];
      if (a == i && b == j) {
        rank = slot;
        break;
      }
    }
    return rank;
  }
  return psi_rank(j, i) + 10;
}

struct EGen {
  int i, j, k, l;  // target pair (i,j), source pair (k,l), both ordered
  int inc;         // psi(g_ij) - psi(g_kl) mod 20
};

// The 380 member-intersection generators: h' = h o g_ij o g_kl^{-1} maps the
// representative points v_k,v_l onto v_i,v_j.
inline std::vector<EGen> e_generators() {
  std::vector<EGen> out;
  out.reserve(380);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 5; ++l) {
          if (k == l || (i == k && j == l)) continue;
          int inc = ((psi_rank(i, j) - psi_rank(k, l)) % 20 + 20) % 20;
          out.push_back({i, j, k, l, inc});
        }
    }
  return out;
}

struct CayleyOutcome {
  std::vector<int8_t> color;     // by position in orbit.members; -1 = uncolored
  std::vector<int32_t> evicted;  // family indices dropped to the residual pool
  uint64_t conflicts = 0;
  int colors_used = 0;
};

// Breadth-first 20-coloring of an orbit minus its wall: roots get 0, each
// generator edge adds psi(target pair) - psi(source pair) mod 20. Conflicting
// re-derivations evict the reached member; survivors are re-verified pairwise
// and evicted until no intersecting pair shares a color.
inline CayleyOutcome cayley_color_orbit(const Family& fam, const OrbitRecord& orbit,
                                        bool ignore_wall = false) {
  CayleyOutcome out;
  const size_t m = orbit.members.size();
  out.color.assign(m, -1);
  ATuple rep = fam.tuple(orbit.rep);

  // psi must be a bijection on the 20 operators g_ij
  {
    std::vector<alg::FpOp> s;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) s.push_back(g_op(rep, i, j));
    for (size_t a = 0; a < s.size(); ++a)
      for (size_t b = a + 1; b < s.size(); ++b)
        if (s[a] == s[b])
          throw std::logic_error("psi is not a bijection: coincident pair operators");
  }

  std::vector<uint8_t> eligible(m, 1);
  if (!ignore_wall)
    for (int32_t w : orbit.wall) {
      auto it = std::lower_bound(orbit.members.begin(), orbit.members.end(), w);
      eligible[it - orbit.members.begin()] = 0;
    }

  // group elements of the 380 generators, acting on the representative
  std::vector<alg::FpOp> gmat;
  const std::vector<EGen> gens = e_generators();
  gmat.reserve(gens.size());
  for (const EGen& ge : gens)
    gmat.push_back(alg::compose(g_op(rep, ge.i, ge.j), alg::inverse(g_op(rep, ge.k, ge.l))));

  auto pos_of = [&](int64_t famIdx) -> int64_t {
    auto it = std::lower_bound(orbit.members.begin(), orbit.members.end(), (int32_t)famIdx);
    if (it == orbit.members.end() || *it != (int32_t)famIdx) return -1;
    return it - orbit.members.begin();
  };

  std::vector<uint8_t> evictedFlag(m, 0);
  std::deque<size_t> queue;
  for (size_t root = 0; root < m; ++root) {
    if (!eligible[root] || evictedFlag[root] || out.color[root] >= 0) continue;
    out.color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      size_t u = queue.front();
      queue.pop_front();
      if (evictedFlag[u]) continue;
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        ATuple img = act(alg::compose(orbit.ops[u], gmat[gi]), rep);
        int64_t famIdx = fam.find(sorted_encs(img));
        if (famIdx < 0) throw std::logic_error("generator image left the family");
        int64_t v = pos_of(famIdx);
        if (v < 0) throw std::logic_error("generator image left the orbit");
        if ((size_t)v == u || !eligible[v] || evictedFlag[v]) continue;
        int8_t want = (int8_t)((out.color[u] + gens[gi].inc) % 20);
        if (out.color[v] < 0) {
          out.color[v] = want;
          queue.push_back((size_t)v);
        } else if (out.color[v] != want) {
          ++out.conflicts;
          if (!evictedFlag[v]) {
            evictedFlag[v] = 1;
            out.color[v] = -1;
            out.evicted.push_back(orbit.members[v]);
          }
        }
      }
    }
  }

  // survivors: no two members meeting in >= 2 points may share a color
  for (bool again = true; again;) {
    again = false;
    for (size_t a = 0; a < m && !again; ++a) {
      if (out.color[a] < 0) continue;
      const auto& ma = fam.members[orbit.members[a]];
      for (size_t b = a + 1; b < m; ++b) {
        if (out.color[b] != out.color[a]) continue;
        const auto& mb = fam.members[orbit.members[b]];
        if (intersection_size(ma.data(), 5, mb.data(), 5) >= 2) {
          ++out.conflicts;
          evictedFlag[b] = 1;
          out.color[b] = -1;
          out.evicted.push_back(orbit.members[b]);
          again = true;
          break;
        }
      }
    }
  }
  std::sort(out.evicted.begin(), out.evicted.end());

  std::vector<uint8_t> used(20, 0);
  for (size_t a = 0; a < m; ++a)
    if (out.color[a] >= 0) used[out.color[a]] = 1;
  for (int cidx = 0; cidx < 20; ++cidx) out.colors_used += used[cidx];
  return out;
}

// ---- residual classification and the collinear cover ----

enum class VertexClass : uint32_t { Member = 0, CollinearPair = 1, Degenerate = 2 };

inline constexpr uint32_t kClassShift = 28;
inline uint32_t make_class(VertexClass t, uint32_t payload) {
  return ((uint32_t)t << kClassShift) | payload;
}
inline VertexClass class_tag(uint32_t cls) { return (VertexClass)(cls >> kClassShift); }
inline uint32_t class_payload(uint32_t cls) { return cls & ((1u << kClassShift) - 1); }

struct Classification {
  std::vector<uint32_t> cls;  // per vertex rank
  std::vector<std::array<uint16_t, 2>> pairs;  // collinear pairs, lex order
  std::vector<int32_t> pair_index;             // pair key a*p^2+b -> index, else -1
  uint64_t n_member = 0, n_pair = 0, n_degen = 0;
};

// Total classification of the 4-subsets: containing a collinear pair (payload:
// index of the lex-least such pair), or degenerate completion (fifth point
// zero or collinear with a chosen one; payload: encoded point sum), or inside
// a unique family member (payload: member index).
inline Classification classify_vertices(const Family& fam, const graph::KneserGraph& g) {
  if (g.n != (int)fam.n || g.r != 4 || g.s != 2 || g.mode != graph::Mode::Exact)
    throw std::invalid_argument("classification needs the exact G(p^2-1,4,2) graph");
  const uint32_t p = fam.p, p2 = p * p;
  Classification out;
  out.cls.assign(g.num_vertices(), 0);
  out.pair_index.assign((uint64_t)p2 * p2, -1);
  for (uint32_t a = 1; a < p2; ++a)
    for (uint32_t b = a + 1; b < p2; ++b)
      if (fam.collinear_enc(a, b)) {
        out.pair_index[(uint64_t)a * p2 + b] = (int32_t)out.pairs.size();
        out.pairs.push_back({(uint16_t)a, (uint16_t)b});
      }

  std::vector<uint16_t> negEnc(p2, 0);
  for (uint32_t a = 1; a < p2; ++a) negEnc[a] = enc(-dec(a, p));
  auto addEnc = [&](uint32_t a, uint32_t b) -> uint16_t {
    uint32_t x = a / p + b / p, y = a % p + b % p;
    if (x >= p) x -= p;
    if (y >= p) y -= p;
    return (uint16_t)(x * p + y);
  };

  g.for_each_vertex([&](uint64_t rank, const graph::VertexSet& v) {
    int32_t pairIdx = -1;
    for (int i = 0; i < 4 && pairIdx < 0; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (fam.collinear_enc(v[i], v[j])) {
          pairIdx = out.pair_index[(uint64_t)v[i] * p2 + v[j]];
          break;
        }
    if (pairIdx >= 0) {
      out.cls[rank] = make_class(VertexClass::CollinearPair, (uint32_t)pairIdx);
      ++out.n_pair;
      return;
    }
    uint16_t sum = addEnc(addEnc(v[0], v[1]), addEnc(v[2], v[3]));
    uint16_t fifth = negEnc[sum];
    bool degen = fifth == 0;
    for (int i = 0; i < 4 && !degen; ++i)
      if (fam.collinear_enc(fifth, v[i])) degen = true;
    if (degen) {
      out.cls[rank] = make_class(VertexClass::Degenerate, sum);
      ++out.n_degen;
      return;
    }
    std::array<uint16_t, 5> mem = {v[0], v[1], v[2], v[3], fifth};
    std::sort(mem.begin(), mem.end());
    int64_t idx = fam.find(mem);
    if (idx < 0) throw std::logic_error("completion of a clean 4-set is not in the family");
    out.cls[rank] = make_class(VertexClass::Member, (uint32_t)idx);
    ++out.n_member;
  });
  return out;
}

struct ResidualCover {
  solver::CoverSystem cover;  // part 0: degenerate completions; then one part
                              // per collinear pair {a,b} = all 4-sets above it
  std::vector<uint64_t> part_sizes;
  uint64_t u1_total = 0;                  // vertices outside the family's reach
  uint64_t measured_external_degree = 0;  // earlier-colored neighbors, max
};

// The cover of the non-member vertices. Parts overlap (a 4-set may hold
// several collinear pairs); the pair parts are full supersets closed over
// their pair. With `measure`, walks each vertex's neighborhood counting
// neighbors that are colored before it (members and evicted first, then parts
// in order) -- quadratic-ish, intended for the small primes.
inline ResidualCover residual_cover(const Family& fam, const graph::KneserGraph& g,
                                    const Classification& cls, bool measure) {
  ResidualCover out;
  const uint32_t p2 = fam.p * fam.p;
  BinomTable bt4(g.n, 4);

  std::vector<uint64_t> degen;
  for (uint64_t rank = 0; rank < cls.cls.size(); ++rank)
    if (class_tag(cls.cls[rank]) == VertexClass::Degenerate) degen.push_back(rank);
  out.u1_total = cls.n_pair + cls.n_degen;
  out.cover.parts.push_back(std::move(degen));

  for (const auto& pr : cls.pairs) {
    std::vector<uint64_t> part;
    std::array<uint16_t, 4> x;
    for (uint32_t c = 1; c < p2; ++c) {
      if (c == pr[0] || c == pr[1]) continue;
      for (uint32_t d = c + 1; d < p2; ++d) {
        if (d == pr[0] || d == pr[1]) continue;
        x = {pr[0], pr[1], (uint16_t)c, (uint16_t)d};
        std::sort(x.begin(), x.end());
        part.push_back(colex_rank(x.data(), 4, bt4));
      }
    }
    std::sort(part.begin(), part.end());
    out.cover.parts.push_back(std::move(part));
  }
  for (const auto& part : out.cover.parts) out.part_sizes.push_back(part.size());

  if (measure) {
    // simulate the coloring order: members first, then parts as listed
    std::vector<uint8_t> done(cls.cls.size(), 0);
    for (uint64_t rank = 0; rank < cls.cls.size(); ++rank)
      if (class_tag(cls.cls[rank]) == VertexClass::Member) done[rank] = 1;
    for (const auto& part : out.cover.parts) {
      std::vector<uint64_t> fresh;
      for (uint64_t rank : part) {
        if (done[rank]) continue;
        fresh.push_back(rank);
        uint64_t ext = 0;
        g.for_each_neighbor(g.unrank(rank), [&](const graph::VertexSet& w) {
          if (done[g.rank(w)]) ++ext;
        });
        out.measured_external_degree = std::max(out.measured_external_degree, ext);
      }
      for (uint64_t rank : fresh) done[rank] = 1;
    }
  }
  return out;
}

// ---- full pipeline ----

struct PipelineReport {
  uint32_t p = 0, n = 0;
  int t = 0, lam = 0;
  int64_t q = 0;
  uint64_t seed = 0;
  uint64_t family_size = 0;
  uint64_t short_count = 0;
  uint64_t orbit_count = 0;
  uint64_t wall_total = 0;
  uint64_t cayley_conflicts = 0;
  uint64_t evicted = 0;
  uint64_t colors_good = 0;
  uint64_t colors_residual = 0;
  uint64_t colors_total = 0;
  double ratio_to_n2_over_6 = 0.0;
  bool proper = false;
};

struct PipelineResult {
  graph::Coloring coloring;
  PipelineReport report;
};

namespace detail {

// Least color >= base not appearing on any already-colored neighbor; a full
// Delta-scan, used for evictions and repair where no structure is available.
inline int32_t least_free_full_scan(const graph::KneserGraph& g, const graph::Coloring& c,
                                    uint64_t rank, int32_t base) {
  std::vector<int32_t> taken;
  g.for_each_neighbor(g.unrank(rank), [&](const graph::VertexSet& w) {
    int32_t cw = c.color[g.rank(w)];
    if (cw >= base) taken.push_back(cw);
  });
  std::sort(taken.begin(), taken.end());
  taken.erase(std::unique(taken.begin(), taken.end()), taken.end());
  int32_t pick = base;
  for (int32_t t : taken) {
    if (t > pick) break;
    pick = t + 1;
  }
  return pick;
}

}  // namespace detail

inline PipelineResult color_g42(const PipelineParams& params) {
  params.validate();
  const uint32_t p = params.p;
  Family fam = build_family_A(p);
  const uint32_t n = fam.n;
  graph::KneserGraph g((int)n, 4, 2, graph::Mode::Exact);

  std::vector<OrbitRecord> orbits = orbit_decompose(fam, params.t);
  build_wall(fam, orbits, params);

  PipelineReport rep;
  rep.p = p;
  rep.n = n;
  rep.t = params.t;
  rep.lam = params.lam;
  rep.q = params.q_eff();
  rep.seed = params.seed;
  rep.family_size = fam.members.size();
  rep.orbit_count = orbits.size();

  // member -> orbit and the per-member 20-coloring of the colorable orbits
  std::vector<int32_t> orbitOf(fam.members.size(), -1);
  std::vector<int8_t> cayley(fam.members.size(), -1);
  std::vector<uint8_t> residualMember(fam.members.size(), 0);
  bool anyGood = false;
  for (const OrbitRecord& rec : orbits) {
    for (int32_t idx : rec.members) orbitOf[idx] = rec.index;
    if (rec.is_short) {
      rep.short_count += rec.members.size();
      for (int32_t idx : rec.members) residualMember[idx] = 1;
      continue;
    }
    rep.wall_total += rec.wall.size();
    if (rec.tset.size() != 10) {  // degenerate determinant table
      for (int32_t idx : rec.members) residualMember[idx] = 1;
      continue;
    }
    CayleyOutcome oc = cayley_color_orbit(fam, rec);
    rep.cayley_conflicts += oc.conflicts;
    rep.evicted += oc.evicted.size();
    for (size_t k = 0; k < rec.members.size(); ++k) {
      if (oc.color[k] >= 0) {
        cayley[rec.members[k]] = oc.color[k];
        anyGood = true;
      } else {
        residualMember[rec.members[k]] = 1;  // wall or evicted
      }
    }
  }

  Classification cls = classify_vertices(fam, g);
  graph::Coloring c(g, "g42", params.seed);

  // good vertices inherit orbit block + member 20-color
  const int32_t reserveBase = anyGood ? (int32_t)(20 * orbits.size()) : 0;
  for (uint64_t rank = 0; rank < cls.cls.size(); ++rank) {
    if (class_tag(cls.cls[rank]) != VertexClass::Member) continue;
    uint32_t m = class_payload(cls.cls[rank]);
    if (!residualMember[m])
      c.color[rank] = 20 * orbitOf[m] + cayley[m];
  }

  // residual members: greedy on the member quotient (two members sharing a
  // point pair may carry intersecting 4-sets, so they must differ; members
  // sharing fewer than 2 points cannot)
  std::vector<int32_t> memberColor(fam.members.size(), -1);
  int32_t quotMax = -1;
  {
    std::vector<uint32_t> stamp;
    uint32_t tick = 0;
    for (size_t m = 0; m < fam.members.size(); ++m) {
      if (!residualMember[m]) continue;
      ++tick;
      const auto& mem = fam.members[m];
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          const int32_t* it = fam.pair_begin(mem[i], mem[j]);
          const int32_t* end = fam.pair_end(mem[i], mem[j]);
          for (; it != end; ++it) {
            int32_t mc = memberColor[*it];
            if (mc >= 0) {
              if ((size_t)mc >= stamp.size()) stamp.resize(mc + 64, 0);
              stamp[mc] = tick;
            }
          }
        }
      int32_t pick = 0;
      while ((size_t)pick < stamp.size() && stamp[pick] == tick) ++pick;
      memberColor[m] = pick;
      quotMax = std::max(quotMax, pick);
    }
  }
  for (uint64_t rank = 0; rank < cls.cls.size(); ++rank) {
    if (class_tag(cls.cls[rank]) != VertexClass::Member) continue;
    uint32_t m = class_payload(cls.cls[rank]);
    if (residualMember[m]) c.color[rank] = reserveBase + memberColor[m];
  }

  // non-member vertices
  if (p <= 7) {
    // combine the collinear cover against the ambient coloring; palette
    // {0..Delta} shared with the quotient colors keeps the total at Delta+1
    ResidualCover rc = residual_cover(fam, g, cls, false);
    solver::CoverSystem cover = std::move(rc.cover);
    cover.l = 1;
    cover.d = (int)g.degree();
    if (reserveBase + quotMax >= cover.l + cover.d)
      throw std::logic_error("quotient colors spilled past the shared palette");
    solver::CombineStats stats;
    c = solver::cover_combine(g, cover, nullptr, &c, &stats);
    c.method = "g42";
    c.seed = params.seed;
  } else {
    // blocked palettes: each collinear-pair part owns a stride of p^2 colors
    // above the quotient block and colors by least extra point (two 4-sets
    // over the same pair intersect in exactly 2 only if their extras are
    // disjoint, and then their least extras differ); degenerate vertices get
    // per-point-sum blocks colored greedily within the block.
    const uint32_t p2 = p * p;
    const int32_t pairBase = reserveBase + quotMax + 1;
    int32_t top = pairBase + (int32_t)(cls.pairs.size() * p2);
    for (uint64_t rank = 0; rank < cls.cls.size(); ++rank) {
      if (class_tag(cls.cls[rank]) != VertexClass::CollinearPair) continue;
      graph::VertexSet v = g.unrank(rank);
      const auto& pr = cls.pairs[class_payload(cls.cls[rank])];
      uint16_t least = 0;
      for (int i = 0; i < 4; ++i)
        if (v[i] != pr[0] && v[i] != pr[1]) {
          least = v[i];
          break;
        }
      c.color[rank] = pairBase + (int32_t)(class_payload(cls.cls[rank]) * p2) + least;
    }

    // degenerate part: group by point sum; within a group, X' = Z u {cc,dd}
    // with cc+dd = sum - sum(Z) enumerates every same-group neighbor
    BinomTable bt4(g.n, 4);
    std::vector<std::pair<uint32_t, uint64_t>> stars;  // (sum enc, rank)
    for (uint64_t rank = 0; rank < cls.cls.size(); ++rank)
      if (class_tag(cls.cls[rank]) == VertexClass::Degenerate)
        stars.emplace_back(class_payload(cls.cls[rank]), rank);
    std::sort(stars.begin(), stars.end());
    std::vector<std::pair<uint64_t, int32_t>> offsets;  // rank -> offset, per group
    std::vector<uint16_t> negEnc(p2, 0);
    for (uint32_t a = 1; a < p2; ++a) negEnc[a] = enc(-dec(a, p));
    auto addEnc = [&](uint32_t a, uint32_t b) -> uint16_t {
      uint32_t x = a / p + b / p, y = a % p + b % p;
      if (x >= p) x -= p;
      if (y >= p) y -= p;
      return (uint16_t)(x * p + y);
    };
    size_t gi = 0;
    while (gi < stars.size()) {
      size_t ge = gi;
      while (ge < stars.size() && stars[ge].first == stars[gi].first) ++ge;
      const uint32_t sum = stars[gi].first;
      offsets.clear();
      for (size_t k = gi; k < ge; ++k) {
        uint64_t rank = stars[k].second;
        graph::VertexSet v = g.unrank(rank);
        std::vector<int32_t> taken;
        std::array<uint16_t, 4> x;
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b) {
            // Z = v minus positions a,b; needed pair sums to sum - sum(Z)
            uint16_t z1 = 0, z2 = 0;
            for (int q2 = 0; q2 < 4; ++q2) {
              if (q2 == a || q2 == b) continue;
              (z1 ? z2 : z1) = v[q2];
            }
            uint16_t rest = addEnc(sum, negEnc[addEnc(z1, z2)]);
            for (uint32_t cc = 1; cc < p2; ++cc) {
              uint16_t dd = addEnc(rest, negEnc[cc]);
              if (dd == 0 || dd <= cc) continue;
              if (cc == z1 || cc == z2 || dd == z1 || dd == z2) continue;
              if (cc == v[a] || cc == v[b] || dd == v[a] || dd == v[b]) continue;
              x = {z1, z2, (uint16_t)cc, dd};
              std::sort(x.begin(), x.end());
              uint64_t nr = colex_rank(x.data(), 4, bt4);
              if (class_tag(cls.cls[nr]) != VertexClass::Degenerate) continue;
              auto it = std::lower_bound(offsets.begin(), offsets.end(),
                                         std::make_pair(nr, (int32_t)-1));
              if (it != offsets.end() && it->first == nr) taken.push_back(it->second);
            }
          }
        std::sort(taken.begin(), taken.end());
        taken.erase(std::unique(taken.begin(), taken.end()), taken.end());
        int32_t pick = 0;
        for (int32_t tcol : taken) {
          if (tcol > pick) break;
          pick = tcol + 1;
        }
        offsets.emplace_back(rank, pick);  // ranks arrive ascending; stays sorted
      }
      int32_t width = 0;
      for (auto& [rank, off] : offsets) width = std::max(width, off + 1);
      for (auto& [rank, off] : offsets) c.color[rank] = top + off;
      top += width;
      gi = ge;
    }
  }

  for (uint64_t rank = 0; rank < c.color.size(); ++rank)
    if (c.color[rank] < 0)
      throw std::logic_error("pipeline left vertex rank " + std::to_string(rank) +
                             " uncolored");

  // hard properness postcondition with a bounded repair loop
  graph::VerifyOptions vo;
  graph::VerificationReport vr = graph::verify_coloring(g, c, vo);
  for (int round = 0; !vr.proper && round < 10; ++round) {
    std::vector<uint64_t> bad;
    for (const auto& pr : vr.violations) {
      bad.push_back(g.rank(pr.first));
      bad.push_back(g.rank(pr.second));
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    for (uint64_t rank : bad) {
      c.color[rank] = detail::least_free_full_scan(g, c, rank, 0);
      ++c.repairs;
    }
    vr = graph::verify_coloring(g, c, vo);
  }
  if (!vr.proper) {
    std::string msg = "pipeline coloring is improper after repairs; sample violations:";
    for (size_t k = 0; k < vr.violations.size() && k < 5; ++k)
      msg += " (" + std::to_string(g.rank(vr.violations[k].first)) + "," +
             std::to_string(g.rank(vr.violations[k].second)) + ")";
    throw std::runtime_error(msg);
  }

  // color accounting on the final assignment
  {
    std::vector<int32_t> good, resid;
    for (uint64_t rank = 0; rank < cls.cls.size(); ++rank) {
      bool isGood = class_tag(cls.cls[rank]) == VertexClass::Member &&
                    !residualMember[class_payload(cls.cls[rank])];
      (isGood ? good : resid).push_back(c.color[rank]);
    }
    auto distinct = [](std::vector<int32_t>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return (uint64_t)v.size();
    };
    rep.colors_good = distinct(good);
    rep.colors_residual = distinct(resid);
  }
  c.make_dense();
  rep.colors_total = c.num_colors();
  rep.ratio_to_n2_over_6 = (double)rep.colors_total / ((double)n * n / 6.0);
  rep.proper = true;

  return PipelineResult{std::move(c), std::move(rep)};
}

struct StatsReport {
  uint32_t p = 0, n = 0;
  uint64_t family_size = 0;
  uint64_t orbit_count = 0;
  uint64_t short_count = 0;
  double short_fraction = 0.0;
};

inline StatsReport g42_stats(uint32_t p, int t) {
  Family fam = build_family_A(p);
  std::vector<OrbitRecord> orbits = orbit_decompose(fam, t);
  StatsReport sr;
  sr.p = p;
  sr.n = fam.n;
  sr.family_size = fam.members.size();
  sr.orbit_count = orbits.size();
  for (const OrbitRecord& rec : orbits)
    if (rec.is_short) sr.short_count += rec.members.size();
  sr.short_fraction =
      sr.family_size ? (double)sr.short_count / (double)sr.family_size : 0.0;
  return sr;
}

}  // namespace kneser::g42
