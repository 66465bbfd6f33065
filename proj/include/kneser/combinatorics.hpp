#pragma once
// Small combinatorial utilities shared across the library: exact binomials,
// colex ranking of sorted subsets, lexicographic subset iteration.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kneser {

inline uint64_t binom(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact at every step for this order
    if (acc > (unsigned __int128)UINT64_MAX)
      throw std::overflow_error("binom: value exceeds 64 bits");
  }
  return (uint64_t)acc;
}

// Precomputed C(x, k) for x in [0, n], k in [0, r]; used in ranking hot paths.
struct BinomTable {
  int n = 0, r = 0;
  std::vector<uint64_t> c;  // (n+1) x (r+1)
  BinomTable() = default;
  BinomTable(int n_, int r_) : n(n_), r(r_), c((size_t)(n_ + 1) * (r_ + 1), 0) {
    for (int x = 0; x <= n; ++x) {
      at(x, 0) = 1;
      for (int k = 1; k <= r; ++k)
        at(x, k) = (x == 0) ? 0 : at(x - 1, k - 1) + at(x - 1, k);
    }
  }
  uint64_t& at(int x, int k) { return c[(size_t)x * (r + 1) + k]; }
  uint64_t at(int x, int k) const { return c[(size_t)x * (r + 1) + k]; }
};

// Colex rank of a sorted subset of {1,..,n}: rank = sum C(e_i - 1, i+1).
// Independent of n; bijective onto [0, C(n,r)) for r-subsets of [1,n].
inline uint64_t colex_rank(const uint16_t* e, int r, const BinomTable& bt) {
  uint64_t rk = 0;
  for (int i = 0; i < r; ++i) rk += bt.at(e[i] - 1, i + 1);
  return rk;
}

inline void colex_unrank(uint64_t rk, int n, int r, const BinomTable& bt, uint16_t* out) {
  int x = n;
  for (int i = r; i >= 1; --i) {
    while (bt.at(x - 1, i) > rk) --x;
    out[i - 1] = (uint16_t)x;
    rk -= bt.at(x - 1, i);
  }
}

// Lexicographic iteration over r-subsets of {1..n} as sorted arrays.
inline void first_subset(int r, uint16_t* e) {
  for (int i = 0; i < r; ++i) e[i] = (uint16_t)(i + 1);
}

inline bool next_subset(int n, int r, uint16_t* e) {
  int i = r - 1;
  while (i >= 0 && e[i] == n - (r - 1 - i)) --i;
  if (i < 0) return false;
  ++e[i];
  for (int j = i + 1; j < r; ++j) e[j] = (uint16_t)(e[j - 1] + 1);
  return true;
}

// Reusable O(1)-clear marker set over a dense integer domain.
struct StampSet {
  std::vector<uint32_t> stamp;
  uint32_t epoch = 0;
  explicit StampSet(size_t n = 0) : stamp(n, 0) {}
  void reset(size_t n) { stamp.assign(n, 0); epoch = 0; }
  void clear() {
    if (++epoch == 0) { std::fill(stamp.begin(), stamp.end(), 0); epoch = 1; }
  }
  bool insert(size_t v) {  // returns true if newly inserted
    if (stamp[v] == epoch) return false;
    stamp[v] = epoch;
    return true;
  }
  bool contains(size_t v) const { return stamp[v] == epoch; }
};

inline int intersection_size(const uint16_t* a, int ra, const uint16_t* b, int rb) {
  int i = 0, j = 0, c = 0;
  while (i < ra && j < rb) {
    if (a[i] == b[j]) { ++c; ++i; ++j; }
    else if (a[i] < b[j]) ++i;
    else ++j;
  }
  return c;
}

}  // namespace kneser
