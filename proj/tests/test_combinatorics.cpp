#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "kneser/combinatorics.hpp"
#include "kneser/rng.hpp"

using namespace kneser;

namespace {

// Pascal-triangle oracle, no closed forms shared with the implementation.
std::vector<std::vector<uint64_t>> pascal(int nmax) {
  std::vector<std::vector<uint64_t>> c(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    c[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

}  // namespace

TEST_CASE("binomial coefficients match the Pascal oracle") {
  auto c = pascal(40);
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) REQUIRE(binom(n, k) == c[n][k]);
  REQUIRE(binom(5, 9) == 0);
  REQUIRE(binom(0, 0) == 1);
}

TEST_CASE("binomial overflow is reported, not wrapped") {
  REQUIRE_THROWS_AS(binom(500, 250), std::overflow_error);
  REQUIRE(binom(64, 32) > 0);  // large but in range
}

TEST_CASE("BinomTable agrees with binom on its whole domain") {
  BinomTable bt(20, 6);
  for (int x = 0; x <= 20; ++x)
    for (int k = 0; k <= 6; ++k) REQUIRE(bt.at(x, k) == binom(x, k));
}

TEST_CASE("subset enumeration is lexicographic, complete, and duplicate-free") {
  const int n = 9;
  for (int r = 1; r <= n; ++r) {
    BinomTable bt(n, r);
    std::vector<uint16_t> e(r);
    first_subset(r, e.data());
    std::set<std::vector<uint16_t>> seen;
    std::vector<uint16_t> prev;
    uint64_t count = 0;
    do {
      std::vector<uint16_t> cur(e.begin(), e.end());
      REQUIRE(std::is_sorted(cur.begin(), cur.end()));
      REQUIRE(cur.front() >= 1);
      REQUIRE(cur.back() <= n);
      if (!prev.empty()) REQUIRE(std::lexicographical_compare(prev.begin(), prev.end(),
                                                              cur.begin(), cur.end()));
      REQUIRE(seen.insert(cur).second);
      prev = cur;
      ++count;
    } while (next_subset(n, r, e.data()));
    REQUIRE(count == binom(n, r));
  }
}

TEST_CASE("colex rank and unrank are inverse bijections") {
  const int n = 11;
  for (int r = 1; r <= 5; ++r) {
    BinomTable bt(n, r);
    std::vector<uint16_t> e(r), back(r);
    first_subset(r, e.data());
    std::set<uint64_t> ranks;
    do {
      uint64_t rk = colex_rank(e.data(), r, bt);
      REQUIRE(rk < binom(n, r));
      REQUIRE(ranks.insert(rk).second);
      colex_unrank(rk, n, r, bt, back.data());
      REQUIRE(std::equal(e.begin(), e.end(), back.begin()));
    } while (next_subset(n, r, e.data()));
    REQUIRE(ranks.size() == binom(n, r));
  }
}

TEST_CASE("colex rank is monotone in the colex order") {
  // sort all 3-subsets of [8] by reversed-comparison (colex) and check ranks
  const int n = 8, r = 3;
  BinomTable bt(n, r);
  std::vector<std::vector<uint16_t>> all;
  std::vector<uint16_t> e(r);
  first_subset(r, e.data());
  do {
    all.emplace_back(e.begin(), e.end());
  } while (next_subset(n, r, e.data()));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  for (size_t i = 0; i < all.size(); ++i)
    REQUIRE(colex_rank(all[i].data(), r, bt) == i);
}

TEST_CASE("intersection size matches a set-based oracle") {
  SplitMix64 rng{42};
  for (int trial = 0; trial < 500; ++trial) {
    std::set<uint16_t> sa, sb;
    while (sa.size() < 6) sa.insert((uint16_t)(1 + rng.next_below(30)));
    while (sb.size() < 8) sb.insert((uint16_t)(1 + rng.next_below(30)));
    std::vector<uint16_t> a(sa.begin(), sa.end()), b(sb.begin(), sb.end());
    std::vector<uint16_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    REQUIRE(intersection_size(a.data(), (int)a.size(), b.data(), (int)b.size()) ==
            (int)common.size());
  }
}

TEST_CASE("stamp set marks and resets without clearing") {
  StampSet st(10);
  st.clear();
  REQUIRE(st.insert(3));
  REQUIRE_FALSE(st.insert(3));  // second insert reports already-present
  REQUIRE(st.insert(7));
  REQUIRE(st.contains(3));
  REQUIRE(st.contains(7));
  REQUIRE_FALSE(st.contains(4));
  st.clear();  // new round, old marks invisible
  REQUIRE_FALSE(st.contains(3));
  REQUIRE(st.insert(3));
}

TEST_CASE("deterministic rng streams split independently") {
  SplitMix64 a{7}, b{7};
  REQUIRE(a.next() == b.next());
  SplitMix64 c1 = a.split(1), c2 = a.split(2);
  REQUIRE(c1.next() != c2.next());  // astronomically unlikely to collide
  for (int i = 0; i < 1000; ++i) {
    uint64_t v = a.next_below(17);
    REQUIRE(v < 17);
  }
}
