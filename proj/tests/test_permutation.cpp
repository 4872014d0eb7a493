#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pipedreams/errors.hpp"
#include "pipedreams/permutation.hpp"

using namespace pipedreams;

namespace {

Permutation perm(std::initializer_list<int> word) { return Permutation(std::vector<int>(word)); }

PairSet pairs(std::initializer_list<Pair> ps) { return PairSet(ps); }

// Oracle: the join is the unique minimum of the common upper bounds,
// found by scanning all of S_n.
Permutation join_by_scan(const Permutation& a, const Permutation& b) {
  std::vector<Permutation> uppers;
  for (const auto& w : all_permutations(a.size()))
    if (weak_leq(a, w) && weak_leq(b, w)) uppers.push_back(w);
  for (const auto& candidate : uppers) {
    bool minimal = true;
    for (const auto& other : uppers)
      if (!weak_leq(candidate, other)) minimal = false;
    if (minimal) return candidate;
  }
  FAIL("no join found");
  return Permutation::identity(a.size());
}

Permutation meet_by_scan(const Permutation& a, const Permutation& b) {
  std::vector<Permutation> lowers;
  for (const auto& w : all_permutations(a.size()))
    if (weak_leq(w, a) && weak_leq(w, b)) lowers.push_back(w);
  for (const auto& candidate : lowers) {
    bool maximal = true;
    for (const auto& other : lowers)
      if (!weak_leq(other, candidate)) maximal = false;
    if (maximal) return candidate;
  }
  FAIL("no meet found");
  return Permutation::identity(a.size());
}

// Oracle: Bruhat order as the reflexive-transitive closure of length-raising
// transpositions.
bool bruhat_leq_by_closure(const Permutation& lo, const Permutation& hi) {
  if (lo == hi) return true;
  if (length(lo) >= length(hi)) return false;
  std::vector<Permutation> frontier{lo};
  std::set<Permutation> seen{lo};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j) {
          if (w(i) > w(j)) continue;
          auto word = w.word();
          std::swap(word[i - 1], word[j - 1]);
          Permutation up{word};
          if (length(up) != length(w) + 1) continue;
          if (up == hi) return true;
          if (length(up) < length(hi) && seen.insert(up).second) next.push_back(up);
        }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

TEST_CASE("inversions") {
  CHECK(inversions(Permutation::identity(5)).empty());
  CHECK(inversions(perm({2, 3, 1, 4, 5})) == pairs({{1, 2}, {1, 3}}));
  CHECK(inversions(perm({5, 1, 3, 2, 4})) ==
        pairs({{1, 5}, {2, 5}, {3, 5}, {4, 5}, {2, 3}}));
  CHECK(length(perm({5, 1, 3, 2, 4})) == 5);
  for (const auto& w : all_permutations(4)) {
    PairSet all;
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b) all.emplace(a, b);
    PairSet both = inversions(w);
    const PairSet ninv = noninversions(w);
    both.insert(ninv.begin(), ninv.end());
    CHECK(both == all);
    CHECK(static_cast<int>(inversions(w).size()) == length(w));
  }
}

TEST_CASE("weak order comparisons") {
  CHECK(weak_leq(Permutation::identity(5), perm({5, 1, 3, 2, 4})));
  CHECK(weak_leq(perm({2, 1, 3, 4, 5}), perm({2, 3, 1, 4, 5})));
  CHECK_FALSE(weak_leq(perm({1, 3, 2}), perm({2, 3, 1})));
  CHECK_THROWS_AS(weak_leq(perm({1, 2}), perm({1, 2, 3})), SizeMismatch);
}

TEST_CASE("weak covers") {
  CHECK(weak_covers_up(perm({3, 2, 1})).empty());
  CHECK(weak_covers_up(perm({2, 1, 3})) == std::vector<Permutation>{perm({2, 3, 1})});
  const auto ups = weak_covers_up(perm({1, 2, 3}));
  CHECK(ups == std::vector<Permutation>{perm({2, 1, 3}), perm({1, 3, 2})});
  for (const auto& w : all_permutations(4))
    for (const auto& up : weak_covers_up(w)) {
      CHECK(length(up) == length(w) + 1);
      const PairSet a = inversions(w), b = inversions(up);
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
      CHECK(b.size() == a.size() + 1);
    }
}

TEST_CASE("join and meet") {
  CHECK(weak_join(perm({2, 1, 3}), Permutation::identity(3)) == perm({2, 1, 3}));
  CHECK(weak_join(perm({2, 1, 3}), perm({1, 3, 2})) == perm({3, 2, 1}));
  CHECK(weak_meet(perm({2, 3, 1}), perm({3, 1, 2})) == perm({1, 2, 3}));
  // Exhaustive cross-check of the closed form against the scan oracle.
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : all_permutations(n))
      for (const auto& b : all_permutations(n)) {
        CHECK(weak_join(a, b) == join_by_scan(a, b));
        CHECK(weak_meet(a, b) == meet_by_scan(a, b));
      }
}

TEST_CASE("lattice axioms on S4") {
  const auto s4 = all_permutations(4);
  for (const auto& a : s4)
    for (const auto& b : s4) {
      const auto j = weak_join(a, b);
      const auto m = weak_meet(a, b);
      CHECK(weak_leq(a, j));
      CHECK(weak_leq(b, j));
      CHECK(weak_leq(m, a));
      CHECK(weak_leq(m, b));
      CHECK(weak_join(a, b) == weak_join(b, a));
      CHECK(weak_meet(a, b) == weak_meet(b, a));
      CHECK(weak_join(a, weak_meet(a, b)) == a);
      CHECK(weak_meet(a, weak_join(a, b)) == a);
    }
  for (const auto& a : s4) {
    CHECK(weak_join(a, a) == a);
    for (const auto& b : s4)
      for (const auto& c : s4) {
        CHECK(weak_join(weak_join(a, b), c) == weak_join(a, weak_join(b, c)));
        CHECK(weak_meet(weak_meet(a, b), c) == weak_meet(a, weak_meet(b, c)));
      }
  }
}

TEST_CASE("intervals") {
  CHECK(interval(Permutation::identity(4)) == std::set<Permutation>{Permutation::identity(4)});
  CHECK(interval(perm({3, 2, 1})).size() == 6);
  // [id, 23145]: computed by filtering S5 on inversion-set inclusion.
  std::set<Permutation> expected;
  for (const auto& w : all_permutations(5))
    if (weak_leq(w, perm({2, 3, 1, 4, 5}))) expected.insert(w);
  const auto got = interval(perm({2, 3, 1, 4, 5}));
  CHECK(got == expected);
  CHECK(got == std::set<Permutation>{Permutation::identity(5), perm({2, 1, 3, 4, 5}),
                                     perm({2, 3, 1, 4, 5})});
}

TEST_CASE("bruhat order") {
  for (const auto& w : all_permutations(4)) CHECK(bruhat_leq(Permutation::identity(4), w));
  CHECK(bruhat_leq(perm({2, 1, 3}), perm({2, 3, 1})));
  CHECK_FALSE(bruhat_leq(perm({3, 2, 1}), perm({3, 1, 2})));
  for (const auto& a : all_permutations(4))
    for (const auto& b : all_permutations(4))
      CHECK(bruhat_leq(a, b) == bruhat_leq_by_closure(a, b));
}

TEST_CASE("demazure products") {
  CHECK(demazure_product({1, 1}, 2) == perm({2, 1}));
  CHECK(demazure_product({1, 2, 1}, 3) == perm({3, 2, 1}));
  CHECK(demazure_product({}, 3) == Permutation::identity(3));
  CHECK_THROWS_AS(demazure_product({3}, 3), Error);
  // The Demazure product dominates every subword product in Bruhat order.
  std::vector<std::vector<int>> words{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int letter = 1; letter <= 2; ++letter) {
          auto longer = w;
          longer.push_back(letter);
          next.push_back(longer);
        }
    for (auto& w : next) words.push_back(std::move(w));
  }
  for (const auto& w : words) {
    const Permutation dem = demazure_product(w, 3);
    for (std::size_t mask = 0; mask < (std::size_t{1} << w.size()); ++mask) {
      Permutation prod = Permutation::identity(3);
      for (std::size_t i = 0; i < w.size(); ++i)
        if (mask & (std::size_t{1} << i)) prod = prod.after_swap(w[i]);
      CHECK(bruhat_leq(prod, dem));
    }
  }
}

TEST_CASE("construction and basics") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), Error);
  CHECK(perm({2, 3, 1}).inverse() == perm({3, 1, 2}));
  CHECK(perm({2, 3, 1}).position_of(1) == 3);
  CHECK(Permutation::longest(4) == perm({4, 3, 2, 1}));
  CHECK(perm({2, 3, 1, 4, 5}).str() == "23145");
}
