#include "pipedreams/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pipedreams/errors.hpp"

namespace pipedreams {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(n, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v - 1])
      throw Error("permutation word is not a bijection on [1..n]");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(word_.size());
  for (int i = 0; i < size(); ++i) pos[word_[i] - 1] = i + 1;
  return pos;
}

int Permutation::position_of(int value) const {
  for (int i = 0; i < size(); ++i)
    if (word_[i] == value) return i + 1;
  throw Error("value out of range");
}

Permutation Permutation::after_swap(int i) const {
  if (i < 1 || i >= size()) throw Error("transposition index out of range");
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw SizeMismatch("compose: size mismatch");
  std::vector<int> w(word_.size());
  for (int i = 0; i < size(); ++i) w[i] = word_[other.word_[i] - 1];
  return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::ostringstream os;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) os << ',';
    os << word_[i];
  }
  return os.str();
}

PairSet inversions(const Permutation& w) {
  PairSet inv;
  const auto pos = w.positions();
  const int n = w.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (pos[b - 1] < pos[a - 1]) inv.emplace(a, b);
  return inv;
}

PairSet noninversions(const Permutation& w) {
  PairSet ninv;
  const auto pos = w.positions();
  const int n = w.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (pos[a - 1] < pos[b - 1]) ninv.emplace(a, b);
  return ninv;
}

int length(const Permutation& w) {
  int len = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w.word()[i] > w.word()[j]) ++len;
  return len;
}

bool weak_leq(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw SizeMismatch("weak_leq: size mismatch");
  const auto a = inversions(lhs);
  const auto b = inversions(rhs);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Permutation> weak_covers_up(const Permutation& w) {
  std::vector<Permutation> covers;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) < w(i + 1)) covers.push_back(w.after_swap(i));
  return covers;
}

std::vector<Permutation> weak_covers_down(const Permutation& w) {
  std::vector<Permutation> covers;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) covers.push_back(w.after_swap(i));
  return covers;
}

Permutation permutation_from_inversions(const PairSet& inv, int n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  // a precedes b (for a < b) exactly when (a,b) is not an inversion
  std::sort(values.begin(), values.end(), [&inv](int x, int y) {
    if (x < y) return !inv.count({x, y});
    return inv.count({y, x}) > 0;
  });
  Permutation result{values};
  if (inversions(result) != inv)
    throw InternalInconsistency("pair set is not the inversion set of a permutation");
  return result;
}

namespace {

// Transitive closure of a pair set: (a,b),(b,c) present => (a,c) present.
PairSet transitive_closure(PairSet pairs, int n) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        if (!pairs.count({a, b})) continue;
        for (int c = b + 1; c <= n; ++c)
          if (pairs.count({b, c}) && pairs.emplace(a, c).second) changed = true;
      }
  }
  return pairs;
}

}  // namespace

Permutation weak_join(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw SizeMismatch("weak_join: size mismatch");
  PairSet u = inversions(a);
  const PairSet ib = inversions(b);
  u.insert(ib.begin(), ib.end());
  return permutation_from_inversions(transitive_closure(std::move(u), a.size()), a.size());
}

Permutation weak_meet(const Permutation& a, const Permutation& b) {
  // w -> w*w0 reverses the right weak order, turning meets into joins.
  return weak_join(a.reversed(), b.reversed()).reversed();
}

std::set<Permutation> interval(const Permutation& omega) {
  std::set<Permutation> seen{omega};
  std::vector<Permutation> stack{omega};
  while (!stack.empty()) {
    Permutation cur = std::move(stack.back());
    stack.pop_back();
    for (auto& below : weak_covers_down(cur))
      if (seen.insert(below).second) stack.push_back(below);
  }
  return seen;
}

bool bruhat_leq(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw SizeMismatch("bruhat_leq: size mismatch");
  const int n = lhs.size();
  // lhs <= rhs iff the rank matrix of lhs dominates the one of rhs:
  // #{k <= i : lhs(k) <= j} >= #{k <= i : rhs(k) <= j} for all i, j.
  for (int i = 1; i <= n; ++i) {
    int rl = 0, rr = 0;
    std::vector<int> cl(n + 1, 0), cr(n + 1, 0);
    for (int k = 1; k <= i; ++k) {
      ++cl[lhs(k)];
      ++cr[rhs(k)];
    }
    for (int j = 1; j <= n; ++j) {
      rl += cl[j];
      rr += cr[j];
      if (rl < rr) return false;
    }
  }
  return true;
}

Permutation demazure_product(const std::vector<int>& word, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int letter : word) {
    if (letter < 1 || letter >= n) throw Error("generator index out of range");
    if (w[letter - 1] < w[letter]) std::swap(w[letter - 1], w[letter]);
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace pipedreams
