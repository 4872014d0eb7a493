#ifndef PIPEDREAMS_PERMUTATION_HPP
#define PIPEDREAMS_PERMUTATION_HPP

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pipedreams {

/// A permutation of [1..n] in one-line notation; position i (1-based) holds w(i).
/// Values are immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);  // must be a bijection on [1..n]

  static Permutation identity(int n);
  static Permutation longest(int n);  // n (n-1) ... 2 1

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based position
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  std::vector<int> positions() const;  // positions()[v-1] = w^{-1}(v)
  int position_of(int value) const;    // w^{-1}(value), 1-based

  // Right multiplication by the simple transposition tau_i: swaps the
  // entries at positions i and i+1.
  Permutation after_swap(int i) const;

  // Function composition: (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  // One-line word reversed, i.e. this * w0.
  Permutation reversed() const;

  std::string str() const;  // "23145", or comma-separated when n > 9

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

using Pair = std::pair<int, int>;
/// A set of ordered pairs (a,b) with 1 <= a < b <= n.
using PairSet = std::set<Pair>;

PairSet inversions(const Permutation& w);
PairSet noninversions(const Permutation& w);
int length(const Permutation& w);  // |inversions|

/// Right weak order: inv(lhs) included in inv(rhs). Throws SizeMismatch.
bool weak_leq(const Permutation& lhs, const Permutation& rhs);

std::vector<Permutation> weak_covers_up(const Permutation& w);
std::vector<Permutation> weak_covers_down(const Permutation& w);

Permutation weak_join(const Permutation& a, const Permutation& b);
Permutation weak_meet(const Permutation& a, const Permutation& b);

/// The weak order interval [id, omega].
std::set<Permutation> interval(const Permutation& omega);

/// Strong Bruhat order via the rank-matrix dominance criterion.
bool bruhat_leq(const Permutation& lhs, const Permutation& rhs);

/// Demazure (0-Hecke) product of a word over the simple transpositions
/// tau_1..tau_{n-1}: a letter is applied only when it increases length.
Permutation demazure_product(const std::vector<int>& word, int n);

/// Reconstruct the permutation whose inversion set is exactly `inv`.
/// Throws InternalInconsistency when `inv` is not a valid inversion set.
Permutation permutation_from_inversions(const PairSet& inv, int n);

std::vector<Permutation> all_permutations(int n);  // lexicographic order

}  // namespace pipedreams

#endif
