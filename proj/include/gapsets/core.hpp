#pragma once
// Gapsets and numerical semigroups.
//
// A gapset is a finite set G of positive integers such that whenever
// z = x + y lies in G with x, y >= 1, at least one of x, y lies in G.
// Gapsets are exactly the complements in N of numerical semigroups.

#include <compare>
#include <vector>

namespace gapsets {

// Finite strictly increasing set of positive integers. Construction checks
// positivity only; whether the set satisfies the gapset condition is a
// separate question answered by is_gapset().
class Gapset {
 public:
  Gapset() = default;
  // Accepts elements in any order, sorts and removes duplicates.
  // Throws std::invalid_argument on elements < 1.
  explicit Gapset(std::vector<int> elements);

  const std::vector<int>& elements() const { return elements_; }
  bool contains(int x) const;
  bool empty() const { return elements_.empty(); }

  auto operator<=>(const Gapset&) const = default;

 private:
  std::vector<int> elements_;
};

// Cofinite subset of N containing 0, stored as its elements up to and
// including the conductor c (everything >= c belongs to the set).
// Construction normalizes the representation; addition stability is a
// separate question answered by is_addition_stable().
class NumericalSemigroup {
 public:
  NumericalSemigroup() : small_elements_{0} {}  // the full semigroup N
  // Throws std::invalid_argument if 0 is missing or elements are negative.
  explicit NumericalSemigroup(std::vector<int> small_elements);

  // All elements <= conductor, ascending; last entry is the conductor.
  const std::vector<int>& small_elements() const { return small_elements_; }
  int conductor() const { return small_elements_.back(); }
  int frobenius() const { return conductor() - 1; }
  int multiplicity() const;
  int genus() const { return conductor() - int(small_elements_.size()) + 1; }
  bool contains(int x) const;
  // True iff x + y stays in the set for all members x, y.
  bool is_addition_stable() const;

  auto operator<=>(const NumericalSemigroup&) const = default;

 private:
  std::vector<int> small_elements_;
};

// Slices G_i = G intersect [im+1, (i+1)m - 1] of a gapset with
// multiplicity m, for i = 0 .. depth-1. Satisfies G_{i+1} subseteq m + G_i.
struct CanonicalPartition {
  int m = 1;
  std::vector<std::vector<int>> parts;

  auto operator<=>(const CanonicalPartition&) const = default;
};

// The defining condition: every two-part decomposition of a member has a
// member summand. Checks x in [1, z/2] for each member z.
bool is_gapset(const Gapset& g);

// Smallest positive integer not in g (1 for the empty gapset).
int multiplicity(const Gapset& g);
// Largest element, -1 for the empty gapset.
int frobenius(const Gapset& g);
// frobenius + 1.
int conductor(const Gapset& g);
// Number of elements.
int genus(const Gapset& g);
// ceil(conductor / m); 0 for the empty gapset.
int depth(const Gapset& g);

CanonicalPartition canonical_partition(const Gapset& g);

// [0, conductor] minus g, as a NumericalSemigroup. The result is addition
// stable exactly when g is a gapset.
NumericalSemigroup complement(const Gapset& g);

// Gaps of s: [1, conductor - 1] minus s.
Gapset gaps(const NumericalSemigroup& s);

// Elements of s that are not sums of two nonzero elements, ascending.
// Brute force over sums; generators all lie in [1, conductor + multiplicity].
std::vector<int> minimal_generators(const NumericalSemigroup& s);

// Number of minimal generators.
int embedding_dimension(const NumericalSemigroup& s);

}  // namespace gapsets
