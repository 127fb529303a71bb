#include "gapsets/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapsets {

Gapset::Gapset(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!elements_.empty() && elements_.front() < 1)
    throw std::invalid_argument("gapset elements must be positive");
}

bool Gapset::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

NumericalSemigroup::NumericalSemigroup(std::vector<int> small_elements)
    : small_elements_(std::move(small_elements)) {
  std::sort(small_elements_.begin(), small_elements_.end());
  small_elements_.erase(
      std::unique(small_elements_.begin(), small_elements_.end()),
      small_elements_.end());
  if (small_elements_.empty() || small_elements_.front() != 0)
    throw std::invalid_argument("numerical semigroup must contain 0");
  // Normalize: drop trailing elements past the true conductor, the smallest
  // c with [c, back] fully present and c-1 absent (or c = 0).
  std::size_t i = small_elements_.size() - 1;
  while (i > 0 && small_elements_[i - 1] == small_elements_[i] - 1) --i;
  small_elements_.resize(i + 1);
}

int NumericalSemigroup::multiplicity() const {
  if (small_elements_.size() == 1) return 1;  // N itself
  return small_elements_[1];
}

bool NumericalSemigroup::contains(int x) const {
  if (x < 0) return false;
  if (x >= conductor()) return true;
  return std::binary_search(small_elements_.begin(), small_elements_.end(), x);
}

bool NumericalSemigroup::is_addition_stable() const {
  // Sums with a term >= conductor land at or beyond the conductor, so
  // checking pairs of small elements suffices.
  int c = conductor();
  for (std::size_t i = 1; i < small_elements_.size(); ++i)
    for (std::size_t j = i; j < small_elements_.size(); ++j) {
      int z = small_elements_[i] + small_elements_[j];
      if (z < c && !contains(z)) return false;
    }
  return true;
}

bool is_gapset(const Gapset& g) {
  if (g.empty()) return true;
  std::vector<char> in(g.elements().back() + 1, 0);
  for (int x : g.elements()) in[x] = 1;
  for (int z : g.elements())
    for (int x = 1; 2 * x <= z; ++x)
      if (!in[x] && !in[z - x]) return false;
  return true;
}

int multiplicity(const Gapset& g) {
  int m = 1;
  for (int x : g.elements()) {
    if (x != m) break;
    ++m;
  }
  return m;
}

int frobenius(const Gapset& g) { return g.empty() ? -1 : g.elements().back(); }

int conductor(const Gapset& g) { return frobenius(g) + 1; }

int genus(const Gapset& g) { return int(g.elements().size()); }

int depth(const Gapset& g) {
  int m = multiplicity(g);
  return (conductor(g) + m - 1) / m;
}

CanonicalPartition canonical_partition(const Gapset& g) {
  CanonicalPartition p;
  p.m = multiplicity(g);
  p.parts.resize(depth(g));
  for (int x : g.elements()) p.parts[x / p.m].push_back(x);
  return p;
}

NumericalSemigroup complement(const Gapset& g) {
  int c = conductor(g);
  std::vector<int> small;
  small.reserve(c + 1 - genus(g));
  for (int x = 0; x <= c; ++x)
    if (!g.contains(x)) small.push_back(x);
  return NumericalSemigroup(std::move(small));
}

Gapset gaps(const NumericalSemigroup& s) {
  std::vector<int> elems;
  elems.reserve(s.genus());
  for (int x = 1; x < s.conductor(); ++x)
    if (!s.contains(x)) elems.push_back(x);
  return Gapset(std::move(elems));
}

std::vector<int> minimal_generators(const NumericalSemigroup& s) {
  int m = s.multiplicity();
  int bound = s.conductor() + m;
  std::vector<int> gens;
  for (int x = 1; x <= bound; ++x) {
    if (!s.contains(x)) continue;
    bool sum = false;
    for (int a = m; 2 * a <= x && !sum; ++a)
      sum = s.contains(a) && s.contains(x - a);
    if (!sum) gens.push_back(x);
  }
  return gens;
}

int embedding_dimension(const NumericalSemigroup& s) {
  return int(minimal_generators(s).size());
}

}  // namespace gapsets
