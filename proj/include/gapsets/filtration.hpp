#pragma once
// m-filtrations and m-extensions.
//
// An m-extension is a finite superset A of [1, m-1], disjoint from mN,
// whose slices A_i = A intersect [im+1, (i+1)m - 1] satisfy
// A_{i+1} subseteq m + A_i. An m-filtration is the slice-aligned view
// F_i = -im + A_i, a nonincreasing chain of subsets of [1, m-1] starting
// at F_0 = [1, m-1]. The maps phi and tau translate between the two and
// are mutually inverse. A gapset of multiplicity m is an m-extension, so
// every gapset has a filtration; filtrations whose tau-image is a gapset
// are called gapset filtrations.

#include <compare>
#include <cstdint>
#include <vector>

#include "gapsets/core.hpp"

namespace gapsets {

// Nonincreasing chain of subsets of [1, m-1], each stored as a bitmask
// with bit i representing the integer i. Invariants: the first part is all
// of [1, m-1], the last part is nonempty, and consecutive parts nest.
// The empty chain is allowed only for m = 1 (the empty gapset). Supports
// m <= 60 so masks fit one word with room to spare.
class MFiltration {
 public:
  MFiltration() = default;  // empty filtration, m = 1
  // Throws std::invalid_argument when the chain conditions fail.
  MFiltration(int m, std::vector<std::uint64_t> parts);
  // Convenience: parts given as element lists.
  static MFiltration from_parts(int m,
                                const std::vector<std::vector<int>>& parts);

  static std::uint64_t full_mask(int m);  // bits 1 .. m-1

  int m() const { return m_; }
  const std::vector<std::uint64_t>& parts() const { return parts_; }
  int depth() const { return int(parts_.size()); }
  int genus() const;  // sum of part sizes
  std::vector<int> part_elements(int i) const;

  auto operator<=>(const MFiltration&) const = default;

 private:
  int m_ = 1;
  std::vector<std::uint64_t> parts_;
};

// Finite superset of [1, m-1] avoiding multiples of m, with nesting slices.
// Construction validates the full m-extension condition.
class MExtension {
 public:
  MExtension() = default;  // empty extension, m = 1
  // Throws std::invalid_argument when is_m_extension(elements, m) fails.
  MExtension(int m, std::vector<int> elements);

  int m() const { return m_; }
  const std::vector<int>& elements() const { return elements_; }

  auto operator<=>(const MExtension&) const = default;

 private:
  int m_ = 1;
  std::vector<int> elements_;
};

// True iff s (positive integers, any order) is an m-extension.
bool is_m_extension(const std::vector<int>& s, int m);

// Slice-aligned view: F_i = -im + A_i.
MFiltration phi(const MExtension& a);
// Inverse of phi: union of im + F_i.
MExtension tau(const MFiltration& f);

struct FiltrationInvariants {
  int m = 1;
  int genus = 0;
  int depth = 0;
  int frobenius = -1;
  int conductor = 0;

  auto operator<=>(const FiltrationInvariants&) const = default;
};

// m, genus, depth, frobenius = (depth-1)*m + max(last part), conductor.
// The empty filtration gets the empty-gapset values (m=1, frobenius -1).
FiltrationInvariants filtration_invariants(const MFiltration& f);

// True iff tau(f) is a gapset.
bool is_gapset_filtration(const MFiltration& f);

// The filtration of a gapset, via its multiplicity and slices.
MFiltration gapset_filtration(const Gapset& g);

}  // namespace gapsets
