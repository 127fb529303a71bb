#pragma once
// Compact (sigma, e) representation of m-filtrations.
//
// Deleting the elements of [1, m-1] one at a time in the order given by a
// permutation sigma produces the maximal descending chain
// F'_0 = [1, m-1], F'_i = F'_{i-1} minus {sigma(i)}. Any m-filtration is
// F'_0 repeated e_0 >= 1 times, then F'_1 repeated e_1 >= 0 times, and so
// on; its genus is sum e_i * (m-1-i). Several sigma can encode the same
// filtration, so equality of compact forms compares expansions. The
// associated numerical semigroup and Kunz coordinates are read off from
// the prefix sums of e.

#include <cstdint>
#include <functional>
#include <vector>

#include "gapsets/core.hpp"
#include "gapsets/filtration.hpp"

namespace gapsets {

// Window notation sigma = (sigma(1), ..., sigma(m-1)) plus exponents
// e = (e_0, ..., e_{m-2}) with e_0 >= 1. For m = 1 both are empty and the
// form denotes the empty filtration.
class CompactForm {
 public:
  CompactForm() = default;  // m = 1
  // Throws std::invalid_argument unless sigma is a permutation of
  // [1, m-1], e has length m-1 with nonnegative entries, and e_0 >= 1.
  CompactForm(int m, std::vector<int> sigma, std::vector<int> e);

  int m() const { return m_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& e() const { return e_; }
  int genus() const;  // sum e_i * (m-1-i)

  // Compact forms are equal when they expand to the same filtration.
  friend bool operator==(const CompactForm& a, const CompactForm& b);

 private:
  int m_ = 1;
  std::vector<int> sigma_;
  std::vector<int> e_;
};

// Kunz coordinates k_1 .. k_{m-1}, where k_i counts the gaps congruent to
// i mod m; stored with k[i-1] = k_i.
struct KunzVector {
  int m = 1;
  std::vector<int> k;

  auto operator<=>(const KunzVector&) const = default;
};

// The filtration encoded by c.
MFiltration expand(const CompactForm& c);

// A compact form of f with the canonical sigma: among the permutations
// realizing f's chain, the one removing each block of elements in
// ascending order (lexicographically smallest window notation).
CompactForm compact_form(const MFiltration& f);

// The complement of tau(expand(c)), computed directly from the prefix
// sums: in residue class sigma(i) the semigroup starts at
// sigma(i) + m * (e_0 + ... + e_{i-1}).
NumericalSemigroup semigroup_of(const CompactForm& c);

// k_{sigma(i)} = e_0 + ... + e_{i-1}.
KunzVector kunz_coordinates(const CompactForm& c);

// k_i = (w(i) - i) / m where w(i) is the smallest element of s congruent
// to i mod m.
KunzVector kunz_of_semigroup(const NumericalSemigroup& s);

// Calls fn for every compact form with the given multiplicity and exponent
// sum at most max_exponent_sum: sigma runs over the permutations of
// [1, m-1] in lexicographic order, e over vectors with e_0 >= 1 in
// colexicographic order. Distinct (sigma, e) pairs may expand to the same
// filtration; no deduplication happens here.
void for_each_compact_form(int m, int max_exponent_sum,
                           const std::function<void(const CompactForm&)>& fn);

// Same iteration restricted to forms of exact genus sum e_i * (m-1-i).
void for_each_compact_form_of_genus(
    int m, int genus, const std::function<void(const CompactForm&)>& fn);

}  // namespace gapsets
