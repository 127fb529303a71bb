#pragma once
// Two independent enumeration pipelines for numerical semigroups / gapsets.
//
// The tree pipeline walks the classical genus tree rooted at N: the
// children of S are S minus one minimal generator greater than the
// Frobenius number, so each semigroup of genus g+1 appears exactly once
// below its unique parent. It never touches filtration code.
//
// The compact pipeline fixes a multiplicity m, iterates every (sigma, e)
// of the right genus, keeps the admissible ones, and deduplicates by the
// expanded filtration. It never checks addition stability except through
// is_admissible. Agreement of the two pipelines is a strong differential
// test of the whole theory.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gapsets/admissibility.hpp"
#include "gapsets/compact.hpp"
#include "gapsets/core.hpp"
#include "gapsets/filtration.hpp"

namespace gapsets {

// Request exceeds a configured resource bound (genus or multiplicity cap).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TreeOptions {
  int jobs = 1;            // worker threads for subtree traversal
  int max_genus_cap = 35;  // refuse traversals past this genus
};

// Genus caps are clamped here so gap bitmasks never overflow
// (conductor <= 2 * genus needs two 64-bit words).
inline constexpr int kGenusHardLimit = 63;

// The compact pipeline iterates (m-1)! permutations; larger multiplicities
// are refused.
inline constexpr int kCompactMultiplicityLimit = 10;

// All numerical semigroups of genus <= max_genus, grouped by genus, each
// group sorted lexicographically by small_elements. Identical output for
// any jobs value. Throws ResourceLimitError past the cap.
std::vector<std::vector<NumericalSemigroup>> enumerate_tree(
    int max_genus, const TreeOptions& options = {});

// Tallies from the same walk, without materializing the semigroups:
// n_g, n'_g (conductor <= 3 * multiplicity), and per-(genus, multiplicity)
// counts.
struct TreeCounts {
  std::vector<std::uint64_t> n_g;
  std::vector<std::uint64_t> n_prime_g;
  // by_multiplicity[g][m] for 0 <= m <= g+1
  std::vector<std::vector<std::uint64_t>> by_multiplicity;
};

TreeCounts count_tree(int max_genus, const TreeOptions& options = {});

// All gapset filtrations with the given multiplicity and genus, sorted.
// Throws ResourceLimitError for m > kCompactMultiplicityLimit.
std::vector<MFiltration> enumerate_compact(int m, int genus);

// Count tables in the shape of the classical genus/multiplicity census:
// rows n_{g,m} come from the compact pipeline, the totals n_g and the
// generic counts n'_g from the tree pipeline, and tree_rows keeps the
// tree's own per-cell counts for differential checking.
struct CountTable {
  int max_genus = 0;
  int max_multiplicity = 0;
  std::map<std::pair<int, int>, std::uint64_t> rows;       // compact side
  std::vector<std::uint64_t> n_g;                          // tree side
  std::vector<std::uint64_t> n_prime_g;                    // tree side
  std::map<std::pair<int, int>, std::uint64_t> tree_rows;  // tree side

  std::uint64_t cell(int g, int m) const;
};

CountTable count_table(int max_genus, int max_multiplicity,
                       const TreeOptions& options = {});

// Human-readable differences between the two pipelines' cells; empty means
// full agreement.
std::vector<std::string> cross_check_mismatches(const CountTable& table);

}  // namespace gapsets
