#pragma once
// Exact admissibility test for compact forms.
//
// A compact form (sigma, e) describes a gapset filtration if and only if
// for all 1 <= i <= j < k <= m-1:
//   sigma(i) + sigma(j) = sigma(k)      implies
//       e_j + ... + e_{k-1} <= e_0 + ... + e_{i-1}, and
//   sigma(i) + sigma(j) = sigma(k) + m  implies
//       e_j + ... + e_{k-1} <= e_0 + ... + e_{i-1} + 1.
// Pairs with sigma(i) + sigma(j) = m impose no condition. For m <= 2 the
// condition set is empty, so every form is admissible. Redundant
// conditions are kept as stated; only the hand-written m = 3 and m = 4
// specializations below prune them.

#include <array>
#include <cstdint>
#include <vector>

#include "gapsets/compact.hpp"

namespace gapsets {

// The criterion above, verbatim. Throws std::invalid_argument on e_0 = 0
// (unreachable through a validated CompactForm).
bool is_admissible(const CompactForm& c);

// Multiplicity 3: filtrations are (12)^r(tail)^s with tail 1 or 2, r >= 1.
// (12)^r(2)^s is admissible iff s <= r; (12)^r(1)^s iff s <= r + 1.
// Throws std::invalid_argument unless tail is 1 or 2, r >= 1, s >= 0.
bool is_admissible_m3(int tail, int r, int s);

// Multiplicity 4: filtrations are (123)^a(mid)^b(last)^c, encoded by the
// window notation of sigma; a >= 1. The six rows:
//   (1,2,3): (123)^a(23)^b(3)^c   iff b <= a and c <= a
//   (1,3,2): (123)^a(23)^b(2)^c   iff b + c <= a
//   (2,1,3): (123)^a(13)^b(3)^c   iff c <= a
//   (2,3,1): (123)^a(13)^b(1)^c   iff c <= a + 1
//   (3,1,2): (123)^a(12)^b(2)^c   iff b + c <= a + 1 and c <= a + b
//   (3,2,1): (123)^a(12)^b(1)^c   iff b <= a + 1 and c <= a + 1
// Throws std::invalid_argument unless sigma is one of the six rows,
// a >= 1, b >= 0, c >= 0.
bool is_admissible_m4(const std::array<int, 3>& sigma, int a, int b, int c);

// Differential sweep of is_admissible against the brute-force oracle
// is_gapset(tau(expand(c))) over every (sigma, e) with multiplicity <= max_m
// and exponent sum <= max_exponent_sum.
struct CriterionReport {
  std::uint64_t cases = 0;
  std::vector<CompactForm> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

CriterionReport verify_criterion(int max_m, int max_exponent_sum);

}  // namespace gapsets
