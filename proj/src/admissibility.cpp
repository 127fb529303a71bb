#include "gapsets/admissibility.hpp"

#include <numeric>
#include <stdexcept>

namespace gapsets {

bool is_admissible(const CompactForm& c) {
  int m = c.m();
  if (m >= 2 && c.e()[0] < 1)
    throw std::invalid_argument("admissibility requires e_0 >= 1");
  if (m <= 2) return true;
  // prefix[t] = e_0 + ... + e_{t-1}
  std::vector<int> prefix(m, 0);
  std::partial_sum(c.e().begin(), c.e().end(), prefix.begin() + 1);
  const auto& s = c.sigma();
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i; j <= m - 1; ++j)
      for (int k = j + 1; k <= m - 1; ++k) {
        int sum = s[i - 1] + s[j - 1];
        if (sum == s[k - 1]) {
          if (prefix[k] - prefix[j] > prefix[i]) return false;
        } else if (sum == s[k - 1] + m) {
          if (prefix[k] - prefix[j] > prefix[i] + 1) return false;
        }
      }
  return true;
}

bool is_admissible_m3(int tail, int r, int s) {
  if ((tail != 1 && tail != 2) || r < 1 || s < 0)
    throw std::invalid_argument("bad multiplicity-3 parameters");
  return tail == 2 ? s <= r : s <= r + 1;
}

bool is_admissible_m4(const std::array<int, 3>& sigma, int a, int b, int c) {
  if (a < 1 || b < 0 || c < 0)
    throw std::invalid_argument("bad multiplicity-4 exponents");
  const auto& s = sigma;
  if (s == std::array<int, 3>{1, 2, 3}) return b <= a && c <= a;
  if (s == std::array<int, 3>{1, 3, 2}) return b + c <= a;
  if (s == std::array<int, 3>{2, 1, 3}) return c <= a;
  if (s == std::array<int, 3>{2, 3, 1}) return c <= a + 1;
  if (s == std::array<int, 3>{3, 1, 2}) return b + c <= a + 1 && c <= a + b;
  if (s == std::array<int, 3>{3, 2, 1}) return b <= a + 1 && c <= a + 1;
  throw std::invalid_argument("sigma is not a permutation of {1,2,3}");
}

CriterionReport verify_criterion(int max_m, int max_exponent_sum) {
  CriterionReport report;
  for (int m = 1; m <= max_m; ++m)
    for_each_compact_form(m, max_exponent_sum, [&](const CompactForm& c) {
      ++report.cases;
      bool brute = is_gapset(Gapset(tau(expand(c)).elements()));
      if (is_admissible(c) != brute) report.discrepancies.push_back(c);
    });
  return report;
}

}  // namespace gapsets
