// End-to-end acceptance checks. Each numbered check prints one PASS/FAIL
// line; the process exits nonzero if any fails. The golden-table checks go
// through the installed CLI binary, the structural ones through the library,
// so the two layers vouch for each other.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gapsets/admissibility.hpp"
#include "gapsets/compact.hpp"
#include "gapsets/core.hpp"
#include "gapsets/enumeration.hpp"
#include "gapsets/filtration.hpp"
#include "gapsets/injection.hpp"

using namespace gapsets;

namespace {

int g_failures = 0;

void report(int number, bool ok, const std::string& what,
            const std::string& detail = "") {
  std::printf("%s %d %s%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

struct CliRun {
  int status = -1;
  std::string out;
  double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string("env -u GAPSETS_MAX_GENUS '") +
                    GAPSETS_CLI_PATH + "' " + args + " 2>/dev/null";
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun run;
  if (!pipe) return run;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) run.out.append(buf, n);
  int rc = pclose(pipe);
  run.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  run.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return run;
}

// Splits the csv count output into the derived rows (g, n_g, n'_g) and the
// cell rows (g, m, count), separated by a blank line.
struct ParsedCounts {
  std::vector<std::array<std::uint64_t, 3>> derived;
  std::vector<std::array<std::uint64_t, 3>> cells;
  bool ok = false;
};

ParsedCounts parse_counts(const std::string& text) {
  ParsedCounts parsed;
  bool in_cells = false;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) {
      if (in_cells) return parsed;
      in_cells = true;
      continue;
    }
    unsigned long long a = 0, b = 0, c = 0;
    if (std::sscanf(line.c_str(), "%llu,%llu,%llu", &a, &b, &c) != 3)
      return parsed;
    (in_cells ? parsed.cells : parsed.derived).push_back({a, b, c});
  }
  parsed.ok = in_cells && !parsed.derived.empty() && !parsed.cells.empty();
  return parsed;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

MFiltration form(int m, std::vector<int> sigma, std::vector<int> e) {
  return expand(CompactForm(m, std::move(sigma), std::move(e)));
}

}  // namespace

int main() {
  const std::vector<std::uint64_t> want_n_g = {
      1,   1,   2,    4,    7,    12,  23,  39,
      67,  118, 204,  343,  592,  1001, 1693, 2857};
  const std::vector<std::uint64_t> want_n_prime_g = {
      1,   1,   2,    4,    6,    11,  20,  33,
      57,  99,  168,  287,  487,  824, 1395, 2351};

  // 1 + 2: one CLI run produces both frozen sequences, quickly.
  CliRun run15 = run_cli("count --max-genus 15 --format csv");
  ParsedCounts counts15 = parse_counts(run15.out);
  {
    bool ok = run15.status == 0 && counts15.ok &&
              counts15.derived.size() == 16;
    std::vector<std::uint64_t> got;
    if (ok)
      for (const auto& row : counts15.derived) got.push_back(row[1]);
    ok = ok && got == want_n_g && run15.seconds < 5.0;
    report(1, ok, "census totals n_g for g <= 15 through the CLI",
           format_seconds(run15.seconds));

    std::vector<std::uint64_t> got_prime;
    if (counts15.ok)
      for (const auto& row : counts15.derived) got_prime.push_back(row[2]);
    report(2, run15.status == 0 && got_prime == want_n_prime_g,
           "generic totals n'_g (conductor <= 3m) for g <= 15");
  }

  // 3: the per-multiplicity table, cell for cell, and byte for byte.
  {
    const std::vector<std::vector<std::uint64_t>> want_rows = {
        {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},        // m=2
        {0, 0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5},        // m=3
        {0, 0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 15, 18, 20, 23},  // m=4
        {0, 0, 0, 0, 1, 4, 7, 10, 13, 16, 22, 24, 32, 35, 43},  // m=5
        {0, 0, 0, 0, 0, 1, 5, 11, 17, 27, 37, 49, 66, 85, 106}  // m=6
    };
    CliRun run14 = run_cli("count --max-genus 14 --format csv");
    ParsedCounts counts14 = parse_counts(run14.out);
    bool ok = run14.status == 0 && counts14.ok;
    if (ok)
      for (const auto& row : counts14.cells) {
        std::uint64_t g = row[0], m = row[1];
        if (m >= 2 && m <= 6 && g <= 14 && want_rows[m - 2][g] != row[2])
          ok = false;
      }
    ok = ok && counts14.cells.size() == 15 * 6;

    std::ifstream golden(std::string(GAPSETS_GOLDEN_DIR) +
                             "/count_table_g14.csv",
                         std::ios::binary);
    std::stringstream golden_bytes;
    golden_bytes << golden.rdbuf();
    ok = ok && golden.good() && run14.out == golden_bytes.str();
    report(3, ok, "census rows n_{g,m} for m <= 6, g <= 14 (cells + bytes)");
  }

  // 4: the admissibility criterion against brute force, every form with
  // m <= 6 and exponent sum <= 8.
  {
    auto start = std::chrono::steady_clock::now();
    CriterionReport criterion = verify_criterion(6, 8);
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    report(4,
           criterion.ok() && criterion.cases > 100000 && seconds < 60.0,
           "admissibility criterion == brute force (m <= 6, sum e <= 8)",
           std::to_string(criterion.cases) + " forms, " +
               std::to_string(criterion.discrepancies.size()) +
               " discrepancies, " + format_seconds(seconds));
  }

  // 5: the hand-written closed forms against the general criterion.
  {
    bool ok = true;
    for (int tail = 1; tail <= 2; ++tail)
      for (int r = 1; r <= 12; ++r)
        for (int s = 0; s <= 12; ++s) {
          std::vector<int> sigma =
              tail == 2 ? std::vector<int>{1, 2} : std::vector<int>{2, 1};
          if (is_admissible_m3(tail, r, s) !=
              is_admissible(CompactForm(3, sigma, {r, s})))
            ok = false;
        }
    const std::array<int, 3> rows[6] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                        {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& row : rows)
      for (int a = 1; a <= 10; ++a)
        for (int b = 0; b <= 10; ++b)
          for (int c = 0; c <= 10; ++c) {
            std::vector<int> sigma(row.begin(), row.end());
            if (is_admissible_m4(row, a, b, c) !=
                is_admissible(CompactForm(4, sigma, {a, b, c})))
              ok = false;
          }
    report(5, ok,
           "multiplicity 3 and 4 closed forms == criterion "
           "(r,s <= 12; a,b,c <= 10)");
  }

  // 6: the genus-increasing maps are injections for every genus up to 30.
  {
    bool ok = true;
    std::string detail;
    for (int m : {3, 4}) {
      std::uint64_t prev = 0;
      for (int g = 0; g <= 30; ++g) {
        InjectionReport r = verify_injection(m, g);
        if (!r.ok() || r.domain_size < prev) {
          ok = false;
          detail = "m=" + std::to_string(m) + " g=" + std::to_string(g);
        }
        prev = r.domain_size;
      }
    }
    report(6, ok, "injections valid and counts nondecreasing (g <= 30)",
           detail);
  }

  // 7: insertion failure sets match the classified families exactly. The
  // genus ranges cover every family member with parameters up to 6.
  {
    bool ok = true;
    auto observed = [](int m, int g, int i) {
      std::set<MFiltration> bad;
      for (const MFiltration& f : enumerate_compact(m, g)) {
        MFiltration image = insert(f, i);
        if (image.genus() != g + 1 || !is_gapset_filtration(image))
          bad.insert(f);
      }
      return bad;
    };
    for (int g = 2; g <= 19; ++g) {
      std::set<MFiltration> expected1, expected2;
      if (g % 3 == 1 && g >= 4)
        expected1.insert(form(3, {2, 1}, {g / 3, g / 3 + 1}));
      if (g % 3 == 0 && g >= 3)
        expected2.insert(form(3, {1, 2}, {g / 3, g / 3}));
      ok = ok && observed(3, g, 1) == expected1 &&
           observed(3, g, 2) == expected2;
    }
    for (int g = 3; g <= 37; ++g) {
      std::set<MFiltration> expected1, expected3;
      for (int a = 1; a <= g / 4; ++a)
        for (int b = 0; 4 * a + 2 * b <= g; ++b) {
          if (4 * a + 2 * b + 1 == g) {
            expected1.insert(form(4, {2, 3, 1}, {a, b, a + 1}));
            if (b <= a + 1)
              expected1.insert(form(4, {3, 2, 1}, {a, b, a + 1}));
          }
          if (4 * a + 2 * b == g) {
            expected3.insert(form(4, {2, 1, 3}, {a, b, a}));
            if (b <= a) expected3.insert(form(4, {1, 2, 3}, {a, b, a}));
          }
        }
      ok = ok && observed(4, g, 1) == expected1 &&
           observed(4, g, 3) == expected3;
    }
    report(7, ok, "insertion failure sets == closed families (params <= 6)");
  }

  // 8: the three representations are mutually inverse on everything
  // enumerated: gapset <-> filtration and filtration <-> compact form.
  {
    bool ok = true;
    for (const auto& bucket : enumerate_tree(12))
      for (const NumericalSemigroup& s : bucket) {
        Gapset g(gaps(s));
        MFiltration f = gapset_filtration(g);
        if (tau(f).elements() != g.elements()) ok = false;
      }
    for (int m = 1; m <= 6; ++m)
      for (int g = 0; g <= 12; ++g)
        for (const MFiltration& f : enumerate_compact(m, g)) {
          if (phi(tau(f)) != f) ok = false;
          if (expand(compact_form(f)) != f) ok = false;
        }
    report(8, ok, "round trips tau/phi and compact_form/expand (g <= 12)");
  }

  // 9: the generic-count inequalities on the computed data.
  {
    bool ok = counts15.ok;
    if (ok) {
      const auto& d = counts15.derived;
      for (int g = 3; g <= 15; ++g) {
        std::uint64_t np = d[g][2], a = d[g - 1][2], b = d[g - 2][2],
                      c = d[g - 3][2];
        if (!(a + b + c >= np && np >= a + b)) ok = false;
      }
    }
    report(9, ok,
           "n'_{g-1}+n'_{g-2}+n'_{g-3} >= n'_g >= n'_{g-1}+n'_{g-2} "
           "for 3 <= g <= 15");
  }

  if (g_failures == 0) {
    std::printf("all 9 acceptance checks passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) failed\n", g_failures);
  return 1;
}
