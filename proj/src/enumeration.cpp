#include "gapsets/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <string>
#include <thread>

namespace gapsets {

namespace {

// Genus at which parallel walks hand subtrees to workers (67 subtrees).
constexpr int kSplitGenus = 8;

// A semigroup in the genus tree: gaps as a 128-bit mask plus cached
// multiplicity, conductor, genus. Conductor <= 2 * genus keeps every gap
// below 128 for genus <= kGenusHardLimit.
struct Node {
  std::array<std::uint64_t, 2> gap_bits{};
  int m = 1;
  int conductor = 0;
  int genus = 0;
};

bool in_sg(const Node& n, int x) {
  if (x < 0) return false;
  if (x >= n.conductor) return true;
  return !((n.gap_bits[x >> 6] >> (x & 63)) & 1);
}

// x in [conductor, conductor + m - 1] is a minimal generator iff it is not
// a sum of two nonzero elements.
bool is_minimal_generator(const Node& n, int x) {
  for (int s = n.m; 2 * s <= x; ++s)
    if (in_sg(n, s) && in_sg(n, x - s)) return false;
  return true;
}

Node child_of(const Node& n, int x) {
  Node c = n;
  c.gap_bits[x >> 6] |= std::uint64_t(1) << (x & 63);
  if (x == n.m) ++c.m;  // only the ordinary semigroup loses its multiplicity
  c.conductor = x + 1;
  ++c.genus;
  return c;
}

template <typename Visit>
void dfs(const Node& n, int max_genus, Visit&& visit) {
  visit(n);
  if (n.genus >= max_genus) return;
  for (int x = n.conductor; x < n.conductor + n.m; ++x)
    if (is_minimal_generator(n, x)) dfs(child_of(n, x), max_genus, visit);
}

// Visits nodes of genus < frontier_genus, collecting the rest for workers.
template <typename Visit>
void dfs_collect(const Node& n, int frontier_genus, Visit&& visit,
                 std::vector<Node>& frontier) {
  if (n.genus == frontier_genus) {
    frontier.push_back(n);
    return;
  }
  visit(n);
  for (int x = n.conductor; x < n.conductor + n.m; ++x)
    if (is_minimal_generator(n, x))
      dfs_collect(child_of(n, x), frontier_genus, visit, frontier);
}

int effective_cap(const TreeOptions& options) {
  return std::min(options.max_genus_cap, kGenusHardLimit);
}

void check_genus(int max_genus, const TreeOptions& options) {
  if (max_genus < 0) throw std::invalid_argument("negative genus");
  if (max_genus > effective_cap(options))
    throw ResourceLimitError("genus " + std::to_string(max_genus) +
                             " exceeds the cap of " +
                             std::to_string(effective_cap(options)));
}

// Runs the walk over accumulators: accs[0] takes the shallow part, workers
// take whole subtrees. Caller merges. accs.size() == jobs + 1.
template <typename Acc>
void run_walk(int max_genus, const TreeOptions& options,
              std::vector<Acc>& accs) {
  Node root;  // N: no gaps, multiplicity 1, conductor 0
  accs[0].visit(root);
  if (max_genus == 0) return;
  Node first;  // <2,3>: the only child of N
  first.gap_bits[0] = 0b10;
  first.m = 2;
  first.conductor = 2;
  first.genus = 1;
  int jobs = std::max(1, options.jobs);
  if (jobs == 1 || max_genus <= kSplitGenus) {
    dfs(first, max_genus, [&](const Node& n) { accs[0].visit(n); });
    return;
  }
  std::vector<Node> frontier;
  dfs_collect(
      first, kSplitGenus, [&](const Node& n) { accs[0].visit(n); }, frontier);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int t = 1; t <= jobs; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = next++; i < frontier.size(); i = next++)
        dfs(frontier[i], max_genus, [&](const Node& n) { accs[t].visit(n); });
    });
  for (auto& w : workers) w.join();
}

NumericalSemigroup materialize(const Node& n) {
  std::vector<int> small;
  small.reserve(n.conductor - n.genus + 1);
  for (int x = 0; x <= n.conductor; ++x)
    if (in_sg(n, x)) small.push_back(x);
  return NumericalSemigroup(std::move(small));
}

struct ListAcc {
  std::vector<std::vector<NumericalSemigroup>> buckets;
  explicit ListAcc(int max_genus) : buckets(max_genus + 1) {}
  void visit(const Node& n) { buckets[n.genus].push_back(materialize(n)); }
};

struct CountAcc {
  TreeCounts counts;
  explicit CountAcc(int max_genus) {
    counts.n_g.assign(max_genus + 1, 0);
    counts.n_prime_g.assign(max_genus + 1, 0);
    counts.by_multiplicity.resize(max_genus + 1);
    for (int g = 0; g <= max_genus; ++g)
      counts.by_multiplicity[g].assign(g + 2, 0);
  }
  void visit(const Node& n) {
    ++counts.n_g[n.genus];
    if (n.conductor <= 3 * n.m) ++counts.n_prime_g[n.genus];
    ++counts.by_multiplicity[n.genus][n.m];
  }
};

}  // namespace

std::vector<std::vector<NumericalSemigroup>> enumerate_tree(
    int max_genus, const TreeOptions& options) {
  check_genus(max_genus, options);
  int jobs = std::max(1, options.jobs);
  std::vector<ListAcc> accs(jobs + 1, ListAcc(max_genus));
  run_walk(max_genus, options, accs);
  auto& out = accs[0].buckets;
  for (std::size_t t = 1; t < accs.size(); ++t)
    for (int g = 0; g <= max_genus; ++g)
      for (auto& s : accs[t].buckets[g]) out[g].push_back(std::move(s));
  for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
  return std::move(out);
}

TreeCounts count_tree(int max_genus, const TreeOptions& options) {
  check_genus(max_genus, options);
  int jobs = std::max(1, options.jobs);
  std::vector<CountAcc> accs(jobs + 1, CountAcc(max_genus));
  run_walk(max_genus, options, accs);
  TreeCounts& total = accs[0].counts;
  for (std::size_t t = 1; t < accs.size(); ++t)
    for (int g = 0; g <= max_genus; ++g) {
      total.n_g[g] += accs[t].counts.n_g[g];
      total.n_prime_g[g] += accs[t].counts.n_prime_g[g];
      for (int m = 0; m <= g + 1; ++m)
        total.by_multiplicity[g][m] += accs[t].counts.by_multiplicity[g][m];
    }
  return std::move(total);
}

std::vector<MFiltration> enumerate_compact(int m, int genus) {
  if (m < 1 || genus < 0)
    throw std::invalid_argument("bad multiplicity or genus");
  if (m > kCompactMultiplicityLimit)
    throw ResourceLimitError("multiplicity " + std::to_string(m) +
                             " exceeds the compact enumeration cap of " +
                             std::to_string(kCompactMultiplicityLimit));
  std::set<MFiltration> seen;
  for_each_compact_form_of_genus(m, genus, [&](const CompactForm& c) {
    if (is_admissible(c)) seen.insert(expand(c));
  });
  return {seen.begin(), seen.end()};
}

std::uint64_t CountTable::cell(int g, int m) const {
  auto it = rows.find({g, m});
  return it == rows.end() ? 0 : it->second;
}

CountTable count_table(int max_genus, int max_multiplicity,
                       const TreeOptions& options) {
  CountTable table;
  table.max_genus = max_genus;
  table.max_multiplicity = max_multiplicity;
  TreeCounts tc = count_tree(max_genus, options);
  table.n_g = std::move(tc.n_g);
  table.n_prime_g = std::move(tc.n_prime_g);
  for (int g = 0; g <= max_genus; ++g)
    for (int m = 1; m <= max_multiplicity; ++m) {
      table.rows[{g, m}] = enumerate_compact(m, g).size();
      table.tree_rows[{g, m}] =
          m <= g + 1 ? tc.by_multiplicity[g][m] : 0;
    }
  return table;
}

std::vector<std::string> cross_check_mismatches(const CountTable& table) {
  std::vector<std::string> diffs;
  for (const auto& [key, compact_count] : table.rows) {
    auto it = table.tree_rows.find(key);
    std::uint64_t tree_count = it == table.tree_rows.end() ? 0 : it->second;
    if (tree_count != compact_count)
      diffs.push_back("genus " + std::to_string(key.first) +
                      " multiplicity " + std::to_string(key.second) +
                      ": tree=" + std::to_string(tree_count) +
                      " compact=" + std::to_string(compact_count));
  }
  return diffs;
}

}  // namespace gapsets
