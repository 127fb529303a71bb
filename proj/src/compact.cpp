#include "gapsets/compact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace gapsets {

CompactForm::CompactForm(int m, std::vector<int> sigma, std::vector<int> e)
    : m_(m), sigma_(std::move(sigma)), e_(std::move(e)) {
  if (m_ < 1 || m_ > 60)
    throw std::invalid_argument("compact form multiplicity out of range");
  if (sigma_.size() != std::size_t(m_ - 1) || e_.size() != std::size_t(m_ - 1))
    throw std::invalid_argument("sigma and e must have length m-1");
  std::uint64_t seen = 0;
  for (int v : sigma_) {
    if (v < 1 || v >= m_ || (seen >> v) & 1)
      throw std::invalid_argument("sigma must be a permutation of [1, m-1]");
    seen |= std::uint64_t(1) << v;
  }
  for (int v : e_)
    if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (m_ >= 2 && e_[0] < 1) throw std::invalid_argument("e_0 must be >= 1");
}

int CompactForm::genus() const {
  int g = 0;
  for (int i = 0; i < int(e_.size()); ++i) g += e_[i] * (m_ - 1 - i);
  return g;
}

bool operator==(const CompactForm& a, const CompactForm& b) {
  return expand(a) == expand(b);
}

MFiltration expand(const CompactForm& c) {
  if (c.m() == 1) return MFiltration();
  std::vector<std::uint64_t> parts;
  std::uint64_t cur = MFiltration::full_mask(c.m());
  for (int i = 0; i < c.m() - 1; ++i) {
    if (i > 0) cur &= ~(std::uint64_t(1) << c.sigma()[i - 1]);
    parts.insert(parts.end(), c.e()[i], cur);
  }
  return MFiltration(c.m(), std::move(parts));
}

CompactForm compact_form(const MFiltration& f) {
  if (f.m() == 1) return CompactForm();
  int m = f.m();
  std::vector<int> sigma(m - 1, 0), e(m - 1, 0);
  // Run-length encode the chain of distinct parts.
  std::vector<std::pair<std::uint64_t, int>> runs;
  for (std::uint64_t p : f.parts()) {
    if (runs.empty() || runs.back().first != p) runs.push_back({p, 1});
    else ++runs.back().second;
  }
  e[0] = runs[0].second;
  std::uint64_t cur = runs[0].first;
  int pos = 1;  // next sigma index to assign
  for (std::size_t r = 1; r < runs.size(); ++r) {
    // Remove the vanished block in ascending order: the canonical sigma.
    for (std::uint64_t gone = cur & ~runs[r].first; gone; gone &= gone - 1)
      sigma[pos++ - 1] = std::countr_zero(gone);
    e[pos - 1] = runs[r].second;
    cur = runs[r].first;
  }
  for (std::uint64_t rest = cur; rest; rest &= rest - 1)
    sigma[pos++ - 1] = std::countr_zero(rest);
  return CompactForm(m, std::move(sigma), std::move(e));
}

NumericalSemigroup semigroup_of(const CompactForm& c) {
  if (c.m() == 1) return NumericalSemigroup();
  int m = c.m();
  // prefix[i] = e_0 + ... + e_{i-1}: how many gaps sit in class sigma(i).
  std::vector<int> prefix(m, 0);
  std::partial_sum(c.e().begin(), c.e().end(), prefix.begin() + 1);
  int frob = 0;
  for (int i = 1; i < m; ++i)
    frob = std::max(frob, c.sigma()[i - 1] + m * (prefix[i] - 1));
  int cond = frob + 1;
  std::vector<int> small;
  for (int x = 0; x <= cond; x += m) small.push_back(x);
  for (int i = 1; i < m; ++i)
    for (int x = c.sigma()[i - 1] + m * prefix[i]; x <= cond; x += m)
      small.push_back(x);
  std::sort(small.begin(), small.end());
  return NumericalSemigroup(std::move(small));
}

KunzVector kunz_coordinates(const CompactForm& c) {
  KunzVector kv;
  kv.m = c.m();
  kv.k.assign(std::max(0, c.m() - 1), 0);
  int prefix = 0;
  for (int i = 1; i < c.m(); ++i) {
    prefix += c.e()[i - 1];
    kv.k[c.sigma()[i - 1] - 1] = prefix;
  }
  return kv;
}

KunzVector kunz_of_semigroup(const NumericalSemigroup& s) {
  KunzVector kv;
  kv.m = s.multiplicity();
  for (int i = 1; i < kv.m; ++i) {
    int w = i;
    while (!s.contains(w)) w += kv.m;
    kv.k.push_back((w - i) / kv.m);
  }
  return kv;
}

namespace {

// Exponents in colexicographic order: highest index outermost, e_0 innermost.
template <typename Emit>
void iter_exponents(std::vector<int>& e, int idx, int rem, Emit&& emit) {
  if (idx == 0) {
    for (int v = 1; v <= rem; ++v) {
      e[0] = v;
      emit();
    }
    return;
  }
  for (int v = 0; v <= rem; ++v) {
    e[idx] = v;
    iter_exponents(e, idx - 1, rem - v, emit);
  }
}

// Same, constrained to exact weighted genus sum e_i * (m-1-i).
template <typename Emit>
void iter_exponents_genus(std::vector<int>& e, int m, int idx, int rem,
                          Emit&& emit) {
  int w = m - 1 - idx;
  if (idx == 0) {
    if (rem >= w && rem % w == 0) {
      e[0] = rem / w;
      emit();
    }
    return;
  }
  for (int v = 0; v * w <= rem; ++v) {
    e[idx] = v;
    iter_exponents_genus(e, m, idx - 1, rem - v * w, emit);
  }
}

template <typename PerE>
void for_each_sigma(int m, PerE&& per_sigma_e) {
  std::vector<int> sigma(m - 1);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    per_sigma_e(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace

void for_each_compact_form(int m, int max_exponent_sum,
                           const std::function<void(const CompactForm&)>& fn) {
  if (m == 1) {
    fn(CompactForm());
    return;
  }
  if (max_exponent_sum < 1) return;
  std::vector<int> e(m - 1, 0);
  for_each_sigma(m, [&](const std::vector<int>& sigma) {
    iter_exponents(e, m - 2, max_exponent_sum,
                   [&] { fn(CompactForm(m, sigma, e)); });
  });
}

void for_each_compact_form_of_genus(
    int m, int genus, const std::function<void(const CompactForm&)>& fn) {
  if (m == 1) {
    if (genus == 0) fn(CompactForm());
    return;
  }
  if (genus < m - 1) return;
  std::vector<int> e(m - 1, 0);
  for_each_sigma(m, [&](const std::vector<int>& sigma) {
    iter_exponents_genus(e, m, m - 2, genus,
                         [&] { fn(CompactForm(m, sigma, e)); });
  });
}

}  // namespace gapsets
