#include "gapsets/filtration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gapsets {

namespace {
constexpr int kMaxM = 60;
}

MFiltration::MFiltration(int m, std::vector<std::uint64_t> parts)
    : m_(m), parts_(std::move(parts)) {
  if (m_ < 1 || m_ > kMaxM)
    throw std::invalid_argument("filtration multiplicity out of range");
  if (parts_.empty()) {
    if (m_ != 1)
      throw std::invalid_argument("only m = 1 admits an empty filtration");
    return;
  }
  if (m_ == 1) throw std::invalid_argument("m = 1 filtration must be empty");
  if (parts_.front() != full_mask(m_))
    throw std::invalid_argument("first part must be all of [1, m-1]");
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i + 1] & ~parts_[i])
      throw std::invalid_argument("filtration parts must be nonincreasing");
  if (parts_.back() == 0)
    throw std::invalid_argument("trailing empty filtration part");
}

MFiltration MFiltration::from_parts(
    int m, const std::vector<std::vector<int>>& parts) {
  std::vector<std::uint64_t> masks;
  masks.reserve(parts.size());
  for (const auto& part : parts) {
    std::uint64_t mask = 0;
    for (int x : part) {
      if (x < 1 || x >= m)
        throw std::invalid_argument("filtration element outside [1, m-1]");
      mask |= std::uint64_t(1) << x;
    }
    masks.push_back(mask);
  }
  return MFiltration(m, std::move(masks));
}

std::uint64_t MFiltration::full_mask(int m) {
  return m < 2 ? 0 : (std::uint64_t(1) << m) - 2;
}

int MFiltration::genus() const {
  int g = 0;
  for (std::uint64_t p : parts_) g += std::popcount(p);
  return g;
}

std::vector<int> MFiltration::part_elements(int i) const {
  std::vector<int> out;
  for (std::uint64_t p = parts_[i]; p; p &= p - 1)
    out.push_back(std::countr_zero(p));
  return out;
}

bool is_m_extension(const std::vector<int>& s, int m) {
  if (m < 1) return false;
  std::vector<std::uint64_t> slices;
  for (int x : s) {
    if (x < 1) return false;
    if (x % m == 0) return false;
    int i = x / m;
    if (i >= int(slices.size())) slices.resize(i + 1, 0);
    slices[i] |= std::uint64_t(1) << (x - i * m);
  }
  if (m == 1) return slices.empty();
  if (slices.empty() || slices[0] != MFiltration::full_mask(m)) return false;
  for (std::size_t i = 0; i + 1 < slices.size(); ++i)
    if (slices[i + 1] & ~slices[i]) return false;
  return true;
}

MFiltration phi(const MExtension& a) {
  std::vector<std::uint64_t> parts;
  for (int x : a.elements()) {
    int i = x / a.m();
    if (i >= int(parts.size())) parts.resize(i + 1, 0);
    parts[i] |= std::uint64_t(1) << (x - i * a.m());
  }
  return MFiltration(a.m(), std::move(parts));
}

MExtension tau(const MFiltration& f) {
  std::vector<int> elems;
  for (int i = 0; i < f.depth(); ++i)
    for (int x : f.part_elements(i)) elems.push_back(i * f.m() + x);
  std::sort(elems.begin(), elems.end());
  return MExtension(f.m(), std::move(elems));
}

MExtension::MExtension(int m, std::vector<int> elements)
    : m_(m), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!is_m_extension(elements_, m_))
    throw std::invalid_argument("not an m-extension");
}

FiltrationInvariants filtration_invariants(const MFiltration& f) {
  FiltrationInvariants inv;
  inv.m = f.m();
  inv.genus = f.genus();
  inv.depth = f.depth();
  if (f.depth() > 0) {
    int top = 63 - std::countl_zero(f.parts().back());
    inv.frobenius = (f.depth() - 1) * f.m() + top;
  }
  inv.conductor = inv.frobenius + 1;
  return inv;
}

bool is_gapset_filtration(const MFiltration& f) {
  return is_gapset(Gapset(tau(f).elements()));
}

MFiltration gapset_filtration(const Gapset& g) {
  return phi(MExtension(multiplicity(g), g.elements()));
}

}  // namespace gapsets
