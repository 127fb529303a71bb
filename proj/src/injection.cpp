#include "gapsets/injection.hpp"

#include <set>
#include <string>

#include "gapsets/enumeration.hpp"
#include "gapsets/text.hpp"

namespace gapsets {

namespace {

int map_residue(int m, int genus) {
  if (m == 3) return genus % 3 == 1 ? 2 : 1;
  return genus % 2 == 0 ? 1 : 3;
}

MFiltration checked_inject(const MFiltration& f, int m) {
  if (f.m() != m || !is_gapset_filtration(f))
    throw std::invalid_argument("not a gapset filtration of multiplicity " +
                                std::to_string(m));
  MFiltration image = insert(f, map_residue(m, f.genus()));
  if (!is_gapset_filtration(image))
    throw InjectionContractError("image of " + format_filtration(f) +
                                 " is not a gapset filtration");
  return image;
}

}  // namespace

MFiltration insert(const MFiltration& f, int i) {
  if (i < 1 || i >= f.m())
    throw std::invalid_argument("inserted residue outside [1, m-1]");
  std::vector<std::uint64_t> parts = f.parts();
  std::uint64_t bit = std::uint64_t(1) << i;
  for (auto& part : parts) {
    if (!(part & bit)) {
      part |= bit;
      return MFiltration(f.m(), std::move(parts));
    }
  }
  parts.push_back(bit);
  return MFiltration(f.m(), std::move(parts));
}

MFiltration inject_m3(const MFiltration& f) { return checked_inject(f, 3); }

MFiltration inject_m4(const MFiltration& f) { return checked_inject(f, 4); }

InjectionReport verify_injection(int m, int genus) {
  if (m != 3 && m != 4)
    throw std::invalid_argument("injections are defined for m = 3 and 4");
  InjectionReport report;
  report.m = m;
  report.genus = genus;
  report.map_used = map_residue(m, genus);
  std::set<MFiltration> images;
  for (const MFiltration& f : enumerate_compact(m, genus)) {
    ++report.domain_size;
    MFiltration image = insert(f, report.map_used);
    if (image.genus() == genus + 1 && is_gapset_filtration(image))
      images.insert(image);
    else
      report.failures.push_back(f);
  }
  report.image_size = images.size();
  return report;
}

}  // namespace gapsets
