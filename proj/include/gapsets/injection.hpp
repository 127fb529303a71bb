#pragma once
// Genus-increasing injections on gapset filtrations of multiplicity 3 and 4.
//
// insert(f, i) adds the residue i to the first part of f that misses it
// (appending a new part {i} when every part contains i), always producing
// an m-filtration of genus + 1. For multiplicity 3 the map f_1 preserves
// gapset filtrations except on (12)^r(1)^{r+1} and f_2 except on
// (12)^r(2)^r, and the two failure sets have disjoint genera mod 3, so
// choosing f_1 for genus = 0, 2 (mod 3) and f_2 otherwise gives an
// injection of the genus-g filtrations into the genus-(g+1) ones. For
// multiplicity 4 the same works with f_1 on even genus (failing only on
// (123)^a(13)^b(1)^{a+1} and (123)^a(12)^b(1)^{a+1}, odd genus) and f_3 on
// odd genus (failing only on (123)^a(13)^b(3)^a and (123)^a(23)^b(3)^a,
// even genus). The images are re-validated on every call: a failure would
// disprove the classification and raises InjectionContractError.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gapsets/filtration.hpp"

namespace gapsets {

// An image that should have been a gapset filtration is not: the claimed
// classification would be wrong. Distinct from precondition errors.
struct InjectionContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The insertion map f_i. Requires 1 <= i <= m-1 and a nonempty filtration;
// throws std::invalid_argument otherwise.
MFiltration insert(const MFiltration& f, int i);

// The multiplicity-3 injection: f_1 when genus(f) = 0 or 2 (mod 3), f_2
// when genus(f) = 1 (mod 3). Requires a gapset filtration with m = 3
// (std::invalid_argument); throws InjectionContractError if the image is
// not a gapset filtration.
MFiltration inject_m3(const MFiltration& f);

// The multiplicity-4 injection: f_1 for even genus, f_3 for odd genus.
// Errors as in inject_m3.
MFiltration inject_m4(const MFiltration& f);

struct InjectionReport {
  int m = 0;
  int genus = 0;
  int map_used = 0;  // the inserted residue i
  std::uint64_t domain_size = 0;
  std::uint64_t image_size = 0;  // distinct valid images
  std::vector<MFiltration> failures;

  bool ok() const {
    return failures.empty() && image_size == domain_size;
  }
};

// Applies the injection for (m, genus) to every gapset filtration of that
// genus and multiplicity, checking that each image is a gapset filtration
// of genus + 1 and that images are pairwise distinct. Invalid images are
// reported, not thrown. Requires m in {3, 4}.
InjectionReport verify_injection(int m, int genus);

}  // namespace gapsets
