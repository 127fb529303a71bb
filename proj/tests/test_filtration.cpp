#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapsets/compact.hpp"
#include "gapsets/enumeration.hpp"
#include "gapsets/filtration.hpp"

using namespace gapsets;

namespace {
MFiltration worked_example() {
  return MFiltration::from_parts(5, {{1, 2, 3, 4}, {1, 2}, {1}});
}
}  // namespace

TEST_CASE("m-extension recognition") {
  CHECK(is_m_extension({1, 2, 3, 4, 6, 7, 11}, 5));
  CHECK(is_m_extension({1, 2, 3}, 4));
  CHECK_FALSE(is_m_extension({1, 2, 6}, 3));  // 6 is a multiple of 3
  CHECK_FALSE(is_m_extension({1, 2, 7}, 3));  // slice {7} needs 4 below it
  CHECK_FALSE(is_m_extension({1, 3}, 3));     // missing 2 from [1, 2]
  CHECK(is_m_extension({}, 1));
  CHECK_FALSE(is_m_extension({1}, 1));
  CHECK_THROWS_AS(MExtension(3, {1, 2, 6}), std::invalid_argument);
}

TEST_CASE("filtration structure is validated") {
  CHECK_THROWS_AS(MFiltration::from_parts(5, {{1, 2, 3}, {1}}),
                  std::invalid_argument);  // first part not full
  CHECK_THROWS_AS(MFiltration::from_parts(3, {{1, 2}, {2}, {1}}),
                  std::invalid_argument);  // not nonincreasing
  CHECK_THROWS_AS(MFiltration::from_parts(3, {{1, 2}, {}}),
                  std::invalid_argument);  // trailing empty part
  CHECK_THROWS_AS(MFiltration(2, {}), std::invalid_argument);
  CHECK(MFiltration().m() == 1);
  CHECK(MFiltration().depth() == 0);
}

TEST_CASE("phi and tau translate between extensions and filtrations") {
  MExtension a(5, {1, 2, 3, 4, 6, 7, 11});
  MFiltration f = phi(a);
  CHECK(f == worked_example());
  CHECK(tau(f) == a);

  CHECK(phi(MExtension(3, {1, 2, 4})) ==
        MFiltration::from_parts(3, {{1, 2}, {1}}));
  CHECK(tau(MFiltration()).elements().empty());
}

TEST_CASE("filtration invariants") {
  FiltrationInvariants inv = filtration_invariants(worked_example());
  CHECK(inv == FiltrationInvariants{5, 7, 3, 11, 12});

  inv = filtration_invariants(MFiltration::from_parts(3, {{1, 2}, {1}}));
  CHECK(inv == FiltrationInvariants{3, 3, 2, 4, 5});

  inv = filtration_invariants(MFiltration());
  CHECK(inv == FiltrationInvariants{1, 0, 0, -1, 0});
}

TEST_CASE("gapset filtration recognition") {
  CHECK(is_gapset_filtration(worked_example()));
  CHECK(is_gapset_filtration(
      MFiltration::from_parts(3, {{1, 2}, {1}, {1}})));
  CHECK_FALSE(is_gapset_filtration(
      MFiltration::from_parts(3, {{1, 2}, {1}, {1}, {1}, {1}})));
  CHECK(is_gapset_filtration(MFiltration()));
}

TEST_CASE("every gapset's filtration carries the gapset's invariants") {
  for (const auto& bucket : enumerate_tree(10))
    for (const NumericalSemigroup& s : bucket) {
      Gapset g = gaps(s);
      MFiltration f = gapset_filtration(g);
      CHECK(tau(f).elements() == g.elements());
      CHECK(is_gapset_filtration(f));
      FiltrationInvariants inv = filtration_invariants(f);
      CHECK(inv.m == multiplicity(g));
      CHECK(inv.genus == genus(g));
      CHECK(inv.depth == depth(g));
      CHECK(inv.frobenius == frobenius(g));
      CHECK(inv.conductor == conductor(g));
    }
}

TEST_CASE("phi and tau are mutually inverse on all small filtrations") {
  for (int m = 1; m <= 5; ++m)
    for (int g = 0; g <= 9; ++g)
      for_each_compact_form_of_genus(m, g, [&](const CompactForm& c) {
        MFiltration f = expand(c);
        CHECK(f.genus() == g);
        MExtension a = tau(f);
        CHECK(int(a.elements().size()) == g);
        CHECK(phi(a) == f);
        CHECK(tau(phi(a)) == a);
      });
}
