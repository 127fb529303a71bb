#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapsets/core.hpp"
#include "gapsets/enumeration.hpp"

using namespace gapsets;

namespace {
const Gapset kExample({1, 2, 3, 4, 6, 7, 11});
}

TEST_CASE("gapset condition") {
  CHECK(is_gapset(kExample));
  CHECK(is_gapset(Gapset{}));
  CHECK(is_gapset(Gapset({1, 2, 3, 4, 6, 7, 11, 12})));
  CHECK_FALSE(is_gapset(Gapset({2})));
  // 10 = 5 + 5 with 5 outside the set
  CHECK_FALSE(is_gapset(Gapset({1, 2, 4, 7, 10})));
}

TEST_CASE("basic invariants of a gapset") {
  CHECK(multiplicity(kExample) == 5);
  CHECK(frobenius(kExample) == 11);
  CHECK(conductor(kExample) == 12);
  CHECK(genus(kExample) == 7);
  CHECK(depth(kExample) == 3);

  Gapset empty;
  CHECK(multiplicity(empty) == 1);
  CHECK(frobenius(empty) == -1);
  CHECK(conductor(empty) == 0);
  CHECK(genus(empty) == 0);
  CHECK(depth(empty) == 0);

  Gapset one({1});
  CHECK(multiplicity(one) == 2);
  CHECK(depth(one) == 1);
  CHECK(multiplicity(Gapset({1, 2, 4})) == 3);
  CHECK(depth(Gapset({1, 2, 4})) == 2);
}

TEST_CASE("gapset construction validates positivity") {
  CHECK_THROWS_AS(Gapset({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Gapset({-3}), std::invalid_argument);
  // unsorted input is normalized
  CHECK(Gapset({4, 1, 2}) == Gapset({1, 2, 4}));
}

TEST_CASE("canonical partition slices by multiplicity windows") {
  CanonicalPartition p = canonical_partition(kExample);
  CHECK(p.m == 5);
  CHECK(p.parts == std::vector<std::vector<int>>{{1, 2, 3, 4}, {6, 7}, {11}});

  CanonicalPartition q = canonical_partition(Gapset({1, 2, 4}));
  CHECK(q.m == 3);
  CHECK(q.parts == std::vector<std::vector<int>>{{1, 2}, {4}});

  CanonicalPartition r = canonical_partition(Gapset{});
  CHECK(r.m == 1);
  CHECK(r.parts.empty());
}

TEST_CASE("complement and gaps are mutually inverse") {
  NumericalSemigroup s = complement(kExample);
  CHECK(s.small_elements() == std::vector<int>{0, 5, 8, 9, 10, 12});
  CHECK(s.multiplicity() == 5);
  CHECK(s.genus() == 7);
  CHECK(s.frobenius() == 11);
  CHECK(s.is_addition_stable());
  CHECK(gaps(s) == kExample);

  CHECK(complement(Gapset{}).small_elements() == std::vector<int>{0});
  CHECK(complement(Gapset({1})).small_elements() == std::vector<int>{0, 2});
}

TEST_CASE("semigroup normalization") {
  CHECK(NumericalSemigroup({0, 2, 3}).small_elements() ==
        std::vector<int>{0, 2});
  CHECK(NumericalSemigroup({0, 1, 2}).small_elements() ==
        std::vector<int>{0});
  CHECK(NumericalSemigroup({0}).multiplicity() == 1);
  CHECK(NumericalSemigroup({0}).genus() == 0);
  CHECK_THROWS_AS(NumericalSemigroup({1, 2}), std::invalid_argument);
  CHECK_FALSE(NumericalSemigroup({0, 1, 3}).is_addition_stable());
}

TEST_CASE("minimal generators by sum sieving") {
  CHECK(minimal_generators(complement(kExample)) ==
        std::vector<int>{5, 8, 9, 12});
  CHECK(embedding_dimension(complement(kExample)) == 4);
  CHECK(minimal_generators(NumericalSemigroup({0})) == std::vector<int>{1});
  CHECK(minimal_generators(complement(Gapset({1, 2}))) ==
        std::vector<int>{3, 4, 5});
  CHECK(minimal_generators(complement(Gapset({1}))) == std::vector<int>{2, 3});
}

TEST_CASE("gapset condition is addition stability of the complement") {
  // every subset of [1, 12]
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    std::vector<int> elems;
    for (int b = 0; b < 12; ++b)
      if ((mask >> b) & 1) elems.push_back(b + 1);
    Gapset g(std::move(elems));
    CHECK(is_gapset(g) == complement(g).is_addition_stable());
  }
}

TEST_CASE("invariant bounds over every gapset of small genus") {
  auto buckets = enumerate_tree(10);
  for (const auto& bucket : buckets)
    for (const NumericalSemigroup& s : bucket) {
      Gapset g = gaps(s);
      CHECK(is_gapset(g));
      CHECK(complement(g) == s);
      int m = multiplicity(g), c = conductor(g), q = depth(g);
      CHECK(genus(g) >= m - 1);
      CHECK(q * m >= c);
      if (q > 0) CHECK(c > (q - 1) * m);
      // slices shift into each other: G_{i+1} subseteq m + G_i
      CanonicalPartition p = canonical_partition(g);
      CHECK(int(p.parts.size()) == q);
      for (std::size_t i = 0; i + 1 < p.parts.size(); ++i)
        for (int x : p.parts[i + 1]) {
          bool found = false;
          for (int y : p.parts[i]) found = found || (y + m == x);
          CHECK(found);
        }
    }
}
