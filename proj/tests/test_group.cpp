#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cysp/group.hpp"

using namespace cysp;

namespace {

// Every subset of size d closed under addition, by brute force (order <= 16).
std::vector<std::vector<Element>> subgroups_by_enumeration(const AbelianGroup& g, int d) {
  std::vector<std::vector<Element>> out;
  const int n = g.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u) || __builtin_popcount(mask) != d) continue;
    std::vector<Element> s;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u) s.push_back(x);
    bool closed = true;
    for (Element x : s)
      for (Element y : s) closed = closed && (mask >> g.add(x, y) & 1u);
    if (closed) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("cyclic arithmetic") {
  AbelianGroup z12 = AbelianGroup::cyclic(12);
  CHECK(z12.order() == 12);
  CHECK(z12.add(7, 8) == 3);
  CHECK(z12.neg(5) == 7);
  CHECK(z12.neg(0) == 0);
  CHECK(z12.sub(2, 5) == 9);
  CHECK(z12.times(5, 5) == 1);
  CHECK(z12.name() == "Z/12");
}

TEST_CASE("product arithmetic is componentwise") {
  AbelianGroup g({4, 3});
  CHECK(g.order() == 12);
  CHECK(g.name() == "4x3");
  Element x = g.from_tuple({3, 2});
  Element y = g.from_tuple({2, 2});
  CHECK(g.to_tuple(g.add(x, y)) == std::vector{1, 1});
  CHECK(g.to_tuple(g.neg(x)) == std::vector{1, 1});
  CHECK(g.from_tuple({-1, 4}) == g.from_tuple({3, 1}));
  for (Element a = 0; a < g.order(); ++a) CHECK(g.add(a, g.neg(a)) == 0);
}

TEST_CASE("group parsing") {
  CHECK(AbelianGroup::parse("Z/8") == AbelianGroup::cyclic(8));
  CHECK(AbelianGroup::parse("8") == AbelianGroup::cyclic(8));
  CHECK(AbelianGroup::parse("4x3").factors() == std::vector{4, 3});
  CHECK(AbelianGroup::parse("Z/2xZ/2xZ/2").factors() == std::vector{2, 2, 2});
  CHECK_THROWS_AS(AbelianGroup::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup::parse("4x"), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup::parse("Z/a"), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup::cyclic(5000), std::invalid_argument);
}

TEST_CASE("subgroup_of_order") {
  CHECK(subgroup_of_order(AbelianGroup::cyclic(12), 4).elements == std::vector{0, 3, 6, 9});
  CHECK(subgroup_of_order(AbelianGroup::cyclic(9), 3).elements == std::vector{0, 3, 6});
  CHECK_THROWS_AS(subgroup_of_order(AbelianGroup::cyclic(9), 2), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_of_order(AbelianGroup::cyclic(9), 0), std::invalid_argument);

  AbelianGroup g({2, 4});
  Subgroup h = subgroup_of_order(g, 4);
  CHECK(h.order() == 4);
  CHECK(is_subgroup(g, h.elements));
  auto all = subgroups_by_enumeration(g, 4);
  CHECK(std::find(all.begin(), all.end(), h.elements) != all.end());
}

TEST_CASE("subgroup_of_order yields subgroups for every divisor") {
  for (int order = 1; order <= 48; ++order)
    for (const auto& factors : abelian_groups_of_order(order)) {
      AbelianGroup g(factors);
      for (int d : divisors(order)) {
        Subgroup h = subgroup_of_order(g, d);
        CAPTURE(g.name());
        CAPTURE(d);
        CHECK(h.order() == d);
        CHECK(is_subgroup(g, h.elements));
      }
    }
}

TEST_CASE("units") {
  CHECK(units(8) == std::vector{1, 3, 5, 7});
  CHECK(units(7) == std::vector{1, 2, 3, 4, 5, 6});
  CHECK(units(1).empty());
  CHECK_THROWS_AS(units(0), std::invalid_argument);
}

TEST_CASE("unit multiplication is an automorphism of Z/n") {
  for (int n = 1; n <= 40; ++n) {
    AbelianGroup g = AbelianGroup::cyclic(n);
    for (int u : units(n)) {
      std::set<Element> image;
      for (Element x = 0; x < n; ++x) image.insert(g.times(x, u));
      CHECK(static_cast<int>(image.size()) == n);
      CHECK(g.times(0, u) == 0);
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          REQUIRE(g.times(g.add(x, y), u) == g.add(g.times(x, u), g.times(y, u)));
    }
  }
}

TEST_CASE("cosets") {
  AbelianGroup z9 = AbelianGroup::cyclic(9);
  auto c9 = cosets(z9, subgroup_of_order(z9, 3));
  CHECK(c9 == std::vector<std::vector<Element>>{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});

  AbelianGroup z12 = AbelianGroup::cyclic(12);
  auto c12 = cosets(z12, subgroup_of_order(z12, 2));
  CHECK(c12.size() == 6);
  for (const auto& c : c12) CHECK(c.size() == 2);

  AbelianGroup z4 = AbelianGroup::cyclic(4);
  CHECK(cosets(z4, subgroup_of_order(z4, 4)).size() == 1);
}

TEST_CASE("cosets partition the group") {
  for (int order = 1; order <= 36; ++order)
    for (const auto& factors : abelian_groups_of_order(order)) {
      AbelianGroup g(factors);
      for (int d : divisors(order)) {
        Subgroup h = subgroup_of_order(g, d);
        auto cs = cosets(g, h);
        CHECK(cs.front() == h.elements);
        CHECK(static_cast<int>(cs.size()) == order / d);
        std::vector<int> hits(order, 0);
        for (const auto& c : cs) {
          CHECK(static_cast<int>(c.size()) == d);
          for (Element x : c) ++hits[x];
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int k) { return k == 1; }));
      }
    }
}

TEST_CASE("abelian groups of a given order") {
  CHECK(abelian_groups_of_order(1) == std::vector<std::vector<int>>{{1}});
  CHECK(abelian_groups_of_order(8) ==
        std::vector<std::vector<int>>{{2, 2, 2}, {2, 4}, {8}});
  CHECK(abelian_groups_of_order(12) == std::vector<std::vector<int>>{{2, 6}, {12}});
  CHECK(abelian_groups_of_order(32).size() == 7);  // partitions of 5
  CHECK(abelian_groups_of_order(36).size() == 4);
}

TEST_CASE("primes and divisors") {
  CHECK(divisors(12) == std::vector{1, 2, 3, 4, 6, 12});
  CHECK(is_prime(2));
  CHECK(is_prime(37));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(39));
}
