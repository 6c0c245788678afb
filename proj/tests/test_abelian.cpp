#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holobrace/abelian.hpp"
#include "holobrace/error.hpp"

using namespace holobrace;

TEST_CASE("parse accepts both spellings") {
  const GroupSpec a = GroupSpec::parse("c2xc8");
  const GroupSpec b = GroupSpec::parse(" C2 x C8 ");
  const GroupSpec c = GroupSpec::parse("[8,2]");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.name() == "C2xC8");
  CHECK(a.display_name() == "C_2×C_8");
  CHECK(a.order() == 16);
}

TEST_CASE("composite factors split into prime powers, odd primes first") {
  const GroupSpec g = GroupSpec::parse("c24");
  CHECK(g.name() == "C3xC8");
  const GroupSpec h = GroupSpec::from_orders({4, 15, 2});
  CHECK(h.name() == "C3xC5xC2xC4");
  CHECK(h.blocks().size() == 3);
  CHECK(h.block(2)->offset == 2);
  CHECK(h.odd_order() == 15);
  CHECK(h.two_order() == 8);
  CHECK(h.rank(2) == 2);
  CHECK(h.exponent(2) == 4);
}

TEST_CASE("bad specs are rejected") {
  CHECK_THROWS_AS(GroupSpec::parse(""), InvalidInput);
  CHECK_THROWS_AS(GroupSpec::parse("c1"), InvalidInput);
  CHECK_THROWS_AS(GroupSpec::parse("c2xd8"), InvalidInput);
  CHECK_THROWS_AS(GroupSpec::parse("[2,]"), InvalidInput);
  CHECK_THROWS_AS(GroupSpec::from_orders({0}), InvalidInput);
}

TEST_CASE("index_of and element_at are inverse, first factor most significant") {
  const GroupSpec g = GroupSpec::parse("c3xc2xc4");
  for (std::uint64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
  CHECK(g.index_of(Element{1, 0, 0}) == 8);
  CHECK(g.index_of(Element{0, 0, 3}) == 3);
}

TEST_CASE("arithmetic agrees with integer arithmetic on a cyclic group") {
  const GroupSpec g = GroupSpec::parse("c12");
  const SylowSplit s = sylow_decompose(g);
  for (std::uint32_t a = 0; a < 12; ++a) {
    for (std::uint32_t b = 0; b < 12; ++b) {
      const Element x = s.combine(Element{a % 3}, Element{a % 4});
      const Element y = s.combine(Element{b % 3}, Element{b % 4});
      const Element z = add(g, x, y);
      CHECK(z == s.combine(Element{(a + b) % 3}, Element{(a + b) % 4}));
    }
    const Element x = s.combine(Element{a % 3}, Element{a % 4});
    CHECK(element_order(g, x) == 12 / gcd_u64(12, a));
    CHECK(sub(g, x, x) == g.identity());
    CHECK(scale(g, x, 5) == s.combine(Element{5 * a % 3}, Element{5 * a % 4}));
  }
}

TEST_CASE("foreign elements throw") {
  const GroupSpec g = GroupSpec::parse("c2xc4");
  CHECK_THROWS_AS(add(g, Element{2, 0}, Element{0, 0}), InvalidInput);
  CHECK_THROWS_AS(g.index_of(Element{0}), InvalidInput);
  CHECK_THROWS_AS(g.element_at(8), InvalidInput);
}

TEST_CASE("sylow split round trips") {
  const GroupSpec g = GroupSpec::parse("c3xc2xc8");
  const SylowSplit s = sylow_decompose(g);
  CHECK(s.odd.name() == "C3");
  CHECK(s.two.name() == "C2xC8");
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    const auto [o, t] = s.split(g.element_at(i));
    CHECK(s.combine(o, t) == g.element_at(i));
  }
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(25) == 20);
  CHECK(ipow(2, 10) == 1024);
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("abelian groups of a given order") {
  CHECK(abelian_groups(1).size() == 1);
  CHECK(abelian_groups(16).size() == 5);
  CHECK(abelian_groups(32).size() == 7);
  CHECK(abelian_groups(36).size() == 4);
  CHECK(abelian_groups(48).size() == 5);
  CHECK(abelian_groups(144).size() == 10);
  const auto g32 = abelian_groups(32);
  CHECK(g32.front() == GroupSpec::parse("c32"));
  CHECK(g32[1] == GroupSpec::parse("c2xc16"));
  CHECK(g32.back() == GroupSpec::parse("c2xc2xc2xc2xc2"));
  for (const auto& g : abelian_groups(72)) CHECK(g.order() == 72);
}
