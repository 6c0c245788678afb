#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "holobrace/error.hpp"
#include "holobrace/holomorph.hpp"

using namespace holobrace;

TEST_CASE("composition is apply-right-first") {
  const GroupSpec g = GroupSpec::parse("c2xc4");
  const AutGroup aut = enumerate_aut(g, 1u << 16);
  for (std::size_t a = 0; a < aut.order(); ++a) {
    const HolElement x{aut[a], Element{1, 3}};
    const HolElement y{aut[(a + 3) % aut.order()], Element{0, 1}};
    const HolElement xy = hol_compose(g, x, y);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const Element p = g.element_at(i);
      CHECK(hol_apply(g, xy, p) == hol_apply(g, x, hol_apply(g, y, p)));
    }
    CHECK(hol_compose(g, x, hol_invert(g, x)) == hol_identity(g));
  }
}

TEST_CASE("encode and decode round trip") {
  const GroupSpec g = GroupSpec::parse("c3xc4");
  const AutGroup aut = enumerate_aut(g, 1u << 16);
  for (const auto& a : aut.elements()) {
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const HolElement x{a, g.element_at(i)};
      CHECK(hol_decode(g, hol_encode(g, x)) == x);
    }
  }
  CHECK_THROWS_AS(hol_decode(g, 0), InvalidInput);
}

TEST_CASE("table products agree with value products") {
  const GroupSpec g = GroupSpec::parse("c2xc2xc4");
  const HolTable t(enumerate_aut(g, 1u << 16));
  CHECK(t.order() == 192 * 16);
  for (std::uint32_t a = 0; a < t.aut_count(); a += 7) {
    for (std::uint32_t b = 0; b < t.aut_count(); b += 11) {
      const HolTable::Idx x{a, (a * 5) % t.points()}, y{b, (b * 3 + 1) % t.points()};
      CHECK(t.to_value(t.mul(x, y)) == hol_compose(g, t.to_value(x), t.to_value(y)));
      CHECK(t.to_value(t.inv(x)) == hol_invert(g, t.to_value(x)));
      CHECK(t.order(x) == hol_order(g, t.to_value(x)));
      CHECK(t.encode(x) == hol_encode(g, t.to_value(x)));
      CHECK(t.decode(t.encode(x)) == x);
    }
    CHECK(t.aut_square(a) == t.aut_mul(a, a));
    CHECK(t.aut_mul(a, t.aut_inv(a)) == t.identity_aut());
  }
}

TEST_CASE("hashed products agree with the multiplication table") {
  // |Aut| above the table threshold forces the image-lookup path.
  const GroupSpec g = GroupSpec::parse("c2xc2xc2xc2");
  const HolTable t(enumerate_aut(g, 1u << 16));
  const auto& aut = t.aut_group();
  for (std::uint32_t a = 0; a < t.aut_count(); a += 997) {
    for (std::uint32_t b = 0; b < t.aut_count(); b += 1009) {
      CHECK(t.aut_mul(a, b) == static_cast<std::uint32_t>(aut.find(aut_compose(aut[a], aut[b]))));
    }
  }
}

TEST_CASE("keys sort like canonical codes") {
  const HolTable t(enumerate_aut(GroupSpec::parse("c3xc2xc2"), 1u << 16));
  std::uint64_t prev = 0;
  for (std::uint64_t k = 0; k < t.order(); ++k) {
    const std::uint64_t c = t.encode(t.from_key(k));
    if (k > 0) CHECK(prev < c);
    prev = c;
  }
}

TEST_CASE("p-element orders respect the exponent bound") {
  for (const char* spec : {"c2xc2xc2", "c4xc8", "c2xc8", "c9", "c3xc3", "c2xc2xc2xc2"}) {
    const GroupSpec g = GroupSpec::parse(spec);
    const std::uint32_t p = g.blocks().front().p;
    const auto spec_map = order_spectrum(g, EngineOptions{});
    std::uint64_t total = 0;
    std::uint64_t largest_p_power = 1;
    for (const auto& [ord, count] : spec_map) {
      total += count;
      std::uint64_t o = ord;
      while (o % p == 0) o /= p;
      if (o == 1) largest_p_power = std::max(largest_p_power, ord);
    }
    CAPTURE(spec);
    CHECK(exponent_bound(g, p).bound % largest_p_power == 0);
    CHECK(total == aut_group_order(g) * g.order());
  }
  CHECK(exponent_bound(GroupSpec::parse("c2xc2xc2"), 2).bound == 4);
  CHECK(exponent_bound(GroupSpec::parse("c2xc2xc2xc2"), 2).bound == 8);
  CHECK(order_spectrum(GroupSpec::parse("c2xc2xc2xc2"), EngineOptions{}).count(8) == 1);
}

TEST_CASE("spectrum of Hol(C4 x C8) has no element of order 16") {
  const auto s = order_spectrum(GroupSpec::parse("c4xc8"), EngineOptions{});
  CHECK(s.count(16) == 0);
  CHECK(s.count(8) == 1);
}

TEST_CASE("spectrum of Hol(C4) by hand") {
  // Hol(C4) = D8: 1 identity, 5 involutions, 2 elements of order 4.
  const auto s = order_spectrum(GroupSpec::parse("c4"), EngineOptions{});
  CHECK(s == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 5}, {4, 2}});
}

TEST_CASE("spectrum respects the cap") {
  EngineOptions opts;
  opts.cap = 100;
  CHECK_THROWS_AS(order_spectrum(GroupSpec::parse("c2xc2xc2"), opts), CapacityError);
}
