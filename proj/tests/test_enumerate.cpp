#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "holobrace/enumerate.hpp"
#include "holobrace/error.hpp"

using namespace holobrace;

namespace {

struct Row {
  const char* n;
  const char* g;
  std::uint64_t c, r;
};

// Brute force over pairs (X, Y) of holomorph elements: closes every pair and
// keeps the regular ones of the requested kind. Feasible for |Hol| <= ~200.
std::set<std::vector<std::uint64_t>> brute_regular(const GroupSpec& n, const TargetKind& k) {
  const AutGroup aut = enumerate_aut(n, 1u << 16);
  std::vector<HolElement> hol;
  for (const auto& a : aut.elements()) {
    for (std::uint64_t i = 0; i < n.order(); ++i) hol.push_back({a, n.element_at(i)});
  }
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& x : hol) {
    if (hol_order(n, x) != k.m()) continue;
    for (const auto& y : hol) {
      std::vector<HolElement> s;
      try {
        s = generate_closure(n, {x, y}, n.order());
      } catch (const CapacityError&) {
        continue;
      }
      if (s.size() != n.order() || !is_regular(n, s)) continue;
      if (classify_subgroup(n, s) != k) continue;
      std::vector<std::uint64_t> codes;
      for (const auto& e : s) codes.push_back(hol_encode(n, e));
      std::sort(codes.begin(), codes.end());
      out.insert(codes);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("small censuses") {
  const Row rows[] = {
      {"c4", "q4", 1, 1},       {"c2xc2", "q4", 1, 3},     {"c4", "d4", 1, 1},
      {"c2xc2", "d4", 1, 1},    {"c8", "q8", 1, 1},        {"c2xc4", "q8", 1, 2},
      {"c2xc2xc2", "q8", 1, 14}, {"c8", "d8", 1, 1},       {"c2xc4", "d8", 5, 14},
      {"c2xc2xc2", "d8", 2, 126}, {"c16", "q16", 1, 1},    {"c2xc8", "q16", 4, 8},
      {"c16", "d16", 1, 1},     {"c2xc8", "d16", 6, 16},
  };
  for (const auto& row : rows) {
    CAPTURE(row.n);
    CAPTURE(row.g);
    const Census c = Enumerator(GroupSpec::parse(row.n)).census(TargetKind::parse(row.g));
    CHECK(c.c == row.c);
    CHECK(c.r == row.r);
    for (const auto& cls : c.classes) {
      CHECK(cls.orbit_size * cls.stabilizer_order == aut_group_order(c.group));
    }
  }
}

TEST_CASE("engine matches brute force pair closure") {
  for (const auto& [n, g] : std::vector<std::pair<const char*, const char*>>{
           {"c4", "q4"}, {"c2xc2", "q4"}, {"c2xc2", "d4"}, {"c8", "q8"}, {"c2xc4", "q8"},
           {"c2xc4", "d8"}, {"c12", "d12"}, {"c12", "q12"}}) {
    CAPTURE(n);
    CAPTURE(g);
    const GroupSpec grp = GroupSpec::parse(n);
    const TargetKind k = TargetKind::parse(g);
    std::set<std::vector<std::uint64_t>> engine;
    for (const auto& s : Enumerator(grp).find_regular(k)) engine.insert(s.elements);
    CHECK(engine == brute_regular(grp, k));
  }
}

TEST_CASE("found subgroups are regular, closed, and of the requested kind") {
  const GroupSpec n = GroupSpec::parse("c2xc8");
  const Enumerator e(n);
  for (const char* g : {"q16", "d16"}) {
    const TargetKind k = TargetKind::parse(g);
    for (const auto& s : e.find_regular(k)) {
      const auto elems = s.decoded();
      CHECK(is_regular(n, elems));
      CHECK(classify_subgroup(n, elems) == k);
      CHECK(std::binary_search(s.elements.begin(), s.elements.end(), s.x));
      CHECK(std::binary_search(s.elements.begin(), s.elements.end(), s.y));
      for (std::uint32_t a = 0; a < e.table().aut_count(); ++a) {
        CHECK(is_regular(n, e.conjugate(a, s).decoded()));
      }
    }
  }
}

TEST_CASE("sylow path agrees with the full search for every N of order at most 16") {
  for (int order : {4, 8, 16}) {
    int n = 0;
    while ((1 << n) < order) ++n;
    for (const auto& grp : admissible_types(n)) {
      for (const Kind kind : {Kind::quaternion, Kind::dihedral}) {
        const TargetKind k(kind, n);
        if (aut_group_order(grp) * grp.order() > 400000) continue;
        CAPTURE(grp.name());
        CAPTURE(k.name());
        const Enumerator e(grp, EngineOptions{.cap = 1u << 21});
        std::vector<std::vector<std::uint64_t>> full, sylow;
        for (const auto& s : e.find_regular_full(k)) full.push_back(s.elements);
        for (const auto& s : e.find_regular_sylow(k)) sylow.push_back(s.elements);
        CHECK(full == sylow);
      }
    }
  }
}

TEST_CASE("Sylow path for C2^4") {
  const Enumerator e(GroupSpec::parse("c2xc2xc2xc2"));
  CHECK(e.path_for(TargetKind::parse("q16")) == "sylow");
  const Census c = e.census(TargetKind::parse("q16"));
  CHECK(c.c == 1);
  CHECK(c.r == 5040);
  REQUIRE(c.classes.size() == 1);
  CHECK(c.classes[0].stabilizer_order == 4);
}

TEST_CASE("regularity and closure primitives") {
  const GroupSpec n = GroupSpec::parse("c2xc4");
  std::vector<HolElement> trans;
  for (std::uint64_t i = 0; i < n.order(); ++i) trans.push_back({aut_identity(n), n.element_at(i)});
  CHECK(is_regular(n, trans));
  trans[1] = trans[0];
  CHECK_FALSE(is_regular(n, trans));
  trans.pop_back();
  CHECK_THROWS_AS(is_regular(n, trans), InvalidInput);
  CHECK(generate_closure(n, {hol_identity(n)}, 10).size() == 1);
  CHECK_THROWS_AS(generate_closure(n, {HolElement{aut_identity(n), Element{0, 1}},
                                       HolElement{aut_identity(n), Element{1, 0}}},
                                   4),
                  CapacityError);
}

TEST_CASE("order mismatch and capacity") {
  const Enumerator e(GroupSpec::parse("c2xc4"));
  CHECK_THROWS_AS(e.find_regular(TargetKind::parse("q16")), InvalidInput);
  const Enumerator small(GroupSpec::parse("c3xc2xc2xc4"), EngineOptions{.cap = 1000});
  CHECK_THROWS_AS(small.find_regular(TargetKind::parse("q48")), CapacityError);
}

TEST_CASE("worker count does not change results") {
  const GroupSpec n = GroupSpec::parse("c2xc2xc2");
  EngineOptions one;
  one.workers = 1;
  EngineOptions many;
  many.workers = 5;
  const auto a = Enumerator(n, one).find_regular(TargetKind::parse("d8"));
  const auto b = Enumerator(n, many).find_regular(TargetKind::parse("d8"));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].elements == b[i].elements);
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
  }
}
