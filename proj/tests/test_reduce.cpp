#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "holobrace/error.hpp"
#include "holobrace/reduce.hpp"

using namespace holobrace;

namespace {

RegularSubgroup only(const char* n, const char* g) {
  const auto found = find_regular(GroupSpec::parse(n), TargetKind::parse(g));
  REQUIRE(!found.empty());
  return found.front();
}

std::vector<std::uint64_t> conj_codes(const GroupSpec& g, const Automorphism& a,
                                      const std::vector<std::uint64_t>& codes) {
  const HolElement alpha{a, g.identity()};
  const HolElement alpha_inv = hol_invert(g, alpha);
  std::vector<std::uint64_t> out;
  for (const auto c : codes) {
    out.push_back(hol_encode(g, hol_compose(g, hol_compose(g, alpha, hol_decode(g, c)), alpha_inv)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("tau sets") {
  CHECK(tau_set(only("c16", "q16")).size() == 1);
  CHECK(tau_set(only("c8", "d8")).size() == 1);
  CHECK(tau_set(only("c4", "q4")).size() == 1);
  for (const auto& h : find_regular(GroupSpec::parse("c2xc4"), TargetKind::parse("q8"))) {
    CHECK(tau_set(h).size() == 3);
  }
  for (const auto& h : find_regular(GroupSpec::parse("c2xc2xc2"), TargetKind::parse("q8"))) {
    CHECK(tau_set(h).size() == 3);
  }
  CHECK(tau_set(only("c2xc2", "d4")).size() == 3);
  CHECK(tau_set(only("c2xc8", "d16")).size() == 1);
  // Every kernel has index 2 and is cyclic.
  for (const auto& t : tau_set(only("c2xc2xc2", "q8"))) {
    CHECK(t.kernel.size() == 4);
    const GroupSpec g = t.domain.group;
    bool has_gen = false;
    for (const auto c : t.kernel) has_gen |= hol_order(g, hol_decode(g, c)) == 4;
    CHECK(has_gen);
  }
}

TEST_CASE("semidirect construction") {
  const auto h = only("c32", "q32");
  const auto taus = tau_set(h);
  REQUIRE(taus.size() == 1);
  CHECK(semidirect_subgroup(h, taus[0], GroupSpec()).elements == h.elements);
  const auto g = semidirect_subgroup(h, taus[0], GroupSpec::parse("c3"));
  CHECK(g.group == GroupSpec::parse("c96"));
  CHECK(g.kind == TargetKind::parse("q96"));
  CHECK(is_regular(g.group, g.decoded()));
  CHECK(classify_subgroup(g.group, g.decoded()) == TargetKind::parse("q96"));
  CHECK_THROWS_AS(semidirect_subgroup(h, taus[0], GroupSpec::parse("c3xc3")), InvalidInput);

  // Q8 over C2 x C4 with each of its three maps.
  const auto q8 = only("c2xc4", "q8");
  const auto direct = find_regular(GroupSpec::parse("c3xc2xc4"), TargetKind::parse("q24"));
  std::set<std::vector<std::uint64_t>> made;
  for (const auto& t : tau_set(q8)) {
    const auto s = semidirect_subgroup(q8, t, GroupSpec::parse("c3"));
    made.insert(s.elements);
    CHECK(std::any_of(direct.begin(), direct.end(), [&](const RegularSubgroup& d) { return d.elements == s.elements; }));
    const auto [h2, t2] = split_subgroup(s);
    CHECK(h2.elements == q8.elements);
    CHECK(t2.kernel == t.kernel);
  }
  CHECK(made.size() == 3);
}

TEST_CASE("bijection with direct search at s = 3") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& two : admissible_types(n)) {
      for (const Kind k : {Kind::quaternion, Kind::dihedral}) {
        CAPTURE(two.name());
        CAPTURE(n);
        std::set<std::vector<std::uint64_t>> made;
        for (const auto& h : find_regular(two, TargetKind(k, n))) {
          for (const auto& t : tau_set(h)) made.insert(semidirect_subgroup(h, t, GroupSpec::parse("c3")).elements);
        }
        std::set<std::vector<std::uint64_t>> direct;
        const GroupSpec whole = GroupSpec::product(GroupSpec::parse("c3"), two);
        for (const auto& g : find_regular(whole, TargetKind(k, n, 3))) direct.insert(g.elements);
        CHECK(made == direct);
      }
    }
  }
}

TEST_CASE("conjugation acts on pairs") {
  const GroupSpec whole = GroupSpec::parse("c3xc2xc4");
  const auto aut = enumerate_aut(whole, 1u << 16);
  const auto q8 = only("c2xc4", "q8");
  for (const auto& t : tau_set(q8)) {
    const auto g = semidirect_subgroup(q8, t, GroupSpec::parse("c3"));
    for (std::size_t i = 0; i < aut.order(); i += 3) {
      const Automorphism& a = aut.elements()[i];
      RegularSubgroup moved = g;
      moved.elements = conj_codes(whole, a, g.elements);
      const auto [h2, t2] = split_subgroup(moved);
      Automorphism a2;
      for (const auto& b : a.blocks) {
        if (b.p() == 2) a2.blocks.push_back(b);
      }
      CHECK(h2.elements == conj_codes(q8.group, a2, q8.elements));
      CHECK(t2.kernel == conj_codes(q8.group, a2, t.kernel));
    }
  }
}

TEST_CASE("reduced counts") {
  struct Row {
    const char* n;
    const char* g;
    std::uint64_t r, c;
  };
  const Row rows[] = {
      {"c3xc2xc16", "q96", 16, 6}, {"c24", "q24", 3, 2},      {"c12", "d12", 3, 2},
      {"c3xc2xc4", "q24", 6, 3},   {"c3xc2xc2xc2", "q24", 42, 1}, {"c3xc2xc2", "d12", 3, 1},
      {"c5xc2xc8", "q80", 8, 4},   {"c5xc2xc8", "d80", 16, 6}, {"c15xc4xc4", "q240", 48, 2},
      {"c5xc16", "d80", 1, 1},
  };
  for (const auto& row : rows) {
    CAPTURE(row.n);
    CAPTURE(row.g);
    const auto [r, c] = reduce_counts(GroupSpec::parse(row.n), TargetKind::parse(row.g));
    CHECK(r == row.r);
    CHECK(c == row.c);
  }
  CHECK_THROWS_AS(reduce_counts(GroupSpec::parse("c3xc3xc8"), TargetKind::parse("q72")), InvalidInput);
}

TEST_CASE("reduction agrees with direct search at s = 3") {
  const char* cases[][2] = {{"c24", "q24"},       {"c3xc2xc4", "q24"}, {"c3xc2xc2xc2", "d24"},
                            {"c12", "d12"},       {"c3xc2xc8", "d48"}, {"c3xc4xc4", "q48"},
                            {"c3xc2xc4", "d24"}};
  for (const auto& cs : cases) {
    CAPTURE(cs[0]);
    CAPTURE(cs[1]);
    const GroupSpec n = GroupSpec::parse(cs[0]);
    const TargetKind k = TargetKind::parse(cs[1]);
    const Census red = reduce_census(n, k);
    const Census dir = Enumerator(n).census(k);
    CHECK(red.path == "reduction");
    CHECK(red.r == dir.r);
    CHECK(red.c == dir.c);
    std::multiset<std::uint64_t> a, b;
    for (const auto& cls : red.classes) a.insert(cls.orbit_size);
    for (const auto& cls : dir.classes) b.insert(cls.orbit_size);
    CHECK(a == b);
    const auto all = find_regular(n, k);
    for (const auto& cls : red.classes) {
      CHECK(std::binary_search(all.begin(), all.end(), cls.representative));
    }
  }
}
