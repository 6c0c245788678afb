#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holobrace/error.hpp"
#include "holobrace/structured.hpp"

using namespace holobrace;

namespace {

void check_same_as_engine(const StructuredResult& res, const GroupSpec& n) {
  Enumerator e(n);
  const auto found = e.find_regular(res.kind);
  REQUIRE(found.size() == res.subgroups.size());
  for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].elements == res.subgroups[i].elements);
  const auto classes = e.classify(found);
  REQUIRE(classes.size() == res.classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i].representative.elements == res.classes[i].representative.elements);
    CHECK(classes[i].orbit_size == res.classes[i].orbit_size);
    CHECK(classes[i].stabilizer_order == res.classes[i].stabilizer_order);
  }
}

void check_pairs(const StructuredResult& res, const GroupSpec& n) {
  for (const auto& pair : res.pairs) {
    CHECK(pair.params.size() == StructuredGeneratorPair::param_names(pair.family).size());
    const auto s = generate_closure(n, {pair.x, pair.y}, n.order());
    REQUIRE(s.size() == n.order());
    CHECK(is_regular(n, s));
    CHECK(classify_subgroup(n, s) == res.kind);
  }
}

}  // namespace

TEST_CASE("cyclic family has a single subgroup") {
  for (int n = 4; n <= 9; ++n) {
    for (const Kind k : {Kind::quaternion, Kind::dihedral}) {
      CAPTURE(n);
      const auto res = solve_cyclic(n, k);
      REQUIRE(res);
      CHECK(res->r == 1);
      CHECK(res->c == 1);
      REQUIRE(res->pairs.size() == 1);
      const std::uint64_t mod = std::uint64_t{1} << n;
      const std::uint64_t beta = k == Kind::quaternion ? mod / 2 - 1 : mod - 1;
      CHECK(res->pairs[0].params == std::vector<std::uint64_t>{1, beta, 2, 1});
      CHECK(res->classes[0].stabilizer_order == mod / 2);
      if (n <= 6) check_pairs(*res, GroupSpec::from_orders({mod}));
    }
  }
  CHECK_FALSE(solve_cyclic(3, Kind::quaternion));
}

TEST_CASE("rank-2 family: 8 fundamentals, 16 subgroups, 6 classes") {
  for (int n = 5; n <= 8; ++n) {
    for (const Kind k : {Kind::quaternion, Kind::dihedral}) {
      CAPTURE(n);
      const auto res = solve_rank2(n, k);
      REQUIRE(res);
      CHECK(res->pairs.size() == 8);
      CHECK(res->r == 16);
      CHECK(res->c == 6);
      std::uint64_t total = 0;
      for (const auto& cls : res->classes) {
        total += cls.orbit_size;
        CHECK(cls.orbit_size * cls.stabilizer_order == (std::uint64_t{1} << n));
      }
      CHECK(total == 16);
      if (n <= 6) check_pairs(*res, GroupSpec::from_orders({2, std::uint64_t{1} << (n - 1)}));
    }
  }
  CHECK_FALSE(solve_rank2(4, Kind::dihedral));
}

TEST_CASE("structured results agree with the generic engine") {
  for (const Kind k : {Kind::quaternion, Kind::dihedral}) {
    check_same_as_engine(*solve_cyclic(4, k), GroupSpec::from_orders({16}));
    check_same_as_engine(*solve_cyclic(5, k), GroupSpec::from_orders({32}));
    check_same_as_engine(*solve_rank2(5, k), GroupSpec::from_orders({2, 16}));
    check_same_as_engine(*solve_rank2(6, k), GroupSpec::from_orders({2, 32}));
  }
}

TEST_CASE("structured census dispatch") {
  const auto c = structured_census(GroupSpec::from_orders({2, 64}), TargetKind(Kind::dihedral, 7));
  REQUIRE(c);
  CHECK(c->path == "structured");
  CHECK(c->r == 16);
  CHECK(c->c == 6);
  CHECK_FALSE(structured_census(GroupSpec::from_orders({4, 16}), TargetKind(Kind::dihedral, 6)));
  CHECK_FALSE(structured_census(GroupSpec::from_orders({3, 32}), TargetKind(Kind::dihedral, 5, 3)));
  CHECK_FALSE(structured_census(GroupSpec::from_orders({32}), TargetKind(Kind::dihedral, 6)));
}
