#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holobrace/counts.hpp"
#include "holobrace/error.hpp"
#include "json.hpp"

using namespace holobrace;

namespace {

struct Row {
  const char* n;
  const char* g;
  std::uint64_t c, r, h;
};

const Row kTable1[] = {
    {"c4", "q4", 1, 1, 1},           {"c2xc2", "q4", 1, 3, 1},       {"c4", "d4", 1, 1, 3},
    {"c2xc2", "d4", 1, 1, 1},        {"c8", "q8", 1, 1, 6},          {"c2xc4", "q8", 1, 2, 6},
    {"c2xc2xc2", "q8", 1, 14, 2},    {"c8", "d8", 1, 1, 2},          {"c2xc4", "d8", 5, 14, 14},
    {"c2xc2xc2", "d8", 2, 126, 6},   {"c16", "q16", 1, 1, 4},        {"c2xc8", "q16", 4, 8, 16},
    {"c4xc4", "q16", 2, 48, 16},     {"c2xc2xc4", "q16", 1, 48, 8},  {"c2xc2xc2xc2", "q16", 1, 5040, 8},
    {"c16", "d16", 1, 1, 4},         {"c2xc8", "d16", 6, 16, 32},    {"c4xc4", "d16", 0, 0, 0},
    {"c2xc2xc4", "d16", 0, 0, 0},    {"c2xc2xc2xc2", "d16", 0, 0, 0},
};

// Braces (quaternion, dihedral) and HGS counts per 2-part type, as
// functions of n and s.
struct TypeRow {
  const char* two;
  std::uint64_t qc, dc, qh, dh;  // h without the factor s
  bool any_s;                    // row also valid for s = 1
};

}  // namespace

TEST_CASE("hgs formula") {
  CHECK(hgs_count(TargetKind::parse("q16"), GroupSpec::parse("c2xc2xc2xc2"), 5040) == 8);
  CHECK(hgs_count(TargetKind::parse("d8"), GroupSpec::parse("c2xc4"), 14) == 14);
  CHECK(hgs_count(TargetKind::parse("q8"), GroupSpec::parse("c2xc2xc2"), 14) == 2);
  CHECK_THROWS_AS(hgs_count(TargetKind::parse("q8"), GroupSpec::parse("c2xc2xc2"), 1), InternalError);
}

TEST_CASE("closed forms") {
  CHECK(q_closed(8) == 7);
  CHECK(q_closed(4) == 9);
  CHECK(d_closed(6) == 8);
  CHECK(q_closed(3) == 2);
  CHECK(d_closed(3) == 3);
  CHECK(q_closed(10) == 6);
  CHECK(d_closed(12) == 7);
  CHECK(q_closed(24) == 7);
  CHECK_THROWS_AS(q_closed(2), DomainError);
  CHECK_THROWS_AS(d_closed(0), DomainError);
}

TEST_CASE("hgs reduction") {
  CHECK(hgs_reduce(GroupSpec::parse("c3xc2xc8"), TargetKind::parse("d48")) == 96);
  CHECK(hgs_reduce(GroupSpec::parse("c3xc4"), TargetKind::parse("q12")) == 3);
  CHECK(hgs_reduce(GroupSpec::parse("c16"), TargetKind::parse("q16")) == 4);
  // Against direct enumeration and the formula at s = 3.
  for (const auto& n : {"c12", "c3xc2xc2", "c24", "c3xc2xc4", "c3xc2xc2xc2", "c48", "c3xc2xc8", "c3xc4xc4"}) {
    for (const Kind k : {Kind::quaternion, Kind::dihedral}) {
      const GroupSpec g = GroupSpec::parse(n);
      const TargetKind t = TargetKind::of_order(k, g.order());
      CAPTURE(n);
      CHECK(hgs_reduce(g, t) == hgs_count(t, g, compute_census(g, t, CensusPath::enumeration).r));
    }
  }
}

TEST_CASE("census paths") {
  const GroupSpec c2c16 = GroupSpec::parse("c2xc16");
  const TargetKind q32 = TargetKind::parse("q32");
  const Census s = compute_census(c2c16, q32, CensusPath::structured);
  const Census e = compute_census(c2c16, q32, CensusPath::enumeration);
  CHECK(s.path == "structured");
  CHECK(e.path == "full");
  CHECK(s.r == e.r);
  CHECK(s.c == e.c);
  CHECK(compute_census(c2c16, q32).path == "structured");
  CHECK(compute_census(GroupSpec::parse("c3xc2xc8"), TargetKind::parse("q48")).path == "reduction");
  CHECK(compute_census(GroupSpec::parse("c3xc3xc4"), TargetKind::parse("q36")).path == "full");
  CHECK_THROWS_AS(compute_census(GroupSpec::parse("c8"), TargetKind::parse("q8"), CensusPath::structured), InvalidInput);
  CHECK_THROWS_AS(compute_census(GroupSpec::parse("c3xc3xc4"), TargetKind::parse("q36"), CensusPath::reduction),
                  InvalidInput);
  CHECK_THROWS_AS(compute_census(GroupSpec::parse("c8"), TargetKind::parse("q16")), InvalidInput);
}

TEST_CASE("order 4, 8, 16 table") {
  const CountReport rep = table_report({1});
  REQUIRE(rep.rows.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) {
    CAPTURE(kTable1[i].n);
    CAPTURE(kTable1[i].g);
    const auto& row = rep.rows[i];
    CHECK(row.group == GroupSpec::parse(kTable1[i].n));
    CHECK(row.kind == TargetKind::parse(kTable1[i].g));
    CHECK(row.c == kTable1[i].c);
    CHECK(row.r == kTable1[i].r);
    CHECK(row.h == kTable1[i].h);
    CHECK_FALSE(row.skipped);
  }
  // q and d, and HGS totals per Galois group.
  const std::pair<const char*, std::pair<std::uint64_t, std::uint64_t>> totals[] = {
      {"q4", {2, 2}}, {"d4", {2, 4}}, {"q8", {3, 14}}, {"d8", {8, 22}}, {"q16", {9, 52}}, {"d16", {7, 36}}};
  REQUIRE(rep.aggregates.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(rep.aggregates[i].kind == TargetKind::parse(totals[i].first));
    CHECK(rep.aggregates[i].braces == totals[i].second.first);
    CHECK(rep.aggregates[i].hgs == totals[i].second.second);
  }
  const std::string text = format_text(rep);
  CHECK(text.find("C_2×C_2×C_2×C_2  Q_16     1  5040  8") != std::string::npos);
  const std::string csv = format_csv(rep);
  CHECK(csv.rfind("N,G,c,r,h,path\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
  const auto j = nlohmann::json::parse(format_json(rep));
  CHECK(j["schema"] == "v1");
  CHECK(j["rows"].size() == 20);
  CHECK(j["rows"][14]["r"] == 5040);
}

TEST_CASE("additive-group tables") {
  const TypeRow rows[] = {
      {"c4", 1, 2, 1, 3, false},    {"c2xc2", 1, 1, 1, 1, true},    {"c8", 2, 1, 6, 2, false},
      {"c2xc4", 3, 5, 6, 14, false}, {"c2xc2xc2", 1, 2, 2, 6, true}, {"c16", 1, 1, 4, 4, true},
      {"c2xc8", 4, 6, 16, 32, true}, {"c4xc4", 2, 0, 16, 0, true},   {"c2xc2xc4", 1, 0, 8, 0, true},
      {"c2xc2xc2xc2", 1, 0, 8, 0, true},
  };
  for (const std::uint64_t s : {1, 3, 5}) {
    const CountReport braces = table_report({3, 6, s});
    const CountReport hgs = table_report({4, 6, s});
    REQUIRE(braces.rows.size() == 28);
    for (std::size_t i = 0; i < 10; ++i) {
      CAPTURE(s);
      CAPTURE(rows[i].two);
      const auto& q = braces.rows[2 * i];
      const auto& d = braces.rows[2 * i + 1];
      CHECK(q.group.order() == GroupSpec::parse(rows[i].two).order() * s);
      // s = 1 rows of orders 4 and 8 follow the order 4, 8 values instead.
      if (s > 1 || rows[i].any_s) {
        CHECK(q.c == rows[i].qc);
        CHECK(d.c == rows[i].dc);
      }
      CHECK(hgs.rows[2 * i].h == rows[i].qh * s);
      CHECK(hgs.rows[2 * i + 1].h == rows[i].dh * s);
    }
    for (int n = 5; n <= 6; ++n) {
      const std::size_t base = 20 + 4 * (n - 5);
      CHECK(braces.rows[base].c == 1);
      CHECK(braces.rows[base + 1].c == 1);
      CHECK(braces.rows[base + 2].c == 6);
      CHECK(braces.rows[base + 3].c == 6);
      CHECK(hgs.rows[base].h == (std::uint64_t{1} << (n - 2)) * s);
      CHECK(hgs.rows[base + 2].h == (std::uint64_t{1} << (n + 1)) * s);
      CHECK(hgs.rows[base + 3].h == (std::uint64_t{1} << (n + 1)) * s);
    }
    // Row sums per order against the closed forms.
    for (const auto& a : braces.aggregates) {
      const std::uint64_t m = a.kind.order() / 4;
      if (m < 3) continue;
      CHECK(a.braces == (a.kind.is_quaternion() ? q_closed(m) : d_closed(m)));
    }
  }
  CHECK_THROWS_AS(table_report({2}), InvalidInput);
  CHECK_THROWS_AS(table_report({3, 5, 2}), InvalidInput);
}

TEST_CASE("closed forms against every abelian group") {
  for (std::uint64_t m = 3; m <= 12; ++m) {
    CAPTURE(m);
    const ConjectureCheck c = verify_conjecture(m);
    CHECK(c.complete);
    CHECK(c.ok());
    CHECK(c.rows.size() == 2 * abelian_groups(4 * m).size());
  }
}
