#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "holobrace/holobrace.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("census through the C API") {
  hb_census* c = nullptr;
  REQUIRE(hb_census_compute("c2xc8", "d16", HB_PATH_AUTO, nullptr, &c) == HB_OK);
  CHECK(hb_census_c(c) == 6);
  CHECK(hb_census_r(c) == 16);
  CHECK(hb_census_h(c) == 32);
  CHECK(std::string(hb_census_path(c)) == "full");

  std::uint64_t total = 0;
  for (size_t i = 0; i < hb_census_c(c); ++i) {
    std::uint64_t orbit = 0, stab = 0;
    REQUIRE(hb_census_class(c, i, &orbit, &stab) == HB_OK);
    CHECK(orbit * stab == 16);
    total += orbit;
  }
  CHECK(total == 16);
  CHECK(hb_census_class(c, 6, nullptr, nullptr) == HB_INVALID_INPUT);

  char* json = nullptr;
  REQUIRE(hb_census_to_json(c, 1, nullptr, &json) == HB_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["schema"] == "v1");
  CHECK(j["c"] == 6);
  CHECK(j["r"] == 16);
  CHECK(j["h"] == 32);
  CHECK(j["classes"].size() == 6);
  CHECK(j["classes"][0].contains("orbit"));
  CHECK(j["classes"][0].contains("stabilizer"));
  CHECK(!j["aut_generators"].empty());
  hb_census_free(c);
}

TEST_CASE("paths agree") {
  hb_census* a = nullptr;
  hb_census* b = nullptr;
  REQUIRE(hb_census_compute("c3xc2xc4", "q24", HB_PATH_REDUCTION, nullptr, &a) == HB_OK);
  REQUIRE(hb_census_compute("c3xc2xc4", "q24", HB_PATH_ENUMERATION, nullptr, &b) == HB_OK);
  CHECK(hb_census_c(a) == 3);
  CHECK(hb_census_c(a) == hb_census_c(b));
  CHECK(hb_census_r(a) == hb_census_r(b));
  CHECK(std::string(hb_census_path(a)) == "reduction");
  hb_census_free(a);
  hb_census_free(b);
}

TEST_CASE("error codes") {
  hb_census* c = nullptr;
  CHECK(hb_census_compute("c2xc", "q16", HB_PATH_AUTO, nullptr, &c) == HB_INVALID_INPUT);
  CHECK(c == nullptr);
  CHECK(std::string(hb_last_error()).size() > 0);
  CHECK(hb_census_compute("c16", "x16", HB_PATH_AUTO, nullptr, &c) == HB_INVALID_INPUT);
  CHECK(hb_census_compute("c3xc3xc4", "q36", HB_PATH_REDUCTION, nullptr, &c) == HB_INVALID_INPUT);
  CHECK(hb_census_compute(nullptr, "q16", HB_PATH_AUTO, nullptr, &c) == HB_NULL_ARGUMENT);

  hb_options* o = nullptr;
  REQUIRE(hb_options_new(&o) == HB_OK);
  CHECK(hb_options_set_cap(o, 0) == HB_INVALID_INPUT);
  REQUIRE(hb_options_set_cap(o, 10) == HB_OK);
  CHECK(hb_census_compute("c2xc2xc2xc2", "q16", HB_PATH_AUTO, o, &c) == HB_CAPACITY);
  CHECK(c == nullptr);
  hb_options_free(o);

  std::uint64_t v = 0;
  CHECK(hb_q_closed(2, &v) == HB_DOMAIN);
  CHECK(hb_hgs_count("q16", "c2xc2xc2xc2", 5040, &v) == HB_OK);
  CHECK(v == 8);
  CHECK(hb_hgs_count("q16", "c2xc2xc2xc2", 1, &v) == HB_INTERNAL);

  hb_census_to_json(nullptr, 0, nullptr, nullptr);
  CHECK(std::string(hb_last_error()).find("NULL") != std::string::npos);
}

TEST_CASE("closed forms") {
  std::uint64_t q = 0, d = 0;
  REQUIRE(hb_q_closed(8, &q) == HB_OK);
  REQUIRE(hb_d_closed(8, &d) == HB_OK);
  CHECK(q == 7);
  CHECK(d == 7);
  REQUIRE(hb_q_closed(6, &q) == HB_OK);
  REQUIRE(hb_d_closed(6, &d) == HB_OK);
  CHECK(q == 6);
  CHECK(d == 8);

  int ok = 0;
  char* out = nullptr;
  REQUIRE(hb_verify_conjecture(6, nullptr, &ok, &out) == HB_OK);
  CHECK(ok == 1);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["q_computed"] == 6);
  CHECK(j["d_computed"] == 8);
}

TEST_CASE("spectrum and tables") {
  char* out = nullptr;
  REQUIRE(hb_spectrum_json("c4xc8", nullptr, &out) == HB_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["max_order"] == 8);
  CHECK(j["hol_order"] == 32 * 128);

  std::vector<std::string> seen;
  hb_options* o = nullptr;
  REQUIRE(hb_options_new(&o) == HB_OK);
  hb_options_set_progress(
      o, [](const char* msg, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(msg); }, &seen);
  REQUIRE(hb_table(1, 0, 1, HB_FORMAT_CSV, o, &out) == HB_OK);
  const std::string csv = take(out);
  CHECK(csv.rfind("N,G,c,r,h,path\n", 0) == 0);
  CHECK(csv.find("C_2×C_2×C_2×C_2,Q_16,1,5040,8") != std::string::npos);
  CHECK(!seen.empty());
  hb_options_free(o);

  CHECK(hb_table(2, 5, 1, HB_FORMAT_TEXT, nullptr, &out) == HB_INVALID_INPUT);
  CHECK(hb_table(3, 5, 2, HB_FORMAT_TEXT, nullptr, &out) == HB_INVALID_INPUT);
}

TEST_CASE("braces") {
  hb_census* c = nullptr;
  REQUIRE(hb_census_compute("c2xc4", "d8", HB_PATH_AUTO, nullptr, &c) == HB_OK);
  for (size_t i = 0; i < hb_census_c(c); ++i) {
    hb_brace* b = nullptr;
    REQUIRE(hb_brace_from_census(c, i, &b) == HB_OK);
    CHECK(hb_brace_order(b) == 8);
    int ok = 0;
    REQUIRE(hb_brace_verify(b, &ok, nullptr) == HB_OK);
    CHECK(ok == 1);
    int left = 0, right = 0;
    REQUIRE(hb_brace_ybe_check(b, &left, &right) == HB_OK);
    CHECK(left == 1);
    CHECK(right == 1);

    char* json = nullptr;
    REQUIRE(hb_brace_to_json(b, &json) == HB_OK);
    const std::string text = take(json);
    hb_brace* back = nullptr;
    REQUIRE(hb_brace_from_json(text.c_str(), &back) == HB_OK);
    for (uint32_t x = 0; x < 8; ++x) {
      for (uint32_t y = 0; y < 8; ++y) {
        uint32_t u = 0, v = 0;
        hb_brace_op(b, x, y, &u);
        hb_brace_op(back, x, y, &v);
        CHECK(u == v);
      }
    }
    hb_brace_free(back);
    hb_brace_free(b);
  }
  hb_brace* b = nullptr;
  CHECK(hb_brace_from_census(c, 99, &b) == HB_INVALID_INPUT);
  hb_census_free(c);

  CHECK(hb_brace_from_json("{\"schema\":\"v1\"}", &b) == HB_INVALID_INPUT);
  CHECK(hb_brace_from_json("not json", &b) == HB_INVALID_INPUT);
  CHECK(b == nullptr);
}

TEST_CASE("structured path") {
  hb_census* c = nullptr;
  REQUIRE(hb_census_compute("c2xc16", "d32", HB_PATH_STRUCTURED, nullptr, &c) == HB_OK);
  CHECK(std::string(hb_census_path(c)) == "structured");
  CHECK(hb_census_c(c) == 6);
  CHECK(hb_census_r(c) == 16);
  CHECK(hb_census_h(c) == 64);
  hb_census_free(c);
  CHECK(hb_census_compute("c4xc4", "q16", HB_PATH_STRUCTURED, nullptr, &c) == HB_INVALID_INPUT);
}
