#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "sbundle/sbundle.h"

TEST_CASE("status names") {
  CHECK(std::string(sb_status_name(SB_OK)) == "Ok");
  CHECK(std::string(sb_status_name(SB_DISTANCE_VIOLATION)) == "DistanceViolation");
  CHECK(std::string(sb_status_name(SB_BUFFER_TOO_SMALL)) == "BufferTooSmall");
  CHECK(std::string(sb_status_name(static_cast<sb_status>(77))) == "Unknown");
}

TEST_CASE("build, query and free") {
  sb_complex* c = nullptr;
  REQUIRE(sb_build_miss(4, &c) == SB_OK);
  CHECK(sb_complex_facet_size(c) == 4);
  CHECK(sb_complex_vertex_count(c) == 9);
  CHECK(sb_complex_facet_count(c) == 27);

  size_t len = 0;
  CHECK(sb_f_vector(c, nullptr, 0, &len) == SB_BUFFER_TOO_SMALL);
  CHECK(len == 5);
  std::vector<int64_t> f(len);
  REQUIRE(sb_f_vector(c, f.data(), f.size(), &len) == SB_OK);
  CHECK(f == std::vector<int64_t>{1, 9, 36, 54, 27});

  std::vector<int64_t> b(8);
  REQUIRE(sb_betti_numbers(c, b.data(), b.size(), &len) == SB_OK);
  b.resize(len);
  CHECK(b == std::vector<int64_t>{1, 1, 0, 0});

  int orientable = -1;
  REQUIRE(sb_is_orientable(c, &orientable) == SB_OK);
  CHECK(orientable == 0);

  sb_complex* cover = nullptr;
  REQUIRE(sb_double_cover(c, &cover) == SB_OK);
  CHECK(sb_complex_vertex_count(cover) == 18);
  sb_complex_free(cover);

  char* json = nullptr;
  REQUIRE(sb_analyze(c, 1, &json) == SB_OK);
  CHECK(std::strstr(json, "\"schema\": \"sbundle.analysis/1\"") != nullptr);
  sb_string_free(json);
  sb_complex_free(c);
}

TEST_CASE("facet round trip through text") {
  const int32_t labels[] = {3, 2, 1, 1, 2, 4};
  sb_complex* c = nullptr;
  REQUIRE(sb_complex_from_facets(labels, 2, 3, &c) == SB_OK);
  char* text = nullptr;
  REQUIRE(sb_complex_write(c, &text) == SB_OK);
  CHECK(std::string(text) == "1 2 3\n1 2 4\n");
  sb_complex* d = nullptr;
  REQUIRE(sb_complex_parse(text, std::strlen(text), &d) == SB_OK);
  std::vector<int32_t> out(6);
  REQUIRE(sb_complex_facets(d, out.data(), out.size()) == SB_OK);
  CHECK(out == std::vector<int32_t>{1, 2, 3, 1, 2, 4});
  CHECK(sb_complex_facets(d, out.data(), 5) == SB_BUFFER_TOO_SMALL);
  sb_string_free(text);
  sb_complex_free(c);
  sb_complex_free(d);
}

TEST_CASE("errors set status and message") {
  sb_complex* c = nullptr;
  const char bad[] = "1 2 3\n1 2\n";
  CHECK(sb_complex_parse(bad, sizeof bad - 1, &c) == SB_MIXED_CARDINALITY);
  CHECK(std::string(sb_last_error()).find("line 2") != std::string::npos);
  CHECK(c == nullptr);
  CHECK(sb_build_iss(5, 11, 0, &c, nullptr, nullptr) == SB_INFEASIBLE_VERTEX_COUNT);
  CHECK(sb_complex_write(nullptr, nullptr) == SB_NULL_ARGUMENT);
  CHECK(sb_build_miss(4, &c) == SB_OK);
  CHECK(std::string(sb_last_error()).empty());
  sb_complex_free(c);
}

TEST_CASE("schedule and fill") {
  sb_complex* iss = nullptr;
  int swapped = -1;
  char* warnings = nullptr;
  REQUIRE(sb_build_iss(5, 12, 0, &iss, &swapped, &warnings) == SB_OK);
  CHECK(swapped == 1);
  sb_string_free(warnings);
  sb_schedule* s = nullptr;
  REQUIRE(sb_fill_schedule(iss, 5, 12, swapped, &s) == SB_OK);
  CHECK(sb_schedule_length(s) == 6);
  sb_complex* full = nullptr;
  REQUIRE(sb_fill_to(iss, s, 66, &full) == SB_OK);
  int64_t f[6];
  size_t len = 0;
  REQUIRE(sb_f_vector(full, f, 6, &len) == SB_OK);
  CHECK(f[2] == 66);
  CHECK(sb_fill_to(iss, s, 67, &full) == SB_TARGET_OUT_OF_RANGE);
  sb_complex_free(full);
  sb_schedule_free(s);
  sb_complex_free(iss);

  int feasible = -1;
  int64_t lo = 0, hi = 0;
  REQUIRE(sb_feasible_region(3, 11, 0, &feasible, &lo, &hi) == SB_OK);
  CHECK(feasible == 0);
  REQUIRE(sb_feasible_region(3, 12, 0, &feasible, &lo, &hi) == SB_OK);
  CHECK(feasible == 1);
  CHECK(lo == 60);
  CHECK(hi == 66);
}

TEST_CASE("isomorphism witness") {
  sb_complex* a = nullptr;
  sb_complex* b = nullptr;
  REQUIRE(sb_build_miss(5, &a) == SB_OK);
  REQUIRE(sb_build_kuhnel(5, &b) == SB_OK);
  int found = 0;
  std::vector<int32_t> pairs(22);
  REQUIRE(sb_isomorphism(a, b, &found, pairs.data(), pairs.size()) == SB_OK);
  CHECK(found == 1);
  CHECK(sb_isomorphism(a, b, &found, pairs.data(), 3) == SB_BUFFER_TOO_SMALL);
  sb_complex_free(a);
  sb_complex_free(b);
}
