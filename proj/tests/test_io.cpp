#include "doctest.h"

#include "json.hpp"
#include "sbundle/error.hpp"
#include "sbundle/handle.hpp"
#include "sbundle/io.hpp"
#include "sbundle/stacked.hpp"

using namespace sbundle;

namespace {

std::size_t failing_line(std::string_view text) {
  try {
    parse_facet_list(text);
  } catch (const LineError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse tolerates comments, blank lines and CRLF") {
  const Complex c = parse_facet_list("# torus?\r\n\r\n3 2 1\r\n  1 2 4\n# trailing\n");
  CHECK(c == Complex::from_facets({{1, 2, 3}, {1, 2, 4}}));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(failing_line("1 2 3\n1 2 x\n") == 2);
  CHECK(failing_line("1 2 3\n\n1 2\n") == 3);
  CHECK(failing_line("1 0 3\n") == 1);
  CHECK(failing_line("1 2 2\n") == 1);
  CHECK(failing_line("1 2 99999999999\n") == 1);
  CHECK_THROWS_AS(parse_facet_list("# nothing\n\n"), Error);
}

TEST_CASE("write is canonical and round-trips") {
  for (const Complex& c : {build_miss(4), kuhnel_Mn(5), build_iss(5, 13, BundleType::Nonorientable).complex,
                           build_delta(6, 7).complex}) {
    const std::string text = write_facet_list(c);
    CHECK(parse_facet_list(text) == c);
    CHECK(write_facet_list(parse_facet_list(text)) == text);
  }
  CHECK(write_facet_list(Complex::from_facets({{2, 1}, {1, 3}}), {"hello"}) == "# hello\n1 2\n1 3\n");
}

TEST_CASE("trace and schedule text") {
  const auto s = build_delta(3, 2);
  CHECK(write_trace(s.trace) == "base: 1 2 3 4\nstep: 2 3 4 | new: 5\n");
}

TEST_CASE("analysis report") {
  const auto r = analyze(build_miss(4));
  CHECK(r.f == std::vector<std::int64_t>{1, 9, 36, 54, 27});
  CHECK(r.g2 == 10);
  CHECK(r.orientable == false);
  CHECK_FALSE(r.stacked_trace.has_value());
  CHECK(r.warnings.empty());

  const auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["schema"] == "sbundle.analysis/1");
  CHECK(j["f_vector"] == std::vector<int>{9, 36, 54, 27});
  CHECK(j["betti"] == std::vector<int>{1, 1, 0, 0});
  CHECK(j["klee_holds"] == true);
  CHECK(j["manifold_evidence"]["passed"] == true);

  const auto sphere = analyze(build_delta(4, 6).complex);
  REQUIRE(sphere.stacked_trace.has_value());
  CHECK(replay(*sphere.stacked_trace) == build_delta(4, 6).complex);
  CHECK(report_to_text(sphere).find("stacked sphere: yes") != std::string::npos);
}

TEST_CASE("report flags a Klee failure") {
  const auto r = analyze(Complex::from_facets({{1, 2, 3}, {1, 2, 4}, {4, 5, 6}}));
  CHECK_FALSE(r.pseudomanifold.ok);
  CHECK_FALSE(r.orientable.has_value());
  CHECK_FALSE(r.warnings.empty());
}
