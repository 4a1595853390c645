#include "doctest.h"

#include <deque>
#include <map>
#include <set>

#include "sbundle/error.hpp"
#include "sbundle/face_numbers.hpp"
#include "sbundle/handle.hpp"
#include "sbundle/stacked.hpp"

using namespace sbundle;

namespace {

// Plain BFS over edges read straight off the facets.
std::map<Vertex, int> bfs(const Complex& c, Vertex source) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (const auto& f : c.facets()) {
    for (Vertex a : f) {
      for (Vertex b : f) {
        if (a != b) adj[a].insert(b);
      }
    }
  }
  std::map<Vertex, int> dist{{source, 0}};
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (!dist.contains(w)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("build_delta vertex and facet counts") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i <= 2 * n + 2; ++i) {
      const auto s = build_delta(n, i);
      CHECK(s.complex.vertex_count() == static_cast<std::size_t>(n + i));
      CHECK(s.complex.facet_count() == static_cast<std::size_t>(n + 1 + (i - 1) * (n - 1)));
      CHECK(replay(s.trace) == s.complex);
    }
  }
}

TEST_CASE("distance table agrees with BFS") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i <= 2 * n + 2; ++i) {
      const Complex c = build_delta(n, i).complex;
      const DistanceTable t = distance_table(n, i);
      REQUIRE(t.column_count() == n + i);
      for (int row = 1; row <= n; ++row) {
        const auto d = bfs(c, row);
        for (int v = 1; v <= n + i; ++v) CHECK(t.at(row, v) == d.at(v));
      }
    }
  }
}

TEST_CASE("distance table columns at n = 4") {
  const DistanceTable t = distance_table(4, 10);
  CHECK(t.at(1, 10) == 3);
  CHECK(t.column(5) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("subdivide_facet errors") {
  const Complex s = boundary_of_simplex(3);
  const Vertex not_facet[] = {1, 2, 5};
  CHECK_THROWS_AS(subdivide_facet(s, not_facet, 9), Error);
  const Vertex facet[] = {1, 2, 3};
  try {
    subdivide_facet(s, facet, 2);
    FAIL("expected VertexInUse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexInUse);
  }
}

TEST_CASE("stack decomposition shares roots like a tree") {
  // v1 subdivides an original facet; v2 and v3 both subdivide facets made by
  // v1; v4 subdivides a facet made by v3.
  SubdivisionTrace t;
  t.base = {1, 2, 3, 4};
  t.steps.push_back({{1, 2, 3}, 5});
  t.steps.push_back({{1, 2, 5}, 6});
  t.steps.push_back({{2, 3, 5}, 7});
  t.steps.push_back({{3, 5, 7}, 8});
  const auto dec = stack_decomposition(t);
  REQUIRE(dec.stacks.size() == 2);
  CHECK(dec.stacks[0].steps == std::vector<std::size_t>{0, 1});
  CHECK(dec.stacks[1].steps == std::vector<std::size_t>{0, 2, 3});
  CHECK(dec.stacks[1].top_vertex == 8);
  CHECK(dec.stacks[1].top.size() == 3);
}

TEST_CASE("build_delta has one stack") {
  for (int n = 3; n <= 6; ++n) CHECK(stack_decomposition(build_delta(n, 2 * n + 1).trace).stacks.size() == 1);
}

TEST_CASE("random stacked spheres") {
  for (int n = 4; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const int steps = static_cast<int>(seed % 9) + 1;
      const auto s = random_stacked_sphere(n, steps, seed * 7919 + static_cast<std::uint64_t>(n));
      const int m = n + 1 + steps;
      CHECK(s.complex.vertex_count() == static_cast<std::size_t>(m));
      const HVector h = h_from_f(f_vector(s.complex), n);
      CHECK(h.at(0) == 1);
      CHECK(h.at(n) == 1);
      for (int i = 1; i < n; ++i) CHECK(h.at(i) == m - n);
      const auto trace = recognize_stacked(s.complex);
      REQUIRE(trace.has_value());
      CHECK(replay(*trace) == s.complex);
    }
  }
}

TEST_CASE("recognize_stacked rejects non-spheres") {
  for (int n = 4; n <= 6; ++n) CHECK_FALSE(recognize_stacked(build_miss(n)).has_value());
  // Octahedron boundary: a sphere but not stacked.
  const Complex oct = Complex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5},
                                            {6, 2, 3}, {6, 3, 4}, {6, 4, 5}, {6, 2, 5}});
  CHECK_FALSE(recognize_stacked(oct).has_value());
}
