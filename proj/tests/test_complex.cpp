#include "doctest.h"

#include <algorithm>
#include <set>

#include "sbundle/complex.hpp"
#include "sbundle/error.hpp"
#include "sbundle/stacked.hpp"

using namespace sbundle;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

}  // namespace

TEST_CASE("from_facets canonicalizes") {
  const Complex c = Complex::from_facets({{3, 1, 2}, {2, 4, 1}, {1, 2, 3}});
  CHECK(c.n() == 3);
  CHECK(c.facet_count() == 2);
  CHECK(c.facets()[0] == Face{1, 2, 3});
  CHECK(c.facets()[1] == Face{1, 2, 4});
  CHECK(c.vertices() == std::vector<Vertex>{1, 2, 3, 4});
  const Vertex edge[] = {1, 4};
  CHECK(c.has_face(edge));
  const Vertex missing[] = {3, 4};
  CHECK_FALSE(c.has_face(missing));
}

TEST_CASE("from_facets rejects malformed input") {
  CHECK(code_of([] { Complex::from_facets({}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { Complex::from_facets({{1, 2, 3}, {1, 2}}); }) == ErrorCode::MixedCardinality);
  CHECK(code_of([] { Complex::from_facets({{0, 1, 2}}); }) == ErrorCode::NonPositiveLabel);
  CHECK(code_of([] { Complex::from_facets({{1, 1, 2}}); }) == ErrorCode::RepeatedVertex);
}

TEST_CASE("link of a vertex and of a facet") {
  const Complex s = boundary_of_simplex(4);
  const Vertex v[] = {1};
  const Complex lk = link(s, v);
  CHECK(lk == boundary_of_simplex(std::vector<Vertex>{2, 3, 4, 5}));
  const Vertex facet[] = {1, 2, 3, 4};
  CHECK(link(s, facet) == Complex::empty_face());
  const Vertex absent[] = {1, 9};
  CHECK(code_of([&] { link(s, absent); }) == ErrorCode::NotAFace);
}

TEST_CASE("induced subcomplex lists all faces inside the subset") {
  const Complex c = Complex::from_facets({{1, 2, 3}, {2, 3, 4}});
  const Vertex subset[] = {2, 3, 4};
  const auto faces = induced_subcomplex(c, subset);
  CHECK(faces.size() == 7);
  CHECK(faces.front() == Face{2});
  CHECK(faces.back() == Face{2, 3, 4});
  const Vertex bad[] = {2, 9};
  CHECK(code_of([&] { induced_subcomplex(c, bad); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("graph distance") {
  const Complex path = Complex::from_facets({{1, 2}, {2, 3}, {3, 4}, {5, 6}});
  CHECK(graph_distance(path, 1, 4) == 3);
  CHECK(graph_distance(path, 2, 2) == 0);
  CHECK(code_of([&] { graph_distance(path, 1, 5); }) == ErrorCode::Disconnected);
  CHECK(code_of([&] { graph_distance(path, 1, 7); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("pseudomanifold check") {
  CHECK(is_pseudomanifold(boundary_of_simplex(3)).ok);
  CHECK_FALSE(is_pseudomanifold(Complex::from_facets({{1, 2, 3}, {1, 2, 4}})).ok);
  // Two tetrahedron boundaries sharing nothing: not strongly connected.
  Complex two = Complex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                      {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
  CHECK_FALSE(is_pseudomanifold(two).ok);
  CHECK(ridge_adjacencies(boundary_of_simplex(3)).size() == 6);
  CHECK(code_of([] { ridge_adjacencies(Complex::from_facets({{1, 2, 3}})); }) == ErrorCode::NotPseudomanifold);
}

TEST_CASE("relabel and canonical labels") {
  const Complex c = Complex::from_facets({{10, 20, 30}, {10, 20, 40}});
  const Complex r = relabel(c, {{10, 1}, {20, 2}, {30, 3}, {40, 4}});
  CHECK(r == Complex::from_facets({{1, 2, 3}, {1, 2, 4}}));
  CHECK(canonical_labels(c) == r);
}

TEST_CASE("faces_by_size against a brute-force downward closure") {
  const Complex c = build_delta(4, 5).complex;
  const auto buckets = faces_by_size(c);
  std::set<Face> closure;
  for (const auto& f : c.facets()) {
    for (unsigned mask = 0; mask < (1u << f.size()); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      closure.insert(sub);
    }
  }
  std::size_t total = 0;
  for (const auto& b : buckets) {
    total += b.size();
    for (const auto& f : b) CHECK(closure.contains(f));
  }
  CHECK(total == closure.size());
}
