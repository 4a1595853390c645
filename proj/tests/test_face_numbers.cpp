#include "doctest.h"

#include <set>

#include "sbundle/error.hpp"
#include "sbundle/face_numbers.hpp"
#include "sbundle/handle.hpp"
#include "sbundle/stacked.hpp"

using namespace sbundle;

namespace {

// Counts faces by closing facets downward, independent of faces_by_size.
std::vector<std::int64_t> brute_f(const Complex& c) {
  std::vector<std::set<Face>> faces(static_cast<std::size_t>(c.n()) + 1);
  for (const auto& f : c.facets()) {
    for (unsigned mask = 0; mask < (1u << f.size()); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      faces[sub.size()].insert(sub);
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& s : faces) out.push_back(static_cast<std::int64_t>(s.size()));
  return out;
}

}  // namespace

TEST_CASE("f-vector matches downward closure") {
  for (const Complex& c : {boundary_of_simplex(3), build_delta(5, 7).complex, build_miss(4), kuhnel_Mn(5)}) {
    CHECK(f_vector(c).values == brute_f(c));
  }
}

TEST_CASE("h and f transforms are inverse") {
  for (int n = 3; n <= 7; ++n) {
    const FVector f = f_vector(build_miss(n));
    const HVector h = h_from_f(f, n);
    CHECK(f_from_h(h, n) == f);
  }
}

TEST_CASE("boundary of a simplex has h = all ones") {
  for (int n = 2; n <= 6; ++n) {
    const HVector h = h_from_f(f_vector(boundary_of_simplex(n)), n);
    CHECK(h.values == std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1));
  }
}

TEST_CASE("g2 from f agrees with g-vector") {
  const Complex c = build_miss(5);
  const FVector f = f_vector(c);
  CHECK(g2_from_f(f, 5) == g_vector(h_from_f(f, 5)).g2);
  CHECK(g2_from_f(f, 5) == 15);
}

TEST_CASE("g2 exists for n = 3") {
  const GVector g = g_vector(h_from_f(f_vector(build_miss(3)), 3));
  CHECK(g.g2 == 6);
  CHECK(g.values.size() == 2);
}

TEST_CASE("Klee residual of a hand-computed complex") {
  // Two triangles sharing an edge plus a third meeting them at vertex 4.
  // f = (1, 6, 8, 3), chi = 1, chi(S^2) = 2, h = (1, 3, -1, 0).
  const Complex c = Complex::from_facets({{1, 2, 3}, {1, 2, 4}, {4, 5, 6}});
  CHECK(f_vector(c).values == std::vector<std::int64_t>{1, 6, 8, 3});
  const auto h = h_from_f(f_vector(c), 3);
  CHECK(h.values == std::vector<std::int64_t>{1, 3, -1, 0});
  const auto r = klee_residual(c);
  CHECK(r == std::vector<std::int64_t>{0, -7, 7, 0});
}

TEST_CASE("Klee residual vanishes on closed manifolds") {
  for (int n = 3; n <= 7; ++n) CHECK(all_zero(klee_residual(build_miss(n))));
  CHECK(all_zero(klee_residual(build_delta(4, 9).complex)));
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(build_miss(3)) == 0);
  CHECK(euler_characteristic(boundary_of_simplex(3)) == 2);
  CHECK(euler_characteristic(boundary_of_simplex(4)) == 0);
}

TEST_CASE("h_from_f rejects a length mismatch") {
  FVector f{{1, 4, 6, 4}};
  CHECK_THROWS_AS(h_from_f(f, 4), Error);
}
