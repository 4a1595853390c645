#include "doctest.h"

#include "sbundle/error.hpp"
#include "sbundle/face_numbers.hpp"
#include "sbundle/handle.hpp"
#include "sbundle/stacked.hpp"
#include "sbundle/verify.hpp"

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

// Delta_{2n} plus one extra subdivision of the untouched facet {1..n}: two
// stacks, glued top to top.
struct TwoStacks {
  Complex sphere;
  SubdivisionTrace trace;
  Pairing pairing;
};

TwoStacks two_stack_fixture(int n) {
  auto s = build_delta(n, 2 * n);
  Face low;
  for (int v = 1; v <= n; ++v) low.push_back(v);
  const Vertex extra = 3 * n + 1;
  TwoStacks out{subdivide_facet(s.complex, low, extra), s.trace, {}};
  out.trace.steps.push_back({low, extra});
  for (int i = 1; i < n; ++i) out.pairing.pairs.emplace_back(i, 2 * n + 1 + i);
  out.pairing.pairs.emplace_back(extra, 2 * n + 1);
  return out;
}

}  // namespace

TEST_CASE("kuhnel facet count") {
  for (int n = 3; n <= 8; ++n) {
    const Complex k = kuhnel_Mn(n);
    CHECK(k.facet_count() == static_cast<std::size_t>((n - 1) * (2 * n + 1)));
    CHECK(k.vertex_count() == static_cast<std::size_t>(2 * n + 1));
    CHECK(is_pseudomanifold(k).ok);
  }
}

TEST_CASE("MISS is 2-neighborly with 2n+1 vertices") {
  for (int n = 3; n <= 7; ++n) {
    const FVector f = f_vector(build_miss(n));
    CHECK(f.at(0) == 2 * n + 1);
    CHECK(f.at(1) == binomial(2 * n + 1, 2));
  }
}

TEST_CASE("handle addition face-count deltas") {
  for (int n = 3; n <= 6; ++n) {
    for (int f0 = 2 * n + 1; f0 <= 2 * n + 4; ++f0) {
      const Complex sphere = build_delta(n, f0).complex;
      const Complex c = handle_addition(sphere, iss_pairing(n, f0, PairingVariant::Standard));
      const FVector a = f_vector(sphere);
      const FVector b = f_vector(c);
      CHECK(b.at(0) == a.at(0) - n);
      CHECK(b.at(n - 1) == a.at(n - 1) - 2);
      CHECK(b.at(1) == a.at(1) - binomial(n, 2));
    }
  }
}

TEST_CASE("handle addition rejects close pairs and bad pairings") {
  // Delta_7 is too short for its end facets to be three apart.
  CHECK(code_of([] { handle_addition(build_delta(4, 7).complex, iss_pairing(4, 7, PairingVariant::Standard)); }) ==
        ErrorCode::DistanceViolation);
  const Complex sphere = build_delta(4, 5).complex;
  Pairing overlap{{{1, 1}, {2, 6}, {3, 7}, {4, 8}}};
  CHECK(code_of([&] { handle_addition(sphere, overlap); }) == ErrorCode::InvalidPairing);
  Pairing short_pairing{{{1, 6}}};
  CHECK(code_of([&] { handle_addition(sphere, short_pairing); }) == ErrorCode::InvalidPairing);
  Pairing not_facet{{{1, 20}, {2, 6}, {3, 7}, {4, 8}}};
  CHECK(code_of([&] { handle_addition(sphere, not_facet); }) == ErrorCode::NotAFacet);
}

TEST_CASE("minimum vertex counts") {
  CHECK(minimum_vertices(3, BundleType::Orientable) == 7);
  CHECK(minimum_vertices(3, BundleType::Nonorientable) == 8);
  CHECK(minimum_vertices(4, BundleType::Nonorientable) == 9);
  CHECK(minimum_vertices(4, BundleType::Orientable) == 10);
  CHECK(minimum_vertices(5, BundleType::Orientable) == 11);
  CHECK(minimum_vertices(5, BundleType::Nonorientable) == 12);
  CHECK(code_of([] { build_iss(5, 11, BundleType::Nonorientable); }) == ErrorCode::InfeasibleVertexCount);
}

TEST_CASE("ISS has n f0 edges and requested orientability") {
  for (int n = 3; n <= 6; ++n) {
    for (auto bt : {BundleType::Orientable, BundleType::Nonorientable}) {
      for (int f0 = minimum_vertices(n, bt); f0 <= 2 * n + 5; ++f0) {
        const auto iss = build_iss(n, f0, bt);
        CHECK(f_vector(iss.complex).at(1) == static_cast<std::int64_t>(n) * f0);
        CHECK(orientability(iss.complex) == bt);
        CHECK(iss.complex.vertex_count() == static_cast<std::size_t>(f0));
      }
    }
  }
}

TEST_CASE("two-stack reduction reaches a one-stack sphere with the same quotient") {
  for (int n = 3; n <= 6; ++n) {
    const TwoStacks t = two_stack_fixture(n);
    REQUIRE(stack_decomposition(t.trace).stacks.size() == 2);
    const Complex before = handle_addition(t.sphere, t.pairing);
    const StackReduction r = two_stack_reduction(t.sphere, t.trace, t.pairing);
    CHECK(stack_decomposition(r.trace).stacks.size() == 1);
    CHECK(replay(r.trace) == r.sphere);
    for (const auto& [u, w] : r.pairing.pairs) CHECK(graph_distance(r.sphere, u, w) >= 3);
    const Complex after = handle_addition(r.sphere, r.pairing);
    CHECK(are_isomorphic(before, after).has_value());
    CHECK(are_isomorphic(after, kuhnel_Mn(n)).has_value());
  }
}

TEST_CASE("two-stack reduction preconditions") {
  const auto s = build_delta(4, 9);
  const Pairing p = iss_pairing(4, 9, PairingVariant::Standard);
  CHECK(code_of([&] { two_stack_reduction(s.complex, s.trace, p); }) == ErrorCode::NotTwoStacks);
  const TwoStacks t = two_stack_fixture(4);
  Pairing wrong{{{1, 10}, {2, 11}, {3, 12}, {4, 13}}};
  CHECK(code_of([&] { two_stack_reduction(t.sphere, t.trace, wrong); }) != ErrorCode::Ok);
}

TEST_CASE("orientation double cover") {
  const Complex m4 = build_miss(4);
  const Complex cover = orientation_double_cover(m4);
  const FVector a = f_vector(m4);
  const FVector b = f_vector(cover);
  for (int d = 0; d < 4; ++d) CHECK(b.at(d) == 2 * a.at(d));
  CHECK(is_orientable(cover));
  CHECK(is_pseudomanifold(cover).ok);
  CHECK(code_of([] { orientation_double_cover(build_miss(5)); }) == ErrorCode::AlreadyOrientable);
}
