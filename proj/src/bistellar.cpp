#include "sbundle/bistellar.hpp"

#include <algorithm>
#include <set>

#include "sbundle/face_numbers.hpp"

namespace sbundle {

MoveSpec MoveSpec::make(Face a, Face b, int n) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.size() != 2 || a[0] == a[1]) throw Error(ErrorCode::InvalidMove, "A must be two distinct vertices");
  if (static_cast<int>(b.size()) != n - 1 || std::adjacent_find(b.begin(), b.end()) != b.end()) {
    throw Error(ErrorCode::InvalidMove, "B must be " + std::to_string(n - 1) + " distinct vertices");
  }
  Face common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw Error(ErrorCode::InvalidMove, "A and B intersect in " + to_string(common));
  return {std::move(a), std::move(b)};
}

namespace {

Face with(const Face& f, Vertex v) {
  Face g = f;
  g.insert(std::upper_bound(g.begin(), g.end(), v), v);
  return g;
}

std::string describe(const MoveSpec& mv) { return "A=" + to_string(mv.a) + " B=" + to_string(mv.b); }

}  // namespace

bool is_flippable(const Complex& c, const MoveSpec& mv) {
  if (mv.a.size() != 2 || static_cast<int>(mv.b.size()) != c.n() - 1) return false;
  return c.has_facet(with(mv.b, mv.a[0])) && c.has_facet(with(mv.b, mv.a[1])) && !has_edge(c, mv.a[0], mv.a[1]);
}

Complex apply_move(const Complex& c, const MoveSpec& mv) {
  if (!is_flippable(c, mv)) throw Error(ErrorCode::NotFlippable, describe(mv));
  const Face cone0 = with(mv.b, mv.a[0]);
  const Face cone1 = with(mv.b, mv.a[1]);
  std::vector<Face> facets;
  facets.reserve(c.facet_count() + mv.b.size());
  for (const auto& f : c.facets()) {
    if (f != cone0 && f != cone1) facets.push_back(f);
  }
  for (std::size_t skip = 0; skip < mv.b.size(); ++skip) {
    Face g = mv.a;
    for (std::size_t j = 0; j < mv.b.size(); ++j) {
      if (j != skip) g.push_back(mv.b[j]);
    }
    facets.push_back(std::move(g));
  }
  return Complex::from_facets(std::move(facets));
}

FillSchedule build_fill_schedule(const Complex& c, int n, int f0, PairingVariant variant) {
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "edge filling needs n >= 4");
  if (c.n() != n) throw Error(ErrorCode::ComplexMismatch, "complex has facets of size " + std::to_string(c.n()));
  const auto& verts = c.vertices();
  if (static_cast<int>(verts.size()) != f0 || verts.front() != 1 || verts.back() != f0) {
    throw Error(ErrorCode::ComplexMismatch, "complex must have vertices 1.." + std::to_string(f0));
  }

  std::set<std::pair<Vertex, Vertex>> missing;
  for (Vertex i = 1; i <= f0; ++i) {
    for (Vertex j = i + 1; j <= f0; ++j) {
      if (!has_edge(c, i, j)) missing.emplace(i, j);
    }
  }

  FillSchedule schedule{n, f0, variant, {}};
  Complex state = c;
  auto push = [&](MoveSpec mv, int group) {
    if (!is_flippable(state, mv)) {
      throw Error(ErrorCode::ScheduleInvalid,
                  "move " + std::to_string(schedule.moves.size()) + " (" + describe(mv) + ") is not flippable");
    }
    state = apply_move(state, mv);
    missing.erase({mv.a[0], mv.a[1]});
    schedule.moves.push_back({std::move(mv), group});
  };

  // Non-edge {i, j} with j - i = d gets A = {i, j}, B = {i+1, i+2} plus the
  // n-3 vertices preceding j. Groups run by increasing d, ascending i.
  for (int d = n + 1; d <= f0 - n - 1; ++d) {
    for (int i = 1; i + d <= f0; ++i) {
      const int j = i + d;
      if (!missing.contains({i, j})) continue;
      Face b{i + 1, i + 2};
      for (int v = j - (n - 3); v < j; ++v) b.push_back(v);
      push(MoveSpec::make({i, j}, std::move(b), n), d);
    }
  }

  // The swapped pairing leaves {n-1, f0-1} open; close it with
  // B = {f0, 1, 3, ..., n-2, n}.
  if (variant == PairingVariant::Swapped && missing.contains({n - 1, f0 - 1})) {
    Face b{f0, 1};
    for (int v = 3; v <= n - 2; ++v) b.push_back(v);
    b.push_back(n);
    push(MoveSpec::make({n - 1, f0 - 1}, std::move(b), n), 0);
  }

  if (!missing.empty()) {
    const auto& [i, j] = *missing.begin();
    throw Error(ErrorCode::ScheduleInvalid, "schedule leaves non-edge {" + std::to_string(i) + "," +
                                                std::to_string(j) + "} unfilled");
  }
  return schedule;
}

Complex fill_to(const Complex& c, const FillSchedule& schedule, std::int64_t target_f1) {
  const std::int64_t lo = checked_mul(schedule.n, schedule.f0);
  const std::int64_t hi = binomial(schedule.f0, 2);
  if (target_f1 < lo || target_f1 > hi) {
    throw Error(ErrorCode::TargetOutOfRange, "target f1 " + std::to_string(target_f1) + " outside [" +
                                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (c.n() != schedule.n || f_vector(c).at(1) != lo) {
    throw Error(ErrorCode::ComplexMismatch, "schedule starts from an ISS with " + std::to_string(lo) + " edges");
  }
  const auto steps = static_cast<std::size_t>(target_f1 - lo);
  if (steps > schedule.moves.size()) {
    throw Error(ErrorCode::TargetOutOfRange, "schedule has only " + std::to_string(schedule.moves.size()) + " moves");
  }
  Complex state = c;
  for (std::size_t k = 0; k < steps; ++k) {
    const auto& mv = schedule.moves[k].move;
    if (!is_flippable(state, mv)) {
      throw Error(ErrorCode::ScheduleInvalid, "move " + std::to_string(k) + " (" + describe(mv) + ") is not flippable");
    }
    state = apply_move(state, mv);
  }
  return state;
}

std::optional<std::pair<std::int64_t, std::int64_t>> feasible_region(int k, int f0, BundleType bt) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (f0 < minimum_vertices(k + 2, bt)) return std::nullopt;
  return std::make_pair(checked_mul(k + 2, f0), binomial(f0, 2));
}

}  // namespace sbundle
