#ifndef SBUNDLE_BISTELLAR_HPP
#define SBUNDLE_BISTELLAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbundle/complex.hpp"
#include "sbundle/handle.hpp"

namespace sbundle {

// Bistellar move replacing (∂A) * B by A * (∂B), with |A| = 2, |B| = n-1.
struct MoveSpec {
  Face a;
  Face b;

  // Sorts both sets and checks |A| = 2, |B| = n-1 and A ∩ B = ∅.
  static MoveSpec make(Face a, Face b, int n);
  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

struct ScheduledMove {
  MoveSpec move;
  int group;  // j - i of the non-edge {i, j} being filled; 0 for the exceptional move
};

struct FillSchedule {
  int n = 0;
  int f0 = 0;
  PairingVariant variant = PairingVariant::Standard;
  std::vector<ScheduledMove> moves;
};

// True iff {a} ∪ B is a facet for both a ∈ A and A is not an edge, i.e. the
// faces on A ∪ B are exactly those not containing both vertices of A.
bool is_flippable(const Complex& c, const MoveSpec& mv);

Complex apply_move(const Complex& c, const MoveSpec& mv);

// Edge-filling schedule for the ISS build_iss(n, f0, ·) built with `variant`.
// The schedule is replayed while it is generated; a move that is not
// flippable when reached raises ScheduleInvalid.
FillSchedule build_fill_schedule(const Complex& c, int n, int f0, PairingVariant variant);

// Replays the first target_f1 - f_1(c) moves.
Complex fill_to(const Complex& c, const FillSchedule& schedule, std::int64_t target_f1);

// Closed interval [(k+2) f0, C(f0, 2)] of realizable edge counts for an
// S^k-bundle over S^1 on f0 vertices, or nothing when f0 is below the
// minimum vertex count for the bundle type.
std::optional<std::pair<std::int64_t, std::int64_t>> feasible_region(int k, int f0, BundleType bt);

}  // namespace sbundle

#endif  // SBUNDLE_BISTELLAR_HPP
