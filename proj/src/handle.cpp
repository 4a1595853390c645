#include "sbundle/handle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "sbundle/face_numbers.hpp"
#include "sbundle/verify.hpp"

namespace sbundle {

const char* to_string(BundleType bt) noexcept {
  return bt == BundleType::Orientable ? "orientable" : "nonorientable";
}

const char* to_string(PairingVariant v) noexcept {
  return v == PairingVariant::Standard ? "standard" : "swapped";
}

Face Pairing::first_facet() const {
  Face f;
  for (const auto& [u, w] : pairs) f.push_back(u);
  std::sort(f.begin(), f.end());
  return f;
}

Face Pairing::second_facet() const {
  Face f;
  for (const auto& [u, w] : pairs) f.push_back(w);
  std::sort(f.begin(), f.end());
  return f;
}

namespace {

void validate_pairing(const Complex& sphere, const Pairing& p) {
  if (static_cast<int>(p.pairs.size()) != sphere.n()) {
    throw Error(ErrorCode::InvalidPairing, "pairing has " + std::to_string(p.pairs.size()) +
                                               " pairs, expected " + std::to_string(sphere.n()));
  }
  const Face u = p.first_facet();
  const Face w = p.second_facet();
  if (std::adjacent_find(u.begin(), u.end()) != u.end() || std::adjacent_find(w.begin(), w.end()) != w.end()) {
    throw Error(ErrorCode::InvalidPairing, "pairing is not a bijection");
  }
  Face common;
  std::set_intersection(u.begin(), u.end(), w.begin(), w.end(), std::back_inserter(common));
  if (!common.empty()) throw Error(ErrorCode::InvalidPairing, "identified facets share " + to_string(common));
  if (!sphere.has_facet(u)) throw Error(ErrorCode::NotAFacet, to_string(u) + " is not a facet");
  if (!sphere.has_facet(w)) throw Error(ErrorCode::NotAFacet, to_string(w) + " is not a facet");
}

int distance_or_infinity(const std::map<Vertex, int>& dist, Vertex v) {
  auto it = dist.find(v);
  return it == dist.end() ? std::numeric_limits<int>::max() : it->second;
}

}  // namespace

std::vector<CrossPairWarning> cross_pair_warnings(const Complex& sphere, const Pairing& p) {
  validate_pairing(sphere, p);
  std::vector<CrossPairWarning> out;
  for (const auto& [u, partner] : p.pairs) {
    const auto dist = distances_from(sphere, u);
    for (const auto& [other_u, w] : p.pairs) {
      if (w == partner) continue;
      const int d = distance_or_infinity(dist, w);
      if (d < 3) out.push_back({u, w, d});
    }
  }
  return out;
}

Complex handle_addition(const Complex& sphere, const Pairing& p) {
  validate_pairing(sphere, p);
  const int n = sphere.n();
  for (const auto& [u, w] : p.pairs) {
    const int d = distance_or_infinity(distances_from(sphere, u), w);
    if (d < 3) {
      throw Error(ErrorCode::DistanceViolation, "pair (" + std::to_string(u) + "," + std::to_string(w) +
                                                    ") at distance " + std::to_string(d));
    }
  }

  std::map<Vertex, Vertex> glue;
  for (const auto& [u, w] : p.pairs) glue[w] = u;
  auto image = [&](const Face& f) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) {
      auto it = glue.find(v);
      g.push_back(it == glue.end() ? v : it->second);
    }
    std::sort(g.begin(), g.end());
    return g;
  };

  const Face first = p.first_facet();
  const Face second = p.second_facet();
  auto inside = [](const Face& sub, const Face& f) { return std::includes(f.begin(), f.end(), sub.begin(), sub.end()); };

  // The quotient must be injective on faces, apart from the intended gluing
  // of faces of `second` onto faces of `first`.
  std::map<Face, std::vector<Face>> preimages;
  for (const auto& bucket : faces_by_size(sphere)) {
    for (const auto& f : bucket) {
      if (f.empty()) continue;
      Face g = image(f);
      if (std::adjacent_find(g.begin(), g.end()) != g.end()) {
        throw Error(ErrorCode::NonSimplicialQuotient, "face " + to_string(f) + " collapses");
      }
      preimages[std::move(g)].push_back(f);
    }
  }
  for (const auto& [g, pre] : preimages) {
    if (pre.size() == 1) continue;
    const bool glued = pre.size() == 2 && ((inside(pre[0], first) && inside(pre[1], second)) ||
                                           (inside(pre[1], first) && inside(pre[0], second)));
    if (!glued) {
      throw Error(ErrorCode::NonSimplicialQuotient,
                  "faces " + to_string(pre[0]) + " and " + to_string(pre[1]) + " both map to " + to_string(g));
    }
  }

  std::vector<Face> facets;
  for (const auto& f : sphere.facets()) {
    if (f == first || f == second) continue;
    facets.push_back(image(f));
  }
  Complex out = Complex::from_facets(std::move(facets));

  if (auto pm = is_pseudomanifold(out); !pm.ok) {
    throw Error(ErrorCode::NotPseudomanifold, "quotient: " + pm.detail);
  }
  const FVector before = f_vector(sphere);
  const FVector after = f_vector(out);
  if (after.at(0) != before.at(0) - n || static_cast<std::int64_t>(out.facet_count()) != before.at(n - 1) - 2 ||
      after.at(1) != before.at(1) - binomial(n, 2)) {
    throw Error(ErrorCode::InvariantViolation, "handle addition changed face counts unexpectedly");
  }
  return out;
}

Complex kuhnel_Mn(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
  const int m = 2 * n + 1;
  auto label = [m](int x) { return static_cast<Vertex>(((x % m) + m) % m + 1); };

  std::set<Face> intervals;
  for (int s = 0; s < m; ++s) {
    Face f;
    for (int k = 0; k < n; ++k) f.push_back(label(s + k));
    std::sort(f.begin(), f.end());
    intervals.insert(std::move(f));
  }

  std::vector<Face> facets;
  for (int t = 0; t < m; ++t) {
    for (int skip = 0; skip <= n; ++skip) {
      Face f;
      for (int k = 0; k <= n; ++k) {
        if (k != skip) f.push_back(label(t + k));
      }
      std::sort(f.begin(), f.end());
      if (!intervals.contains(f)) facets.push_back(std::move(f));
    }
  }
  return Complex::from_facets(std::move(facets));
}

Pairing iss_pairing(int n, int f0, PairingVariant variant) {
  Pairing p;
  for (int i = 1; i <= n; ++i) p.pairs.emplace_back(i, f0 + i);
  if (variant == PairingVariant::Swapped) {
    p.pairs[static_cast<std::size_t>(n - 2)].second = f0 + n;
    p.pairs[static_cast<std::size_t>(n - 1)].second = f0 + n - 1;
  }
  return p;
}

Complex build_miss(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
  const int f0 = 2 * n + 1;
  return handle_addition(build_delta(n, f0).complex, iss_pairing(n, f0, PairingVariant::Standard));
}

int minimum_vertices(int n, BundleType bt) {
  const int k = n - 2;
  const bool tight = (k % 2 == 1 && bt == BundleType::Orientable) || (k % 2 == 0 && bt == BundleType::Nonorientable);
  return tight ? 2 * k + 5 : 2 * k + 6;
}

IssConstruction build_iss(int n, int f0, BundleType bt) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
  if (f0 < minimum_vertices(n, bt)) {
    throw Error(ErrorCode::InfeasibleVertexCount, "the " + std::string(to_string(bt)) + " S^" +
                                                      std::to_string(n - 2) + "-bundle needs at least " +
                                                      std::to_string(minimum_vertices(n, bt)) + " vertices");
  }
  const Complex sphere = build_delta(n, f0).complex;
  std::vector<PairingVariant> variants{PairingVariant::Standard};
  if (f0 >= 2 * n + 2) variants.push_back(PairingVariant::Swapped);
  for (PairingVariant v : variants) {
    Pairing p = iss_pairing(n, f0, v);
    Complex c = handle_addition(sphere, p);
    if (orientability(c) != bt) continue;
    if (f_vector(c).at(1) != static_cast<std::int64_t>(n) * f0) {
      throw Error(ErrorCode::InvariantViolation, "ISS does not have n*f0 edges");
    }
    auto warnings = cross_pair_warnings(sphere, p);
    return {std::move(c), v, std::move(p), std::move(warnings)};
  }
  throw Error(ErrorCode::InfeasibleVertexCount,
              "no scheduled pairing on " + std::to_string(f0) + " vertices yields the " + to_string(bt) + " bundle");
}

namespace {

struct StackSides {
  std::size_t first_stack;   // stack whose top holds the pairing's first facet
  std::size_t second_stack;  // stack whose top holds the second facet
};

StackSides locate_pairing(const StackDecomposition& dec, const Pairing& p) {
  const Face first = p.first_facet();
  const Face second = p.second_facet();
  auto find_top = [&](const Face& f) {
    for (std::size_t s = 0; s < dec.stacks.size(); ++s) {
      const auto& top = dec.stacks[s].top;
      if (std::binary_search(top.begin(), top.end(), f)) return s;
    }
    throw Error(ErrorCode::PairingNotOnTops, to_string(f) + " is not on the top of a stack");
  };
  StackSides sides{find_top(first), find_top(second)};
  if (sides.first_stack == sides.second_stack) {
    throw Error(ErrorCode::PairingNotOnTops, "both identified facets lie on the same stack");
  }
  return sides;
}

void check_pair_distances(const Complex& sphere, const Pairing& p) {
  for (const auto& [u, w] : p.pairs) {
    const int d = distance_or_infinity(distances_from(sphere, u), w);
    if (d < 3) {
      throw Error(ErrorCode::InvariantViolation, "reduction left pair (" + std::to_string(u) + "," +
                                                     std::to_string(w) + ") at distance " + std::to_string(d));
    }
  }
}

}  // namespace

StackReduction two_stack_reduction(const Complex& sphere, const SubdivisionTrace& trace, const Pairing& p) {
  if (replay(trace) != sphere) throw Error(ErrorCode::InvalidArgument, "trace does not reproduce the sphere");
  validate_pairing(sphere, p);
  StackDecomposition dec = stack_decomposition(trace);
  if (dec.stacks.size() != 2) {
    throw Error(ErrorCode::NotTwoStacks, "trace has " + std::to_string(dec.stacks.size()) + " stacks");
  }

  StackReduction state{sphere, trace, p};
  while (dec.stacks.size() == 2) {
    const StackSides sides = locate_pairing(dec, state.pairing);
    // Shrink the shorter stack; on a tie, the one holding the first facet.
    const auto& s_first = dec.stacks[sides.first_stack];
    const auto& s_second = dec.stacks[sides.second_stack];
    const bool shrink_first = s_first.steps.size() <= s_second.steps.size();
    const Stack& shrinking = shrink_first ? s_first : s_second;
    const Face kept_side = shrink_first ? state.pairing.second_facet() : state.pairing.first_facet();
    const Face moved_side = shrink_first ? state.pairing.first_facet() : state.pairing.second_facet();

    const std::size_t leaf = shrinking.steps.back();
    const SubdivisionStep undone = state.trace.steps[leaf];
    const Vertex top = undone.new_vertex;

    // The vertex of the old top simplex that the moved facet misses.
    Face top_simplex = undone.facet;
    top_simplex.push_back(top);
    std::sort(top_simplex.begin(), top_simplex.end());
    Face missing;
    std::set_difference(top_simplex.begin(), top_simplex.end(), moved_side.begin(), moved_side.end(),
                        std::back_inserter(missing));
    if (missing.size() != 1) throw Error(ErrorCode::PairingNotOnTops, "identified facet is not in its stack's top");
    const Vertex restored = missing.front();

    // Undo the top subdivision, then subdivide the opposite identified facet,
    // reusing the freed label.
    std::vector<Face> facets;
    for (const auto& f : state.sphere.facets()) {
      if (!std::binary_search(f.begin(), f.end(), top)) facets.push_back(f);
    }
    facets.push_back(undone.facet);
    Complex shrunk = Complex::from_facets(std::move(facets));
    state.sphere = subdivide_facet(shrunk, kept_side, top);

    state.trace.steps.erase(state.trace.steps.begin() + static_cast<std::ptrdiff_t>(leaf));
    state.trace.steps.push_back({kept_side, top});

    for (auto& [u, w] : state.pairing.pairs) {
      if (shrink_first && u == top) {
        u = restored;
        w = top;
      } else if (!shrink_first && w == top) {
        w = restored;
        u = top;
      }
    }
    check_pair_distances(state.sphere, state.pairing);
    dec = stack_decomposition(state.trace);
  }
  return state;
}

Complex orientation_double_cover(const Complex& c) {
  if (auto pm = is_pseudomanifold(c); !pm.ok) throw Error(ErrorCode::NotPseudomanifold, pm.detail);
  if (orientability(c) == BundleType::Orientable) {
    throw Error(ErrorCode::AlreadyOrientable, "complex is orientable");
  }
  const auto n = static_cast<std::size_t>(c.n());
  const auto& facets = c.facets();
  auto node = [n](std::size_t facet, int sheet, std::size_t pos) { return (facet * 2 + static_cast<std::size_t>(sheet)) * n + pos; };

  std::vector<std::size_t> parent(facets.size() * 2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  auto position = [](const Face& f, Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(f.begin(), f.end(), v) - f.begin());
  };
  auto omitted = [](const Face& f, const Face& ridge) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!std::binary_search(ridge.begin(), ridge.end(), f[i])) return i;
    }
    return f.size();
  };

  for (const auto& adj : ridge_adjacencies(c)) {
    const Face& f = facets[adj.first];
    const Face& g = facets[adj.second];
    // Sheets of F and G match when their induced orientations on the ridge
    // are opposite.
    const bool same_sheet = (omitted(f, adj.ridge) + omitted(g, adj.ridge)) % 2 == 1;
    for (int s = 0; s < 2; ++s) {
      const int t = same_sheet ? s : 1 - s;
      for (Vertex v : adj.ridge) parent[find(node(adj.first, s, position(f, v)))] = find(node(adj.second, t, position(g, v)));
    }
  }

  std::map<std::size_t, Vertex> labels;
  std::vector<Face> cover;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (int s = 0; s < 2; ++s) {
      Face lifted;
      for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t root = find(node(i, s, pos));
        auto [it, fresh] = labels.emplace(root, static_cast<Vertex>(labels.size() + 1));
        lifted.push_back(it->second);
      }
      std::sort(lifted.begin(), lifted.end());
      if (std::adjacent_find(lifted.begin(), lifted.end()) != lifted.end()) {
        throw Error(ErrorCode::NonSimplicialQuotient, "lift of " + to_string(facets[i]) + " is degenerate");
      }
      cover.push_back(std::move(lifted));
    }
  }
  Complex out = Complex::from_facets(std::move(cover));
  const FVector base = f_vector(c);
  const FVector up = f_vector(out);
  for (int d = 0; d < c.n(); ++d) {
    if (up.at(d) != 2 * base.at(d)) {
      throw Error(ErrorCode::NonSimplicialQuotient, "double cover is not a simplicial complex over the base");
    }
  }
  return out;
}

}  // namespace sbundle
