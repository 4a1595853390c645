#include <algorithm>
#include <deque>

#include "sbundle/verify.hpp"

namespace sbundle {

namespace {

std::size_t omitted_position(const Face& f, const Face& ridge) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::binary_search(ridge.begin(), ridge.end(), f[i])) return i;
  }
  return f.size();
}

}  // namespace

std::optional<std::vector<int>> coherent_orientation(const Complex& c) {
  const auto adjacencies = ridge_adjacencies(c);
  const auto& facets = c.facets();
  // neighbour facet, and the sign relating the two orientations
  std::vector<std::vector<std::pair<std::size_t, int>>> graph(facets.size());
  for (const auto& adj : adjacencies) {
    const std::size_t pf = omitted_position(facets[adj.first], adj.ridge);
    const std::size_t pg = omitted_position(facets[adj.second], adj.ridge);
    // Orientations agree on the ridge iff eps_G = -eps_F (-1)^(pF+pG).
    const int rel = (pf + pg) % 2 == 0 ? -1 : 1;
    graph[adj.first].emplace_back(adj.second, rel);
    graph[adj.second].emplace_back(adj.first, rel);
  }
  std::vector<int> eps(facets.size(), 0);
  for (std::size_t start = 0; start < facets.size(); ++start) {
    if (eps[start] != 0) continue;
    eps[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      for (const auto& [g, rel] : graph[f]) {
        const int want = eps[f] * rel;
        if (eps[g] == 0) {
          eps[g] = want;
          queue.push_back(g);
        } else if (eps[g] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return eps;
}

BundleType orientability(const Complex& c) {
  if (auto pm = is_pseudomanifold(c); !pm.ok) throw Error(ErrorCode::NotPseudomanifold, pm.detail);
  return coherent_orientation(c) ? BundleType::Orientable : BundleType::Nonorientable;
}

ManifoldEvidence manifold_evidence(const Complex& c) {
  ManifoldEvidence ev;
  auto add = [&](std::string name, bool ok, std::string detail) {
    ev.passed = ev.passed && ok;
    ev.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto pm = is_pseudomanifold(c);
  add("pseudomanifold", pm.ok, pm.detail);

  const int n = c.n();
  if (n < 2) {
    add("vertex links", false, "complex has dimension below 1");
    return ev;
  }
  // Rational homology of S^{n-2}.
  std::vector<std::int64_t> sphere(static_cast<std::size_t>(n - 1), 0);
  sphere.front() += 1;
  sphere.back() += 1;

  std::string homology_failure;
  std::string orientation_failure;
  for (Vertex v : c.vertices()) {
    const Vertex face[] = {v};
    const Complex lk = link(c, face);
    const auto lpm = is_pseudomanifold(lk);
    if (!lpm.ok) {
      if (homology_failure.empty()) homology_failure = "link of " + std::to_string(v) + ": " + lpm.detail;
      if (orientation_failure.empty()) orientation_failure = "link of " + std::to_string(v) + " is not a pseudomanifold";
      continue;
    }
    if (homology_failure.empty() && betti_numbers(lk) != sphere) {
      homology_failure = "link of " + std::to_string(v) + " does not have the homology of S^" + std::to_string(n - 2);
    }
    if (orientation_failure.empty() && !coherent_orientation(lk)) {
      orientation_failure = "link of " + std::to_string(v) + " is not orientable";
    }
  }
  add("vertex links are rational homology spheres", homology_failure.empty(), homology_failure);
  add("vertex links are orientable", orientation_failure.empty(), orientation_failure);
  return ev;
}

}  // namespace sbundle
