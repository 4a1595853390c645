#include "sbundle/stacked.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace sbundle {

Complex boundary_of_simplex(std::span<const Vertex> labels) {
  if (labels.size() < 2) throw Error(ErrorCode::InvalidArgument, "simplex needs at least two vertices");
  std::vector<Face> facets;
  for (std::size_t skip = 0; skip < labels.size(); ++skip) {
    Face f;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (j != skip) f.push_back(labels[j]);
    }
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(facets));
}

Complex boundary_of_simplex(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  Face labels(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n + 1; ++v) labels[static_cast<std::size_t>(v - 1)] = v;
  return boundary_of_simplex(labels);
}

Complex subdivide_facet(const Complex& c, std::span<const Vertex> facet, Vertex v) {
  const Face target = make_face(Face(facet.begin(), facet.end()));
  if (!c.has_facet(target)) throw Error(ErrorCode::NotAFacet, to_string(target) + " is not a facet");
  if (v <= 0) throw Error(ErrorCode::NonPositiveLabel, "label " + std::to_string(v));
  if (c.has_vertex(v)) throw Error(ErrorCode::VertexInUse, "vertex " + std::to_string(v) + " already used");
  std::vector<Face> facets;
  facets.reserve(c.facet_count() + target.size());
  for (const auto& f : c.facets()) {
    if (f != target) facets.push_back(f);
  }
  for (std::size_t skip = 0; skip < target.size(); ++skip) {
    Face g{v};
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (j != skip) g.push_back(target[j]);
    }
    facets.push_back(std::move(g));
  }
  return Complex::from_facets(std::move(facets));
}

Complex replay(const SubdivisionTrace& trace) {
  Complex c = boundary_of_simplex(trace.base);
  for (const auto& step : trace.steps) c = subdivide_facet(c, step.facet, step.new_vertex);
  return c;
}

StackedSphere build_delta(int n, int i) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "i must be at least 1");
  StackedSphere out{boundary_of_simplex(n), {}};
  for (int v = 1; v <= n + 1; ++v) out.trace.base.push_back(v);
  for (int s = 1; s < i; ++s) {
    Face facet;
    for (int v = s + 1; v <= n + s; ++v) facet.push_back(v);
    const Vertex fresh = n + s + 1;
    out.complex = subdivide_facet(out.complex, facet, fresh);
    out.trace.steps.push_back({std::move(facet), fresh});
  }
  return out;
}

DistanceTable distance_table(int n, int i) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "i must be at least 1");
  const auto rows = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> cols;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(rows, 1);
    col[static_cast<std::size_t>(k - 1)] = 0;
    cols.push_back(std::move(col));
  }
  cols.emplace_back(rows, 1);
  // x_{n+s} = min(x_s, ..., x_{s+n-1}) + 1, entrywise
  for (int s = 2; s <= i; ++s) {
    std::vector<int> col(rows);
    for (std::size_t row = 0; row < rows; ++row) {
      int best = cols[static_cast<std::size_t>(s - 1)][row];
      for (int k = s + 1; k <= s + n - 1; ++k) best = std::min(best, cols[static_cast<std::size_t>(k - 1)][row]);
      col[row] = best + 1;
    }
    cols.push_back(std::move(col));
  }
  return DistanceTable(n, std::move(cols));
}

namespace {

struct Reversal {
  Vertex vertex;
  Face neighbours;
};

// Vertices whose star is a cone over the boundary of an (n-1)-simplex and
// whose removal leaves a simplicial complex.
std::vector<Reversal> reversible_vertices(const Complex& c) {
  const int n = c.n();
  std::map<Vertex, std::vector<std::size_t>> star;
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    for (Vertex v : c.facets()[i]) star[v].push_back(i);
  }
  std::vector<Reversal> out;
  for (const auto& [v, owners] : star) {
    if (static_cast<int>(owners.size()) != n) continue;
    std::set<Vertex> nbrs;
    for (std::size_t idx : owners) {
      for (Vertex w : c.facets()[idx]) {
        if (w != v) nbrs.insert(w);
      }
    }
    if (static_cast<int>(nbrs.size()) != n) continue;
    Face nb(nbrs.begin(), nbrs.end());
    if (c.has_facet(nb)) continue;
    out.push_back({v, std::move(nb)});
  }
  return out;
}

Complex reverse(const Complex& c, const Reversal& r) {
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    if (!std::binary_search(f.begin(), f.end(), r.vertex)) facets.push_back(f);
  }
  facets.push_back(r.neighbours);
  return Complex::from_facets(std::move(facets));
}

bool is_simplex_boundary(const Complex& c) {
  return c.vertex_count() == static_cast<std::size_t>(c.n()) + 1 && c.facet_count() == c.vertex_count();
}

bool reduce(const Complex& c, std::vector<SubdivisionStep>& undone, std::set<std::vector<Face>>& dead) {
  if (is_simplex_boundary(c)) return true;
  if (dead.contains(c.facets())) return false;
  for (const auto& r : reversible_vertices(c)) {
    undone.push_back({r.neighbours, r.vertex});
    if (reduce(reverse(c, r), undone, dead)) return true;
    undone.pop_back();
  }
  dead.insert(c.facets());
  return false;
}

}  // namespace

std::optional<SubdivisionTrace> recognize_stacked(const Complex& c) {
  if (c.n() < 2 || !is_pseudomanifold(c).ok) return std::nullopt;
  std::vector<SubdivisionStep> undone;
  std::set<std::vector<Face>> dead;
  if (!reduce(c, undone, dead)) return std::nullopt;

  SubdivisionTrace trace;
  std::set<Vertex> removed;
  for (const auto& s : undone) removed.insert(s.new_vertex);
  for (Vertex v : c.vertices()) {
    if (!removed.contains(v)) trace.base.push_back(v);
  }
  trace.steps.assign(undone.rbegin(), undone.rend());
  return trace;
}

StackDecomposition stack_decomposition(const SubdivisionTrace& trace) {
  // Order in which each non-base vertex was introduced.
  std::map<Vertex, std::size_t> introduced_by;
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    introduced_by[trace.steps[s].new_vertex] = s;
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(trace.steps.size(), kNone);
  std::vector<bool> has_child(trace.steps.size(), false);
  Complex c = boundary_of_simplex(trace.base);
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& step = trace.steps[s];
    if (!c.has_facet(step.facet)) {
      throw Error(ErrorCode::InvalidArgument,
                  "trace step " + std::to_string(s) + " subdivides non-facet " + to_string(step.facet));
    }
    // A facet was created by the step that introduced its newest vertex.
    std::size_t creator = kNone;
    for (Vertex v : step.facet) {
      auto it = introduced_by.find(v);
      if (it != introduced_by.end() && it->second < s && (creator == kNone || it->second > creator)) {
        creator = it->second;
      }
    }
    parent[s] = creator;
    if (creator != kNone) has_child[creator] = true;
    c = subdivide_facet(c, step.facet, step.new_vertex);
  }

  StackDecomposition out;
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    if (has_child[s]) continue;
    Stack stack;
    for (std::size_t k = s; k != kNone; k = parent[k]) stack.steps.push_back(k);
    std::reverse(stack.steps.begin(), stack.steps.end());
    const auto& leaf = trace.steps[s];
    stack.top_vertex = leaf.new_vertex;
    for (std::size_t skip = 0; skip < leaf.facet.size(); ++skip) {
      Face f{leaf.new_vertex};
      for (std::size_t j = 0; j < leaf.facet.size(); ++j) {
        if (j != skip) f.push_back(leaf.facet[j]);
      }
      stack.top.push_back(make_face(std::move(f)));
    }
    std::sort(stack.top.begin(), stack.top.end());
    out.stacks.push_back(std::move(stack));
  }
  return out;
}

StackedSphere random_stacked_sphere(int n, int steps, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "steps must be nonnegative");
  std::mt19937_64 rng(seed);
  StackedSphere out{boundary_of_simplex(n), {}};
  for (int v = 1; v <= n + 1; ++v) out.trace.base.push_back(v);
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, out.complex.facet_count() - 1);
    Face facet = out.complex.facets()[pick(rng)];
    const Vertex fresh = n + 2 + s;
    out.complex = subdivide_facet(out.complex, facet, fresh);
    out.trace.steps.push_back({std::move(facet), fresh});
  }
  return out;
}

}  // namespace sbundle
