#ifndef SBUNDLE_STACKED_HPP
#define SBUNDLE_STACKED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sbundle/complex.hpp"

namespace sbundle {

struct SubdivisionStep {
  Face facet;
  Vertex new_vertex;
  friend bool operator==(const SubdivisionStep&, const SubdivisionStep&) = default;
};

/**
 * Witness that a complex is a stacked sphere: start from the boundary of the
 * simplex on `base` (n+1 labels) and subdivide each listed facet in order.
 */
struct SubdivisionTrace {
  Face base;
  std::vector<SubdivisionStep> steps;
  friend bool operator==(const SubdivisionTrace&, const SubdivisionTrace&) = default;
};

// Rows 1..n of the distance table: column(k)[j-1] = d(k, j) for vertex k.
class DistanceTable {
 public:
  DistanceTable(int n, std::vector<std::vector<int>> columns) : n_(n), columns_(std::move(columns)) {}

  int n() const noexcept { return n_; }
  int column_count() const noexcept { return static_cast<int>(columns_.size()); }
  // Column for vertex `vertex` (1-based).
  const std::vector<int>& column(int vertex) const { return columns_.at(static_cast<std::size_t>(vertex - 1)); }
  // d(vertex, row) for 1 <= row <= n.
  int at(int row, int vertex) const { return column(vertex).at(static_cast<std::size_t>(row - 1)); }

 private:
  int n_;
  std::vector<std::vector<int>> columns_;
};

struct Stack {
  std::vector<std::size_t> steps;  // indices into the trace, root first
  std::vector<Face> top;           // facets created by the last step
  Vertex top_vertex;
};

struct StackDecomposition {
  std::vector<Stack> stacks;
};

Complex boundary_of_simplex(int n);
Complex boundary_of_simplex(std::span<const Vertex> labels);

// Replaces facet F by the n facets (F \ {u}) ∪ {v}.
Complex subdivide_facet(const Complex& c, std::span<const Vertex> facet, Vertex v);

// Replays a trace from the boundary of its base simplex.
Complex replay(const SubdivisionTrace& trace);

struct StackedSphere {
  Complex complex;
  SubdivisionTrace trace;
};

// Δ_i: start from ∂Δ^n on {1..n+1}; step s subdivides {s+1..n+s} with n+s+1.
StackedSphere build_delta(int n, int i);

// Distances to vertices 1..n of build_delta(n, i), via the min-plus recursion.
DistanceTable distance_table(int n, int i);

// Reverses degree-n vertices until ∂Δ^n remains; backtracks on dead ends.
std::optional<SubdivisionTrace> recognize_stacked(const Complex& c);

// Stacks are the maximal chains of the subdivision forest: a step's parent is
// the step that created the facet it subdivides.
StackDecomposition stack_decomposition(const SubdivisionTrace& trace);

// Stacked sphere with n+1+steps vertices from a seeded random schedule.
StackedSphere random_stacked_sphere(int n, int steps, std::uint64_t seed);

}  // namespace sbundle

#endif  // SBUNDLE_STACKED_HPP
