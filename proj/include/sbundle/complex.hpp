#ifndef SBUNDLE_COMPLEX_HPP
#define SBUNDLE_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sbundle/error.hpp"

namespace sbundle {

using Vertex = std::int32_t;

// A face is a strictly increasing list of vertex labels.
using Face = std::vector<Vertex>;

/**
 * Pure simplicial complex stored by its facets.
 *
 * Every facet has exactly n() vertices; the facet list is sorted
 * lexicographically and duplicate free. Labels are arbitrary positive
 * integers and need not be contiguous. Values are immutable once built.
 *
 * The complex {∅} (the link of a facet) is represented with n() == 0 and a
 * single empty facet.
 */
class Complex {
 public:
  Complex() = default;

  // Canonicalizes the input: sorts each facet and the facet list, and merges
  // coincident facets. Throws EmptyInput, MixedCardinality, NonPositiveLabel
  // or RepeatedVertex.
  static Complex from_facets(std::vector<Face> facets);

  // The complex whose only face is the empty set.
  static Complex empty_face();

  int n() const noexcept { return n_; }
  int dimension() const noexcept { return n_ - 1; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  bool has_vertex(Vertex v) const;
  bool has_facet(std::span<const Vertex> sorted_face) const;
  bool has_face(std::span<const Vertex> sorted_face) const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  std::vector<Face> facets_;
  std::vector<Vertex> vertices_;
};

Face make_face(std::vector<Vertex> vertices);

// All nonempty faces, grouped by cardinality: result[k] holds the sorted
// k-element faces (result[0] holds the empty face).
std::vector<std::vector<Face>> faces_by_size(const Complex& c);

// Applies a vertex map to every facet. Vertices absent from the map keep
// their label. The map must be injective on each facet.
Complex relabel(const Complex& c, const std::map<Vertex, Vertex>& mapping);

// Relabels vertices to 1..m in increasing order of their current labels.
Complex canonical_labels(const Complex& c);

Complex link(const Complex& c, std::span<const Vertex> face);

// Faces of c (other than ∅) all of whose vertices lie in `subset`, ordered
// by cardinality then lexicographically.
std::vector<Face> induced_subcomplex(const Complex& c, std::span<const Vertex> subset);

// 1-skeleton adjacency, keyed by vertex label.
std::map<Vertex, std::vector<Vertex>> adjacency(const Complex& c);

bool has_edge(const Complex& c, Vertex u, Vertex v);

int graph_distance(const Complex& c, Vertex u, Vertex v);

// Distances from `source` to every vertex reachable from it.
std::map<Vertex, int> distances_from(const Complex& c, Vertex source);

struct PseudomanifoldReport {
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

PseudomanifoldReport is_pseudomanifold(const Complex& c);

// Facet indices paired across each ridge, for complexes in which every ridge
// lies in exactly two facets.
struct RidgeAdjacency {
  Face ridge;
  std::size_t first;
  std::size_t second;
};
std::vector<RidgeAdjacency> ridge_adjacencies(const Complex& c);

std::string to_string(std::span<const Vertex> face);

}  // namespace sbundle

#endif  // SBUNDLE_COMPLEX_HPP
