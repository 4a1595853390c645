#include "sbundle/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace sbundle {

Face make_face(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorCode::RepeatedVertex, "face repeats a vertex");
  }
  return vertices;
}

std::string to_string(std::span<const Vertex> face) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out << ',';
    out << face[i];
  }
  out << '}';
  return out.str();
}

Complex Complex::from_facets(std::vector<Face> facets) {
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
  const std::size_t n = facets.front().size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "facets must be nonempty");
  for (auto& f : facets) {
    if (f.size() != n) {
      throw Error(ErrorCode::MixedCardinality, "facet " + to_string(f) + " has " +
                                                   std::to_string(f.size()) + " vertices, expected " +
                                                   std::to_string(n));
    }
    for (Vertex v : f) {
      if (v <= 0) throw Error(ErrorCode::NonPositiveLabel, "label " + std::to_string(v));
    }
    f = make_face(std::move(f));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  Complex c;
  c.n_ = static_cast<int>(n);
  std::set<Vertex> verts;
  for (const auto& f : facets) verts.insert(f.begin(), f.end());
  c.vertices_.assign(verts.begin(), verts.end());
  c.facets_ = std::move(facets);
  return c;
}

Complex Complex::empty_face() {
  Complex c;
  c.n_ = 0;
  c.facets_.push_back({});
  return c;
}

bool Complex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Complex::has_facet(std::span<const Vertex> sorted_face) const {
  if (static_cast<int>(sorted_face.size()) != n_) return false;
  auto it = std::lower_bound(facets_.begin(), facets_.end(), sorted_face,
                             [](const Face& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                             });
  return it != facets_.end() && std::equal(it->begin(), it->end(), sorted_face.begin(), sorted_face.end());
}

bool Complex::has_face(std::span<const Vertex> sorted_face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return std::includes(f.begin(), f.end(), sorted_face.begin(), sorted_face.end());
  });
}

std::vector<std::vector<Face>> faces_by_size(const Complex& c) {
  const int n = c.n();
  std::vector<std::set<Face>> buckets(static_cast<std::size_t>(n) + 1);
  Face sub;
  for (const auto& f : c.facets()) {
    const std::uint32_t full = 1u << n;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      sub.clear();
      for (int b = 0; b < n; ++b) {
        if (mask & (1u << b)) sub.push_back(f[b]);
      }
      buckets[sub.size()].insert(sub);
    }
  }
  std::vector<std::vector<Face>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(b.begin(), b.end());
  return out;
}

Complex relabel(const Complex& c, const std::map<Vertex, Vertex>& mapping) {
  if (c.n() == 0) return c;
  std::vector<Face> facets;
  facets.reserve(c.facet_count());
  for (const auto& f : c.facets()) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) {
      auto it = mapping.find(v);
      g.push_back(it == mapping.end() ? v : it->second);
    }
    facets.push_back(std::move(g));
  }
  return Complex::from_facets(std::move(facets));
}

Complex canonical_labels(const Complex& c) {
  std::map<Vertex, Vertex> mapping;
  Vertex next = 1;
  for (Vertex v : c.vertices()) mapping[v] = next++;
  return relabel(c, mapping);
}

Complex link(const Complex& c, std::span<const Vertex> face) {
  Face sorted(face.begin(), face.end());
  sorted = make_face(std::move(sorted));
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    if (!std::includes(f.begin(), f.end(), sorted.begin(), sorted.end())) continue;
    Face rest;
    std::set_difference(f.begin(), f.end(), sorted.begin(), sorted.end(), std::back_inserter(rest));
    facets.push_back(std::move(rest));
  }
  if (facets.empty()) throw Error(ErrorCode::NotAFace, to_string(sorted) + " is not a face");
  if (facets.front().empty()) return Complex::empty_face();
  return Complex::from_facets(std::move(facets));
}

std::vector<Face> induced_subcomplex(const Complex& c, std::span<const Vertex> subset) {
  Face s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    if (!c.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  }
  std::set<Face> faces;
  for (const auto& f : c.facets()) {
    Face common;
    std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(common));
    const std::size_t k = common.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Face sub;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (1u << b)) sub.push_back(common[b]);
      }
      faces.insert(std::move(sub));
    }
  }
  std::vector<Face> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.size() < b.size(); });
  return out;
}

std::map<Vertex, std::vector<Vertex>> adjacency(const Complex& c) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (Vertex v : c.vertices()) adj[v];
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        adj[f[i]].insert(f[j]);
        adj[f[j]].insert(f[i]);
      }
    }
  }
  std::map<Vertex, std::vector<Vertex>> out;
  for (auto& [v, nbrs] : adj) out.emplace(v, std::vector<Vertex>(nbrs.begin(), nbrs.end()));
  return out;
}

bool has_edge(const Complex& c, Vertex u, Vertex v) {
  if (u == v) return false;
  const Face e = u < v ? Face{u, v} : Face{v, u};
  return c.has_face(e);
}

std::map<Vertex, int> distances_from(const Complex& c, Vertex source) {
  if (!c.has_vertex(source)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(source));
  const auto adj = adjacency(c);
  std::map<Vertex, int> dist{{source, 0}};
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj.at(v)) {
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

int graph_distance(const Complex& c, Vertex u, Vertex v) {
  if (!c.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  const auto dist = distances_from(c, u);
  auto it = dist.find(v);
  if (it == dist.end()) {
    throw Error(ErrorCode::Disconnected,
                "no edge path between " + std::to_string(u) + " and " + std::to_string(v));
  }
  return it->second;
}

namespace {

// ridge -> indices of facets containing it
std::map<Face, std::vector<std::size_t>> ridge_incidence(const Complex& c) {
  std::map<Face, std::vector<std::size_t>> inc;
  const auto& facets = c.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t skip = 0; skip < facets[i].size(); ++skip) {
      Face r;
      r.reserve(facets[i].size() - 1);
      for (std::size_t j = 0; j < facets[i].size(); ++j) {
        if (j != skip) r.push_back(facets[i][j]);
      }
      inc[std::move(r)].push_back(i);
    }
  }
  return inc;
}

}  // namespace

PseudomanifoldReport is_pseudomanifold(const Complex& c) {
  if (c.n() < 1 || c.facet_count() == 0) return {false, "complex has no facets"};
  const auto inc = ridge_incidence(c);
  for (const auto& [ridge, owners] : inc) {
    if (owners.size() != 2) {
      return {false, "ridge " + to_string(ridge) + " lies in " + std::to_string(owners.size()) + " facets"};
    }
  }
  // facet-adjacency connectivity
  std::vector<std::size_t> parent(c.facet_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, owners] : inc) parent[find(owners[0])] = find(owners[1]);
  for (std::size_t i = 1; i < c.facet_count(); ++i) {
    if (find(i) != find(0)) {
      return {false, "facet " + to_string(c.facets()[i]) + " is not ridge-connected to " +
                         to_string(c.facets()[0])};
    }
  }
  return {};
}

std::vector<RidgeAdjacency> ridge_adjacencies(const Complex& c) {
  std::vector<RidgeAdjacency> out;
  for (auto& [ridge, owners] : ridge_incidence(c)) {
    if (owners.size() != 2) {
      throw Error(ErrorCode::NotPseudomanifold,
                  "ridge " + to_string(ridge) + " lies in " + std::to_string(owners.size()) + " facets");
    }
    out.push_back({ridge, owners[0], owners[1]});
  }
  return out;
}

}  // namespace sbundle
