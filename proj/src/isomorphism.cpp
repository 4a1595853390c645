#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "sbundle/face_numbers.hpp"
#include "sbundle/verify.hpp"

namespace sbundle {

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::vector<std::int64_t>>;

// Per-complex data for the search, with vertices renumbered 0..m-1.
struct Indexed {
  std::vector<Vertex> labels;
  std::vector<Signature> signature;
  std::vector<std::vector<std::size_t>> star;  // vertex -> faces containing it
  std::vector<std::vector<int>> faces;         // sorted index lists
  std::set<std::vector<int>> face_set;
  std::vector<std::vector<int>> neighbours;
};

Indexed prepare(const Complex& c) {
  Indexed ix;
  ix.labels = c.vertices();
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(ix.labels.begin(), ix.labels.end(), v) - ix.labels.begin());
  };
  ix.star.resize(ix.labels.size());
  for (const auto& bucket : faces_by_size(c)) {
    for (const auto& f : bucket) {
      if (f.empty()) continue;
      std::vector<int> idx;
      for (Vertex v : f) idx.push_back(index_of(v));
      for (int v : idx) ix.star[static_cast<std::size_t>(v)].push_back(ix.faces.size());
      ix.face_set.insert(idx);
      ix.faces.push_back(std::move(idx));
    }
  }
  const auto adj = adjacency(c);
  for (Vertex v : ix.labels) {
    std::vector<int> nb;
    for (Vertex w : adj.at(v)) nb.push_back(index_of(w));
    const Vertex face[] = {v};
    const Complex lk = link(c, face);
    ix.signature.emplace_back(nb.size(), lk.facet_count(), f_vector(lk).values);
    ix.neighbours.push_back(std::move(nb));
  }
  return ix;
}

class Search {
 public:
  Search(const Indexed& a, const Indexed& b) : a_(a), b_(b), map_(a.labels.size(), -1), used_(b.labels.size(), false) {
    order_ = search_order();
  }

  bool run() { return extend(0); }
  const std::vector<int>& mapping() const { return map_; }

 private:
  // BFS over the 1-skeleton of `a`, starting from the vertex whose signature
  // class is smallest, so that constraints accumulate early.
  std::vector<int> search_order() const {
    const std::size_t m = a_.labels.size();
    std::vector<std::size_t> class_size(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      class_size[i] = static_cast<std::size_t>(std::count(a_.signature.begin(), a_.signature.end(), a_.signature[i]));
    }
    std::vector<int> order;
    std::vector<bool> seen(m, false);
    while (order.size() < m) {
      int start = -1;
      for (std::size_t i = 0; i < m; ++i) {
        if (!seen[i] && (start < 0 || class_size[i] < class_size[static_cast<std::size_t>(start)])) start = static_cast<int>(i);
      }
      std::deque<int> queue{start};
      seen[static_cast<std::size_t>(start)] = true;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : a_.neighbours[static_cast<std::size_t>(v)]) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            queue.push_back(w);
          }
        }
      }
    }
    return order;
  }

  // Faces through x whose vertices are all mapped must map to faces, and b
  // must have the same number of fully-mapped faces through y.
  bool consistent(int x, int y) const {
    std::size_t count_a = 0;
    for (std::size_t fi : a_.star[static_cast<std::size_t>(x)]) {
      const auto& f = a_.faces[fi];
      std::vector<int> img;
      img.reserve(f.size());
      bool complete = true;
      for (int v : f) {
        const int w = map_[static_cast<std::size_t>(v)];
        if (w < 0) {
          complete = false;
          break;
        }
        img.push_back(w);
      }
      if (!complete) continue;
      std::sort(img.begin(), img.end());
      if (!b_.face_set.contains(img)) return false;
      ++count_a;
    }
    std::size_t count_b = 0;
    for (std::size_t fi : b_.star[static_cast<std::size_t>(y)]) {
      const auto& f = b_.faces[fi];
      if (std::all_of(f.begin(), f.end(), [&](int w) { return used_[static_cast<std::size_t>(w)]; })) ++count_b;
    }
    return count_a == count_b;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int x = order_[depth];
    for (std::size_t y = 0; y < b_.labels.size(); ++y) {
      if (used_[y] || b_.signature[y] != a_.signature[static_cast<std::size_t>(x)]) continue;
      map_[static_cast<std::size_t>(x)] = static_cast<int>(y);
      used_[y] = true;
      if (consistent(x, static_cast<int>(y)) && extend(depth + 1)) return true;
      map_[static_cast<std::size_t>(x)] = -1;
      used_[y] = false;
    }
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

}  // namespace

bool is_witness(const Complex& a, const Complex& b, const IsoWitness& w) {
  if (w.bijection.size() != a.vertex_count() || a.vertex_count() != b.vertex_count()) return false;
  std::set<Vertex> image;
  for (const auto& [src, dst] : w.bijection) {
    if (!a.has_vertex(src) || !b.has_vertex(dst)) return false;
    image.insert(dst);
  }
  if (image.size() != b.vertex_count()) return false;
  return relabel(a, w.bijection) == b;
}

std::optional<IsoWitness> are_isomorphic(const Complex& a, const Complex& b) {
  if (a.n() != b.n() || a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) {
    return std::nullopt;
  }
  if (f_vector(a) != f_vector(b)) return std::nullopt;
  const Indexed ia = prepare(a);
  const Indexed ib = prepare(b);
  auto sa = ia.signature;
  auto sb = ib.signature;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  Search search(ia, ib);
  if (!search.run()) return std::nullopt;
  IsoWitness w;
  for (std::size_t i = 0; i < ia.labels.size(); ++i) {
    w.bijection[ia.labels[i]] = ib.labels[static_cast<std::size_t>(search.mapping()[i])];
  }
  if (!is_witness(a, b, w)) throw Error(ErrorCode::InvariantViolation, "isomorphism search produced a bad map");
  return w;
}

}  // namespace sbundle
