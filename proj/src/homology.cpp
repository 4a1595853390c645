#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "sbundle/verify.hpp"

namespace sbundle {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::LengthMismatch, "matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(x, b(k, j)));
      }
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

namespace {

using SparseVector = std::vector<std::pair<std::size_t, std::int64_t>>;  // sorted by index, no zeros

std::int64_t abs64(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) throw Error(ErrorCode::Overflow, "abs overflow");
  return x < 0 ? -x : x;
}

void normalize(SparseVector& v) {
  std::int64_t g = 0;
  for (const auto& [i, x] : v) g = std::gcd(g, abs64(x));
  if (g > 1) {
    for (auto& [i, x] : v) x /= g;
  }
}

// scale_v * v - scale_p * p
SparseVector combine(const SparseVector& v, std::int64_t scale_v, const SparseVector& p, std::int64_t scale_p) {
  SparseVector out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.emplace_back(v[i].first, checked_mul(scale_v, v[i].second));
      ++i;
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.emplace_back(p[j].first, checked_mul(-scale_p, p[j].second));
      ++j;
    } else {
      const std::int64_t x = checked_sub(checked_mul(scale_v, v[i].second), checked_mul(scale_p, p[j].second));
      if (x != 0) out.emplace_back(v[i].first, x);
      ++i;
      ++j;
    }
  }
  return out;
}

// Rank of the span of `vectors` by incremental fraction-free elimination:
// each vector is reduced against the stored pivots by integer combinations
// (made primitive by their content) until it vanishes or gains a new pivot.
std::size_t sparse_rank(std::vector<SparseVector> vectors) {
  std::map<std::size_t, SparseVector> pivots;  // leading index -> reduced vector
  for (auto& v : vectors) {
    normalize(v);
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        pivots.emplace(v.front().first, std::move(v));
        break;
      }
      const std::int64_t a = v.front().second;
      const std::int64_t p = it->second.front().second;
      const std::int64_t g = std::gcd(abs64(a), abs64(p));
      v = combine(v, p / g, it->second, a / g);
      normalize(v);
    }
  }
  return pivots.size();
}

std::size_t face_index(const std::vector<Face>& sorted_faces, const Face& f) {
  return static_cast<std::size_t>(std::lower_bound(sorted_faces.begin(), sorted_faces.end(), f) - sorted_faces.begin());
}

// Columns of ∂_d as sparse vectors over the (d-1)-faces.
std::vector<SparseVector> boundary_columns(const std::vector<std::vector<Face>>& faces, int d) {
  std::vector<SparseVector> cols;
  if (d <= 0) return cols;
  const auto& upper = faces[static_cast<std::size_t>(d + 1)];
  const auto& lower = faces[static_cast<std::size_t>(d)];
  cols.reserve(upper.size());
  for (const auto& f : upper) {
    SparseVector col;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face r;
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != skip) r.push_back(f[j]);
      }
      col.emplace_back(face_index(lower, r), skip % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

IntMatrix boundary_matrix(const Complex& c, int d) {
  if (d < 0 || d > c.n() - 1) throw Error(ErrorCode::InvalidArgument, "dimension " + std::to_string(d) + " out of range");
  const auto faces = faces_by_size(c);
  const std::size_t rows = d == 0 ? 0 : faces[static_cast<std::size_t>(d)].size();
  const std::size_t cols = faces[static_cast<std::size_t>(d + 1)].size();
  IntMatrix m(rows, cols);
  const auto columns = boundary_columns(faces, d);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [i, x] : columns[j]) m(i, j) = x;
  }
  return m;
}

std::size_t rank(IntMatrix m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) rows[i].emplace_back(j, m(i, j));
    }
  }
  return sparse_rank(std::move(rows));
}

std::vector<std::int64_t> betti_numbers(const Complex& c) {
  const int n = c.n();
  if (n == 0) return {};
  const auto faces = faces_by_size(c);
  // ranks[d] = rank ∂_d for d = 0..n (∂_0 and ∂_n vanish)
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 1; d < n; ++d) {
    ranks[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(sparse_rank(boundary_columns(faces, d)));
  }
  std::vector<std::int64_t> betti(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    const auto count = static_cast<std::int64_t>(faces[static_cast<std::size_t>(d + 1)].size());
    betti[static_cast<std::size_t>(d)] = count - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)];
  }
  return betti;
}

}  // namespace sbundle
