#ifndef SBUNDLE_VERIFY_HPP
#define SBUNDLE_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbundle/complex.hpp"
#include "sbundle/handle.hpp"

namespace sbundle {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

// Matrix of ∂_d from d-faces (columns) to (d-1)-faces (rows), both in sorted
// order, with ∂[v_0..v_d] = Σ (-1)^i [.. v_i omitted ..]. ∂_0 has no rows.
IntMatrix boundary_matrix(const Complex& c, int d);

// Exact rank by fraction-free integer elimination with checked arithmetic.
std::size_t rank(IntMatrix m);

// Betti numbers over Q, β_0..β_{n-1}.
std::vector<std::int64_t> betti_numbers(const Complex& c);

// ±1 per facet (in facet order) forming a coherent orientation, or nothing
// when none exists. Throws NotPseudomanifold.
std::optional<std::vector<int>> coherent_orientation(const Complex& c);

BundleType orientability(const Complex& c);
inline bool is_orientable(const Complex& c) { return orientability(c) == BundleType::Orientable; }

struct EvidenceCheck {
  std::string name;
  bool passed;
  std::string detail;
};

// Pseudomanifold conditions plus, for every vertex, that its link is an
// orientable pseudomanifold with the rational homology of S^{n-2}. This is
// evidence of a closed manifold, not a proof.
struct ManifoldEvidence {
  bool passed = true;
  std::vector<EvidenceCheck> checks;
};

ManifoldEvidence manifold_evidence(const Complex& c);

// Vertex map source -> target carrying facets onto facets.
struct IsoWitness {
  std::map<Vertex, Vertex> bijection;
};

std::optional<IsoWitness> are_isomorphic(const Complex& a, const Complex& b);

bool is_witness(const Complex& a, const Complex& b, const IsoWitness& w);

}  // namespace sbundle

#endif  // SBUNDLE_VERIFY_HPP
