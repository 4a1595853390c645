#ifndef SBUNDLE_FACE_NUMBERS_HPP
#define SBUNDLE_FACE_NUMBERS_HPP

#include <cstdint>
#include <vector>

#include "sbundle/complex.hpp"

namespace sbundle {

// (f_{-1}, f_0, ..., f_{n-1}) with f_{-1} = 1.
struct FVector {
  std::vector<std::int64_t> values;

  // Number of faces of the given dimension, -1 <= dim <= n-1.
  std::int64_t at(int dim) const { return values.at(static_cast<std::size_t>(dim + 1)); }
  int n() const { return static_cast<int>(values.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

// (h_0, ..., h_n).
struct HVector {
  std::vector<std::int64_t> values;

  std::int64_t at(int i) const { return values.at(static_cast<std::size_t>(i)); }
  int n() const { return static_cast<int>(values.size()) - 1; }
  friend bool operator==(const HVector&, const HVector&) = default;
};

// (g_0, ..., g_{floor(n/2)}), plus g_2 = h_2 - h_1 which is kept even when
// floor(n/2) < 2 (the n = 3 case).
struct GVector {
  std::vector<std::int64_t> values;
  std::int64_t g2 = 0;

  std::int64_t at(int i) const { return values.at(static_cast<std::size_t>(i)); }
  friend bool operator==(const GVector&, const GVector&) = default;
};

FVector f_vector(const Complex& c);

HVector h_from_f(const FVector& f, int n);
FVector f_from_h(const HVector& h, int n);

GVector g_vector(const HVector& h);

// f_1 - n f_0 + C(n+1, 2); equals g_2 of the h-vector for n >= 2.
std::int64_t g2_from_f(const FVector& f, int n);

std::int64_t euler_characteristic(const FVector& f);
std::int64_t euler_characteristic(const Complex& c);

// Residuals r_i = h_{n-i} - h_i - (-1)^i C(n,i) (chi - chi(S^{n-1})), i = 0..n.
// All zero for triangulated closed manifolds.
std::vector<std::int64_t> klee_residual(const Complex& c);
std::vector<std::int64_t> klee_residual(const FVector& f, int n);

bool all_zero(const std::vector<std::int64_t>& v);

}  // namespace sbundle

#endif  // SBUNDLE_FACE_NUMBERS_HPP
