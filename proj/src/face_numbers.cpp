#include "sbundle/face_numbers.hpp"

#include <algorithm>

namespace sbundle {

FVector f_vector(const Complex& c) {
  const auto faces = faces_by_size(c);
  FVector f;
  f.values.reserve(faces.size());
  for (const auto& bucket : faces) f.values.push_back(static_cast<std::int64_t>(bucket.size()));
  return f;
}

namespace {

void check_length(std::size_t size, int n, const char* what) {
  if (n < 0 || size != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + " has " + std::to_string(size) +
                                               " entries, expected n+1 = " + std::to_string(n + 1));
  }
}

std::int64_t sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

HVector h_from_f(const FVector& f, int n) {
  check_length(f.values.size(), n, "f-vector");
  if (f.values[0] != 1) throw Error(ErrorCode::InvalidArgument, "f_{-1} must be 1");
  HVector h;
  h.values.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = checked_mul(binomial(n - j, n - i), f.values[static_cast<std::size_t>(j)]);
      acc = checked_add(acc, checked_mul(sign(i - j), term));
    }
    h.values[static_cast<std::size_t>(i)] = acc;
  }
  return h;
}

FVector f_from_h(const HVector& h, int n) {
  check_length(h.values.size(), n, "h-vector");
  FVector f;
  f.values.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j <= i; ++j) {
      acc = checked_add(acc, checked_mul(binomial(n - j, n - i), h.values[static_cast<std::size_t>(j)]));
    }
    f.values[static_cast<std::size_t>(i)] = acc;
  }
  return f;
}

GVector g_vector(const HVector& h) {
  const int n = h.n();
  GVector g;
  for (int i = 0; i <= n / 2; ++i) {
    g.values.push_back(i == 0 ? h.at(0) : checked_sub(h.at(i), h.at(i - 1)));
  }
  if (n >= 2) g.g2 = checked_sub(h.at(2), h.at(1));
  return g;
}

std::int64_t g2_from_f(const FVector& f, int n) {
  return checked_add(checked_sub(f.at(1), checked_mul(n, f.at(0))), binomial(n + 1, 2));
}

std::int64_t euler_characteristic(const FVector& f) {
  std::int64_t chi = 0;
  for (int d = 0; d < f.n(); ++d) chi = checked_add(chi, checked_mul(sign(d), f.at(d)));
  return chi;
}

std::int64_t euler_characteristic(const Complex& c) { return euler_characteristic(f_vector(c)); }

std::vector<std::int64_t> klee_residual(const FVector& f, int n) {
  const HVector h = h_from_f(f, n);
  const std::int64_t chi = euler_characteristic(f);
  const std::int64_t chi_sphere = 1 + sign(n - 1);
  const std::int64_t excess = checked_sub(chi, chi_sphere);
  std::vector<std::int64_t> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const std::int64_t rhs = checked_mul(sign(i), checked_mul(binomial(n, i), excess));
    r[static_cast<std::size_t>(i)] = checked_sub(checked_sub(h.at(n - i), h.at(i)), rhs);
  }
  return r;
}

std::vector<std::int64_t> klee_residual(const Complex& c) { return klee_residual(f_vector(c), c.n()); }

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace sbundle
