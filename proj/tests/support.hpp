#pragma once

#include "cayley/calib.hpp"
#include "cayley/spin7.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace cayley;

inline Vector<double> gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = g(rng);
  return v;
}

inline Vector<double> unit_orthogonal_to(std::mt19937_64& rng, const std::vector<Vector<double>>& basis) {
  for (;;) {
    Vector<double> v = gaussian(rng, 8);
    for (const auto& b : basis) {
      const double c = dot(v, b);
      for (std::size_t i = 0; i < 8; ++i) v[i] -= c * b[i];
    }
    const double n = std::sqrt(dot(v, v));
    if (n < 1e-3) continue;
    for (auto& x : v) x /= n;
    return v;
  }
}

/// Spin(7)-frame from random e1, e2, e3, e5 completed by triple products.
inline Frame8<double> random_spin7_frame(std::mt19937_64& rng, const KForm<double>& phi) {
  const Vector<double> e1 = unit_orthogonal_to(rng, {});
  const Vector<double> e2 = unit_orthogonal_to(rng, {e1});
  const Vector<double> e3 = unit_orthogonal_to(rng, {e1, e2});
  const Vector<double> e4 = -cross3(phi, e1, e2, e3);
  const Vector<double> e5 = unit_orthogonal_to(rng, {e1, e2, e3, e4});
  return complete_frame(phi, e1, e2, e3, e5);
}

inline std::vector<Vector<double>> random_frame(std::mt19937_64& rng, int p) {
  std::vector<Vector<double>> out;
  for (int i = 0; i < p; ++i) out.push_back(unit_orthogonal_to(rng, out));
  return out;
}

/// Sign of the permutation sorting `idx` (0 if an index repeats).
inline int permutation_sign(std::vector<int> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace testing_support
