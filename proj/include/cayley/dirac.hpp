#pragma once

// Pointwise algebra of the deformation operator of a Cayley plane.
//
// Symbol conventions: sigma(d)(xi) = xi ^ . and sigma(delta)(xi) = -xi _| . ;
// sigma(D)(xi) s = xi^sharp x s for s normal to the plane.

#include "cayley/calib.hpp"
#include "cayley/g2.hpp"
#include "cayley/spin7.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

class NonCayleyError : public PreconditionError {
 public:
  explicit NonCayleyError(double tau) : PreconditionError("plane is not Cayley (|tau| = " + std::to_string(tau) + ")"), tau_norm(tau) {}
  double tau_norm;
};

/// R^8 = T + N at a Cayley plane T, with E = {a in Lambda^2_7 : a|_T = 0}.
struct CayleyPointModel {
  KForm<double> phi{8, 4};
  std::vector<Vector<double>> tangent_frame;
  std::vector<Vector<double>> normal_frame;
  /// Orthonormal basis of E, from {u_i x n_j} in (i, j) order.
  std::vector<KForm<double>> E_basis;
  double tau_norm = 0;
  /// dim of the kernel of Lambda^2_7 -> Lambda^2(T).
  std::size_t kernel_dim = 0;
};

/// Builds the model at a Cayley plane; the normal frame is the orthonormal
/// complement taken against e_1..e_8 in order unless given explicitly.
CayleyPointModel build_cayley_model(const Spin7Model<double>& m, const OrientedPlane<double>& plane,
                                    const std::vector<Vector<double>>& normal_frame = {}, double tau_tol = kTauGate);

struct SubbundleReport {
  std::size_t dim_E = 0;
  /// Largest |a|_T| or Lambda^2_21 component over the E basis.
  double E_residual = 0;
  /// a -> 2 pi_7(a) on unit anti-self-dual forms of T: |image| (all equal).
  double embedding_scale = 0;
  /// Deviation of the image Gram matrix from scale^2 Id.
  double embedding_residual = 0;
  /// Largest |<image, E>|.
  double orthogonality = 0;
  std::size_t image_dim = 0;
};

SubbundleReport check_subbundle(const CayleyPointModel& model);

/// Unit anti-self-dual 2-forms of the oriented tangent plane, as forms on R^8.
std::array<KForm<double>, 3> tangent_asd_forms(const CayleyPointModel& model);

/// xi given by its components on the tangent frame.
Vector<double> tangent_vector(const CayleyPointModel& model, const Vector<double>& xi);

/// sigma(xi): column j holds the E-coordinates of xi^sharp x n_j.
Eigen::Matrix4d symbol_D(const CayleyPointModel& model, const Vector<double>& xi);

struct CliffordReport {
  double max_residual = 0;
  int pairs = 0;
  bool passed = false;
};

/// sigma(a)^T sigma(b) + sigma(b)^T sigma(a) = 2 <a, b> Id on all basis pairs
/// plus `random_pairs` seeded random pairs.
CliffordReport clifford_check(const CayleyPointModel& model, int random_pairs = 64, std::uint64_t seed = 7,
                              double tol = 1e-10);

// ---------------------------------------------------------------------------
// B^ev on an oriented 3-dimensional space: v.(f, a) = (v _| *a, -f *v^flat - v^flat ^ *a).

template <class T>
std::pair<T, KForm<T>> bev_clifford(const Vector<T>& v, const T& f, const KForm<T>& alpha) {
  if (v.size() != 3 || alpha.dim() != 3 || alpha.degree() != 2) throw PreconditionError("bev_clifford works on R^3");
  const KForm<T> star_a = hodge(alpha);
  const T first = contract(v, star_a)[0];
  const KForm<T> second = -(f * hodge(flat(v))) - wedge(flat(v), star_a);
  return {first, second};
}

template <class T>
struct AssociativePointModel {
  G2Model<T> g2;
  /// Orthonormal frame of an associative 3-plane in R^7.
  std::array<Vector<T>, 3> tangent3;
  /// Orthonormal frame of the normal space (may be empty in exact mode).
  std::vector<Vector<T>> normal4;
  Vector<T> s;
};

template <class T>
AssociativePointModel<T> make_associative_model(const G2Model<T>& g2, const std::array<Vector<T>, 3>& tangent3,
                                                const Vector<T>& s, std::vector<Vector<T>> normal4 = {},
                                                double tol = 1e-10) {
  auto near = [&](const T& a, double b) {
    return is_exact_v<T> ? a == T(static_cast<long long>(b)) : std::fabs(to_double(a) - b) <= tol;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!near(dot(tangent3[i], tangent3[j]), i == j ? 1.0 : 0.0)) throw PreconditionError("tangent3 is not orthonormal");
    }
    if (!near(dot(tangent3[i], s), 0.0)) throw PreconditionError("s is not normal to the plane");
  }
  if (!near(dot(s, s), 1.0)) throw PreconditionError("s is not a unit vector");
  if (!near(evaluate(g2.phi3, {tangent3[0], tangent3[1], tangent3[2]}), 1.0)) {
    throw PreconditionError("tangent3 does not span a positively oriented associative plane");
  }
  if constexpr (!is_exact_v<T>) {
    if (normal4.empty()) {
      std::vector<Vector<double>> seed(tangent3.begin(), tangent3.end());
      for (int i = 1; i <= 7; ++i) seed.push_back(basis_vector<double>(7, i));
      auto q = orthonormalize(seed, 1e-8);
      normal4.assign(q.begin() + 3, q.end());
    }
  }
  return AssociativePointModel<T>{g2, tangent3, std::move(normal4), s};
}

/// h(f, a) = f s + s x (*a)^sharp, with *a taken on the oriented tangent plane.
template <class T>
Vector<T> h_iso(const AssociativePointModel<T>& m, const T& f, const KForm<T>& alpha) {
  if (alpha.dim() != 3 || alpha.degree() != 2) throw PreconditionError("h_iso expects a 2-form on the tangent plane");
  const KForm<T> star_a = hodge(alpha);
  Vector<T> a(7, T(0));
  for (std::size_t i = 0; i < 3; ++i) a = a + star_a[i] * m.tangent3[i];
  return f * m.s + cross_g2(m.g2, m.s, a);
}

template <class T>
Vector<T> tangent_vector(const AssociativePointModel<T>& m, const Vector<T>& v) {
  Vector<T> out(7, T(0));
  for (std::size_t i = 0; i < 3; ++i) out = out + v[i] * m.tangent3[i];
  return out;
}

struct EquivarianceReport {
  int cases = 0;
  int equal = 0;
  double max_residual = 0;
  bool passed = false;
};

/// h(v.(f, a)) = v x h(f, a) for v in the tangent basis and (f, a) in the
/// basis {(1,0), (0,e12), (0,e13), (0,e23)}. Exact equality in exact mode.
template <class T>
EquivarianceReport h_equivariance_check(const AssociativePointModel<T>& m, double tol = 1e-10) {
  EquivarianceReport rep;
  std::vector<std::pair<T, KForm<T>>> basis;
  basis.emplace_back(T(1), KForm<T>(3, 2));
  for (std::size_t k = 0; k < 3; ++k) {
    KForm<T> a(3, 2);
    a[k] = T(1);
    basis.emplace_back(T(0), a);
  }
  for (int i = 1; i <= 3; ++i) {
    const Vector<T> v = basis_vector<T>(3, i);
    for (const auto& [f, a] : basis) {
      const auto moved = bev_clifford(v, f, a);
      const Vector<T> lhs = h_iso(m, moved.first, moved.second);
      const Vector<T> rhs = cross_g2(m.g2, tangent_vector(m, v), h_iso(m, f, a));
      const Vector<T> diff = lhs - rhs;
      const double r = max_abs(diff);
      rep.max_residual = std::max(rep.max_residual, r);
      ++rep.cases;
      const bool eq = is_exact_v<T> ? std::all_of(diff.begin(), diff.end(), [](const T& x) { return x == 0; }) : r <= tol;
      if (eq) ++rep.equal;
    }
  }
  rep.passed = rep.equal == rep.cases;
  return rep;
}

/// Gram matrix of h on the basis {(1,0), (0,e12), (0,e13), (0,e23)}.
template <class T>
std::array<std::array<T, 4>, 4> h_gram(const AssociativePointModel<T>& m) {
  std::vector<Vector<T>> img;
  img.push_back(h_iso(m, T(1), KForm<T>(3, 2)));
  for (std::size_t k = 0; k < 3; ++k) {
    KForm<T> a(3, 2);
    a[k] = T(1);
    img.push_back(h_iso(m, T(0), a));
  }
  std::array<std::array<T, 4>, 4> g{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) g[i][j] = dot(img[i], img[j]);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Symbol intertwinings for the special Lagrangian and coassociative cases.

struct IntertwineReport {
  /// Global scalar c fixed at the probe covector e^1.
  double probe_scalar = 0;
  /// Largest entry of sigma_D(xi) - c * (transported model symbol) over the checked xi.
  double max_residual = 0;
  int covectors = 0;
  bool passed = false;
};

/// Special Lagrangian plane R^4 = span(d/dx_k) under -omega^2/2 + Re Omega.
/// N = J(T) via n_k = J u_k; Lambda^0 + Lambda^2_+ -> E via
/// f -> -f omega/2 and e^{ij} -> u_i x J u_j. Model symbol:
/// a -> (-xi _| a, (xi ^ a + *(xi ^ a)) / 2).
IntertwineReport sl_symbol_intertwine(int random_covectors = 32, std::uint64_t seed = 11, double tol = 1e-10);

/// X = span(e5..e8) under d(theta) ^ phi + psi (theta = x1).
/// N -> Lambda^2_- + Lambda^4 via v -> -(v _| phi)|_X for v orthogonal to
/// d/dtheta and d/dtheta -> -vol_X; Lambda^3 -> E via g -> d/dtheta x (*g)^sharp.
/// Model symbol: (a, b) -> xi ^ a - xi _| b.
IntertwineReport coassoc_symbol_intertwine(int random_covectors = 32, std::uint64_t seed = 13, double tol = 1e-10);

}  // namespace cayley
