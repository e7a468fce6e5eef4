#pragma once

// G2 structure on R^7 obtained by slicing phi0 along the first coordinate.
// Slots 2..8 of R^8 become slots 1..7 of R^7.

#include "cayley/plane.hpp"
#include "cayley/spin7.hpp"

namespace cayley {

template <class T>
struct G2Model {
  KForm<T> phi3{7, 3};
  KForm<T> psi4{7, 4};
};

/// Restricts a form on R^8 with no dx_1 component to R^7 (slot i -> i-1).
template <class T>
KForm<T> slice_to_r7(const KForm<T>& a) {
  if (a.dim() != 8) throw PreconditionError("slice_to_r7 expects a form on R^8");
  KForm<T> out(7, a.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ScalarTraits<T>::is_zero(a[i], 0.0)) continue;
    const Blade b = a.blade(i);
    if (b & 1u) throw PreconditionError("slice_to_r7: form has a dx_1 component");
    out[static_cast<std::size_t>(out.basis().index_of(static_cast<Blade>(b >> 1)))] = a[i];
  }
  return out;
}

/// Lifts a form on R^7 to R^8 (slot i -> i+1).
template <class T>
KForm<T> lift_to_r8(const KForm<T>& a) {
  if (a.dim() != 7) throw PreconditionError("lift_to_r8 expects a form on R^7");
  static const int slots[7] = {2, 3, 4, 5, 6, 7, 8};
  return reindex(a, 8, std::span<const int>(slots, 7));
}

template <class T>
Vector<T> lift_to_r8(const Vector<T>& v) {
  if (v.size() != 7) throw PreconditionError("lift_to_r8 expects a vector in R^7");
  Vector<T> out(8, T(0));
  for (std::size_t i = 0; i < 7; ++i) out[i + 1] = v[i];
  return out;
}

/// phi = e1 _| phi0 and psi = phi0 - e^1 ^ phi, both moved to R^7.
template <class T>
G2Model<T> build_g2() {
  const KForm<T> Phi = phi0<T>();
  const Vector<T> e1 = basis_vector<T>(8, 1);
  const KForm<T> phi8 = contract(e1, Phi);
  const KForm<T> psi8 = Phi - wedge(flat(e1), phi8);
  G2Model<T> m;
  m.phi3 = slice_to_r7(phi8);
  m.psi4 = slice_to_r7(psi8);
  const KForm<T> diff = hodge(m.phi3) - m.psi4;
  if (diff.max_abs() > (is_exact_v<T> ? 0.0 : 1e-12)) throw Error("internal: *phi does not equal psi on R^7");
  return m;
}

/// The Spin(7) form d(theta) ^ phi + psi on R = R x R^7, theta the first coordinate.
template <class T>
KForm<T> spin7_from_g2(const G2Model<T>& m) {
  return wedge(flat(basis_vector<T>(8, 1)), lift_to_r8(m.phi3)) + lift_to_r8(m.psi4);
}

/// v x w with g(u, v x w) = phi(u, v, w).
template <class T>
Vector<T> cross_g2(const G2Model<T>& m, const Vector<T>& v, const Vector<T>& w) {
  return sharp(contract(w, contract(v, m.phi3)));
}

/// chi(u, v, w) = -u x (v x w) - g(u, v) w + g(u, w) v.
template <class T>
Vector<T> associator(const G2Model<T>& m, const Vector<T>& u, const Vector<T>& v, const Vector<T>& w) {
  return -cross_g2(m, u, cross_g2(m, v, w)) - dot(u, v) * w + dot(u, w) * v;
}

template <class T>
bool is_associative(const G2Model<T>& m, const OrientedPlane<T>& plane, double tol = 1e-9) {
  if (plane.dim() != 7 || plane.degree() != 3) throw PreconditionError("is_associative expects a 3-plane in R^7");
  if constexpr (is_exact_v<T>) {
    const T sq = restricted_square(m.phi3, plane);
    return sq == 1 || sq == -1;
  } else {
    return std::fabs(restrict_form(m.phi3, plane)) >= 1.0 - tol;
  }
}

/// phi vanishes on every 3-subframe of the 4-plane.
template <class T>
bool is_coassociative(const G2Model<T>& m, const OrientedPlane<T>& plane, double tol = 1e-9) {
  if (plane.dim() != 7 || plane.degree() != 4) throw PreconditionError("is_coassociative expects a 4-plane in R^7");
  static const int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : triples) {
    if constexpr (is_exact_v<T>) {
      const auto& s = plane.spans();
      if (evaluate(m.phi3, {s[t[0]], s[t[1]], s[t[2]]}) != 0) return false;
    } else {
      const auto& q = plane.orthonormal();
      if (std::fabs(evaluate(m.phi3, {q[t[0]], q[t[1]], q[t[2]]})) > tol) return false;
    }
  }
  return true;
}

}  // namespace cayley
