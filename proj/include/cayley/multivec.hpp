#pragma once

// Exterior algebra of R^n (n <= 8) with the Euclidean metric.
//
// A k-form is stored densely over the blade basis {dx_I : I strictly
// increasing}, ordered lexicographically. Blades are bit masks: bit i-1 set
// means dx_i is a factor. Every sign is computed from permutation parity.
//
// Interior product convention: (v _| a)(x_1, ...) = a(v, x_1, ...), i.e. v
// enters the first slot. With this convention e_4 = -e_1 x e_2 x e_3 for the
// standard Spin(7) form.

#include "cayley/errors.hpp"
#include "cayley/scalar.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cayley {

inline constexpr int kMaxDim = 8;

using Blade = std::uint16_t;

template <class T>
using Vector = std::vector<T>;

/// Lexicographic blade basis of Lambda^k(R^n).
class BladeBasis {
 public:
  static const BladeBasis& get(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  std::size_t size() const { return blades_.size(); }
  Blade blade(std::size_t i) const { return blades_[i]; }
  const std::vector<Blade>& blades() const { return blades_; }
  /// Position of a blade of this degree, or -1.
  int index_of(Blade b) const { return index_[b]; }

 private:
  BladeBasis(int dim, int degree);
  int dim_ = 0;
  int degree_ = 0;
  std::vector<Blade> blades_;
  std::array<int, 256> index_{};
};

/// Parity sign of dx_A ^ dx_B relative to dx_{A u B}; 0 if A and B overlap.
int wedge_sign(Blade a, Blade b);

/// Blade from 1-based indices (any order); sign receives the parity of the sort.
/// Throws on repeated or out-of-range indices.
Blade make_blade(std::span<const int> indices, int dim, int* sign = nullptr);

/// 1-based indices of a blade in increasing order.
std::vector<int> blade_indices(Blade b);

std::string blade_name(Blade b);

template <class T>
class KForm {
 public:
  KForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || dim > kMaxDim) throw PreconditionError("form dimension must be in 1..8");
    if (degree < 0 || degree > dim) throw PreconditionError("form degree must be in 0..dim");
    coeffs_.assign(basis().size(), T(0));
  }

  /// coeff * dx_{i_1} ^ ... ^ dx_{i_k}; indices are 1-based, any order.
  static KForm monomial(int dim, std::initializer_list<int> indices, const T& coeff = T(1)) {
    return monomial(dim, std::span<const int>(indices.begin(), indices.size()), coeff);
  }
  static KForm monomial(int dim, std::span<const int> indices, const T& coeff = T(1)) {
    KForm out(dim, static_cast<int>(indices.size()));
    int sign = 1;
    const Blade b = make_blade(indices, dim, &sign);
    out.coeffs_[out.basis().index_of(b)] = sign > 0 ? coeff : T(-coeff);
    return out;
  }
  static KForm scalar(int dim, const T& value) {
    KForm out(dim, 0);
    out.coeffs_[0] = value;
    return out;
  }
  static KForm volume(int dim) {
    KForm out(dim, dim);
    out.coeffs_[0] = T(1);
    return out;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }
  const BladeBasis& basis() const { return BladeBasis::get(dim_, degree_); }

  Blade blade(std::size_t i) const { return basis().blade(i); }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const T> coeffs() const { return coeffs_; }

  T coeff(Blade b) const {
    const int i = basis().index_of(b);
    return i < 0 ? T(0) : coeffs_[i];
  }
  /// Coefficient of dx_{i_1 ... i_k} for 1-based indices in any order.
  T at(std::initializer_list<int> indices) const {
    int sign = 1;
    const Blade b = make_blade(std::span<const int>(indices.begin(), indices.size()), dim_, &sign);
    if (std::popcount(static_cast<unsigned>(b)) != degree_) return T(0);
    const T c = coeff(b);
    return sign > 0 ? c : T(-c);
  }
  void add(Blade b, const T& value) {
    const int i = basis().index_of(b);
    if (i < 0) throw PreconditionError("blade degree does not match form degree");
    coeffs_[i] += value;
  }

  std::size_t nonzero_count(double tol = ScalarTraits<T>::tolerance) const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                  [tol](const T& c) { return !ScalarTraits<T>::is_zero(c, tol); }));
  }
  bool is_zero(double tol = ScalarTraits<T>::tolerance) const { return nonzero_count(tol) == 0; }

  KForm& operator+=(const KForm& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  KForm& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= T(-1); }
  friend KForm operator*(const T& s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, const T& s) { return a *= s; }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  /// Largest absolute coefficient, as a double.
  double max_abs() const {
    double m = 0;
    for (const auto& c : coeffs_) m = std::max(m, to_double(ScalarTraits<T>::abs(c)));
    return m;
  }

  template <class U>
  KForm<U> cast() const {
    KForm<U> out(dim_, degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if constexpr (std::is_same_v<U, double>) {
        out[i] = to_double(coeffs_[i]);
      } else {
        out[i] = U(coeffs_[i]);
      }
    }
    return out;
  }

 private:
  void check_same_shape(const KForm& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_) throw PreconditionError("form shape mismatch");
  }

  int dim_;
  int degree_;
  std::vector<T> coeffs_;
};

// ---------------------------------------------------------------------------
// Vectors

template <class T>
Vector<T> basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw PreconditionError("basis index out of range");
  Vector<T> v(static_cast<std::size_t>(dim), T(0));
  v[static_cast<std::size_t>(i - 1)] = T(1);
  return v;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vector<T> operator-(Vector<T> a, const Vector<T>& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vector<T> operator-(Vector<T> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class T>
Vector<T> operator*(const T& s, Vector<T> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
double max_abs(const Vector<T>& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, to_double(ScalarTraits<T>::abs(x)));
  return m;
}

// ---------------------------------------------------------------------------
// Products

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b) {
  if (a.dim() != b.dim()) throw PreconditionError("wedge: dimension mismatch");
  if (a.degree() + b.degree() > a.dim()) throw PreconditionError("wedge: degree overflow");
  KForm<T> out(a.dim(), a.degree() + b.degree());
  const auto& ob = out.basis();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ScalarTraits<T>::is_zero(a[i], 0.0)) continue;
    const Blade ba = a.blade(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (ScalarTraits<T>::is_zero(b[j], 0.0)) continue;
      const Blade bb = b.blade(j);
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      auto& slot = out[static_cast<std::size_t>(ob.index_of(static_cast<Blade>(ba | bb)))];
      if (s > 0) {
        slot += a[i] * b[j];
      } else {
        slot -= a[i] * b[j];
      }
    }
  }
  return out;
}

/// Hodge star for the Euclidean metric; orientation -1 reverses the volume form.
template <class T>
KForm<T> hodge(const KForm<T>& a, int orientation = 1) {
  if (orientation != 1 && orientation != -1) throw PreconditionError("orientation must be +1 or -1");
  const int n = a.dim();
  const Blade full = static_cast<Blade>((1u << n) - 1u);
  KForm<T> out(n, n - a.degree());
  const auto& ob = out.basis();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ScalarTraits<T>::is_zero(a[i], 0.0)) continue;
    const Blade b = a.blade(i);
    const Blade c = static_cast<Blade>(full & ~b);
    const int s = wedge_sign(b, c) * orientation;
    auto& slot = out[static_cast<std::size_t>(ob.index_of(c))];
    slot = s > 0 ? a[i] : T(-a[i]);
  }
  return out;
}

/// Interior product v _| a, inserting v into the first slot.
template <class T>
KForm<T> contract(const Vector<T>& v, const KForm<T>& a) {
  if (static_cast<int>(v.size()) != a.dim()) throw PreconditionError("contract: dimension mismatch");
  if (a.degree() < 1) throw PreconditionError("contract: degree-0 input");
  KForm<T> out(a.dim(), a.degree() - 1);
  const auto& ob = out.basis();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ScalarTraits<T>::is_zero(a[i], 0.0)) continue;
    const Blade b = a.blade(i);
    int position = 0;
    for (int k = 0; k < a.dim(); ++k) {
      const Blade bit = static_cast<Blade>(1u << k);
      if (!(b & bit)) continue;
      if (!ScalarTraits<T>::is_zero(v[static_cast<std::size_t>(k)], 0.0)) {
        auto& slot = out[static_cast<std::size_t>(ob.index_of(static_cast<Blade>(b & ~bit)))];
        if (position % 2 == 0) {
          slot += v[static_cast<std::size_t>(k)] * a[i];
        } else {
          slot -= v[static_cast<std::size_t>(k)] * a[i];
        }
      }
      ++position;
    }
  }
  return out;
}

/// Inner product extending the Euclidean metric orthonormally to blades.
template <class T>
T inner(const KForm<T>& a, const KForm<T>& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw PreconditionError("inner: degree mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T norm2(const KForm<T>& a) {
  return inner(a, a);
}

template <class T>
KForm<T> flat(const Vector<T>& v) {
  const int n = static_cast<int>(v.size());
  KForm<T> out(n, 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
  return out;
}

template <class T>
Vector<T> sharp(const KForm<T>& a) {
  if (a.degree() != 1) throw PreconditionError("sharp: expects a 1-form");
  return Vector<T>(a.coeffs().begin(), a.coeffs().end());
}

/// a(v_1, ..., v_k).
template <class T>
T evaluate(const KForm<T>& a, std::span<const Vector<T>> vs) {
  if (static_cast<int>(vs.size()) != a.degree()) throw PreconditionError("evaluate: wrong number of arguments");
  if (a.degree() == 0) return a[0];
  KForm<T> cur = contract(vs[0], a);
  for (std::size_t i = 1; i < vs.size(); ++i) cur = contract(vs[i], cur);
  return cur[0];
}

template <class T>
T evaluate(const KForm<T>& a, std::initializer_list<Vector<T>> vs) {
  return evaluate(a, std::span<const Vector<T>>(vs.begin(), vs.size()));
}

/// Decomposable form v_1^flat ^ ... ^ v_k^flat.
template <class T>
KForm<T> wedge_of(std::span<const Vector<T>> vs, int dim) {
  KForm<T> out = KForm<T>::scalar(dim, T(1));
  for (const auto& v : vs) out = wedge(out, flat(v));
  return out;
}

/// Lifts a form on R^m to R^n by renumbering index i to slot_map[i-1] (1-based).
template <class T>
KForm<T> reindex(const KForm<T>& a, int new_dim, std::span<const int> slot_map) {
  KForm<T> out(new_dim, a.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ScalarTraits<T>::is_zero(a[i], 0.0)) continue;
    std::vector<int> idx;
    for (int k : blade_indices(a.blade(i))) idx.push_back(slot_map[static_cast<std::size_t>(k - 1)]);
    out += KForm<T>::monomial(new_dim, std::span<const int>(idx), a[i]);
  }
  return out;
}

}  // namespace cayley
