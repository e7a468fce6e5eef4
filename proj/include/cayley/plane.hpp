#pragma once

#include "cayley/linalg.hpp"
#include "cayley/multivec.hpp"

#include <cmath>
#include <vector>

namespace cayley {

/// Pivot tolerance of floating-mode Gram-Schmidt on plane spans.
inline constexpr double kPlanePivotTol = 1e-10;

/// Oriented p-plane in R^n, oriented by the order of its spanning vectors.
template <class T>
class OrientedPlane {
 public:
  explicit OrientedPlane(std::vector<Vector<T>> spans) : spans_(std::move(spans)) {
    if (spans_.empty()) throw PreconditionError("plane needs at least one spanning vector");
    dim_ = static_cast<int>(spans_[0].size());
    if (dim_ < 1 || dim_ > kMaxDim) throw PreconditionError("plane ambient dimension must be in 1..8");
    if (static_cast<int>(spans_.size()) > dim_) throw DegeneratePlaneError("more spanning vectors than dimensions");
    for (const auto& v : spans_) {
      if (static_cast<int>(v.size()) != dim_) throw PreconditionError("spanning vectors differ in length");
    }
    gram_det_ = compute_gram_det();
    if constexpr (is_exact_v<T>) {
      if (gram_det_ == 0) throw DegeneratePlaneError("spanning vectors are linearly dependent");
    }
    orthonormal_ = gram_schmidt();
  }

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(spans_.size()); }
  const std::vector<Vector<T>>& spans() const { return spans_; }
  /// Orthonormal basis with the same orientation (floating point in both modes).
  const std::vector<Vector<double>>& orthonormal() const { return orthonormal_; }
  /// det of the Gram matrix of the spans.
  const T& gram_det() const { return gram_det_; }

  /// The same plane with reversed orientation (first two spans swapped, or the
  /// single span negated).
  OrientedPlane reversed() const {
    auto s = spans_;
    if (s.size() >= 2) {
      std::swap(s[0], s[1]);
    } else {
      s[0] = -s[0];
    }
    return OrientedPlane(std::move(s));
  }

 private:
  T compute_gram_det() const {
    const std::size_t p = spans_.size();
    Rows<T> g(p, Vector<T>(p));
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) g[i][j] = dot(spans_[i], spans_[j]);
    }
    // Determinant by elimination.
    T det(1);
    for (std::size_t c = 0; c < p; ++c) {
      std::size_t piv = c;
      if constexpr (is_exact_v<T>) {
        while (piv < p && g[piv][c] == 0) ++piv;
        if (piv == p) return T(0);
      } else {
        for (std::size_t i = c + 1; i < p; ++i) {
          if (std::fabs(g[i][c]) > std::fabs(g[piv][c])) piv = i;
        }
        if (g[piv][c] == 0.0) return T(0);
      }
      if (piv != c) {
        std::swap(g[piv], g[c]);
        det = -det;
      }
      det *= g[c][c];
      for (std::size_t i = c + 1; i < p; ++i) {
        const T f = g[i][c] / g[c][c];
        for (std::size_t j = c; j < p; ++j) g[i][j] -= f * g[c][j];
      }
    }
    return det;
  }

  std::vector<Vector<double>> gram_schmidt() const {
    std::vector<Vector<double>> out;
    for (std::size_t k = 0; k < spans_.size(); ++k) {
      Vector<double> w(spans_[k].size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = to_double(spans_[k][i]);
      const double scale = std::max(1.0, std::sqrt(dot(w, w)));
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : out) {
          const double c = dot(q, w);
          for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * q[i];
        }
      }
      const double nrm = std::sqrt(dot(w, w));
      if (nrm <= kPlanePivotTol * scale) {
        throw DegeneratePlaneError("pivot " + std::to_string(k + 1) + " below tolerance");
      }
      for (auto& x : w) x /= nrm;
      out.push_back(std::move(w));
    }
    return out;
  }

  int dim_ = 0;
  std::vector<Vector<T>> spans_;
  T gram_det_;
  std::vector<Vector<double>> orthonormal_;
};

/// Value of a on the spans themselves, a(v_1, ..., v_p).
template <class T>
T evaluate_on_spans(const KForm<T>& a, const OrientedPlane<T>& plane) {
  if (a.dim() != plane.dim() || a.degree() != plane.degree()) {
    throw PreconditionError("restrict: form degree " + std::to_string(a.degree()) + " does not match plane degree " +
                            std::to_string(plane.degree()));
  }
  return evaluate(a, std::span<const Vector<T>>(plane.spans()));
}

/// Signed square sign(l) * l^2 of the restriction a|_V = l vol_V; exact in exact mode.
template <class T>
T restricted_square(const KForm<T>& a, const OrientedPlane<T>& plane) {
  const T num = evaluate_on_spans(a, plane);
  const T sq = num * num / plane.gram_det();
  return num < 0 ? T(-sq) : sq;
}

/// l with a|_V = l vol_V. In exact mode the result must be rational; otherwise
/// a PreconditionError is raised (use restricted_square).
template <class T>
T restrict_form(const KForm<T>& a, const OrientedPlane<T>& plane) {
  if constexpr (is_exact_v<T>) {
    const T num = evaluate_on_spans(a, plane);
    if (num == 0) return T(0);
    const auto root = exact_sqrt(plane.gram_det());
    if (!root) throw PreconditionError("restriction is irrational for this spanning set (Gram determinant is not a square)");
    return num / *root;
  } else {
    if (a.dim() != plane.dim() || a.degree() != plane.degree()) {
      throw PreconditionError("restrict: form degree " + std::to_string(a.degree()) + " does not match plane degree " +
                              std::to_string(plane.degree()));
    }
    return evaluate(a, std::span<const Vector<double>>(plane.orthonormal()));
  }
}

}  // namespace cayley
