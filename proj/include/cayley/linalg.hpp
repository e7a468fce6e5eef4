#pragma once

// Small dense linear algebra shared by the exact and floating modes:
// rank, kernels and spanning bases by Gaussian elimination (exact) or SVD and
// modified Gram-Schmidt (floating).

#include "cayley/multivec.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace cayley {

/// Row-major dense matrix as a list of rows.
template <class T>
using Rows = std::vector<Vector<T>>;

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Rows<T>& a, double tol) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t m = a.size();
  const std::size_t n = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t best = r;
    if constexpr (is_exact_v<T>) {
      while (best < m && a[best][c] == 0) ++best;
      if (best == m) continue;
    } else {
      for (std::size_t i = r + 1; i < m; ++i) {
        if (std::fabs(a[i][c]) > std::fabs(a[best][c])) best = i;
      }
      if (std::fabs(a[best][c]) <= tol) continue;
    }
    std::swap(a[r], a[best]);
    const T inv = T(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || ScalarTraits<T>::is_zero(a[i][c], 0.0)) continue;
      const T f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline Eigen::MatrixXd to_eigen(const Rows<double>& a, std::size_t cols) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j];
  }
  return m;
}

}  // namespace detail

/// Basis of {x : A x = 0} for A given by rows with `cols` columns.
/// Floating mode returns an orthonormal basis (singular values at or below tol count as zero).
template <class T>
std::vector<Vector<T>> nullspace(const Rows<T>& rows, std::size_t cols, double tol = 1e-9) {
  std::vector<Vector<T>> out;
  if constexpr (is_exact_v<T>) {
    Rows<T> a = rows;
    const auto pivots = detail::rref(a, 0.0);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      Vector<T> v(cols, T(0));
      v[free] = T(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
      out.push_back(std::move(v));
    }
  } else {
    if (rows.empty()) {
      for (std::size_t i = 0; i < cols; ++i) {
        Vector<T> v(cols, 0.0);
        v[i] = 1.0;
        out.push_back(std::move(v));
      }
      return out;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(detail::to_eigen(rows, cols), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > tol) ++r;
    }
    for (Eigen::Index i = r; i < static_cast<Eigen::Index>(cols); ++i) {
      Vector<T> v(cols);
      for (std::size_t j = 0; j < cols; ++j) v[j] = svd.matrixV()(static_cast<Eigen::Index>(j), i);
      out.push_back(std::move(v));
    }
  }
  return out;
}

template <class T>
std::size_t rank(const Rows<T>& rows, double tol = 1e-9) {
  if (rows.empty()) return 0;
  Rows<T> a = rows;
  if constexpr (is_exact_v<T>) {
    return detail::rref(a, 0.0).size();
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(detail::to_eigen(a, a[0].size()));
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > tol) ++r;
    }
    return r;
  }
}

/// Modified Gram-Schmidt in the given order; vectors whose residual norm falls
/// below tol are dropped.
inline std::vector<Vector<double>> orthonormalize(const std::vector<Vector<double>>& vs, double tol = 1e-10) {
  std::vector<Vector<double>> out;
  for (const auto& v : vs) {
    Vector<double> w = v;
    for (const auto& q : out) {
      const double c = dot(q, w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * q[i];
    }
    // Second pass keeps orthogonality at machine precision.
    for (const auto& q : out) {
      const double c = dot(q, w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * q[i];
    }
    const double nrm = std::sqrt(dot(w, w));
    if (nrm <= tol) continue;
    for (auto& x : w) x /= nrm;
    out.push_back(std::move(w));
  }
  return out;
}

/// A maximal linearly independent subset, chosen greedily in the given order.
template <class T>
std::vector<Vector<T>> independent_subset(const std::vector<Vector<T>>& vs, double tol = 1e-9) {
  std::vector<Vector<T>> out;
  for (const auto& v : vs) {
    out.push_back(v);
    if (rank(out, tol) < out.size()) out.pop_back();
  }
  return out;
}

/// Coefficients of a form or vector list as matrix rows.
template <class T>
Rows<T> form_rows(const std::vector<KForm<T>>& forms) {
  Rows<T> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.emplace_back(f.coeffs().begin(), f.coeffs().end());
  return out;
}

template <class T>
KForm<T> form_from_coeffs(int dim, int degree, const Vector<T>& c) {
  KForm<T> out(dim, degree);
  if (c.size() != out.size()) throw PreconditionError("coefficient count does not match blade basis");
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
  return out;
}

}  // namespace cayley
