#pragma once

// Calibration values, Cayley tests, comass estimation and the standard
// Calabi-Yau data on C^4.
//
// C^4 uses interleaved real coordinates (x1, y1, x2, y2, x3, y3, x4, y4), so
// dx_k is slot 2k-1 and dy_k is slot 2k. omega = sum dx_k ^ dy_k,
// Omega = (dx1 + i dy1) ^ ... ^ (dx4 + i dy4), J d/dx = d/dy, J d/dy = -d/dx.

#include "cayley/g2.hpp"
#include "cayley/plane.hpp"
#include "cayley/spin7.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

inline constexpr double kTauGate = 1e-9;
inline constexpr double kComassTol = 1e-6;
inline constexpr double kCalibratedTol = 1e-6;

// ---------------------------------------------------------------------------
// Standard data on C^4

template <class T>
KForm<T> kahler_omega() {
  KForm<T> om(8, 2);
  for (int k = 1; k <= 4; ++k) om += KForm<T>::monomial(8, {2 * k - 1, 2 * k});
  return om;
}

namespace detail {

template <class T>
KForm<T> omega_part(bool real) {
  KForm<T> out(8, 4);
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> idx;
    int ny = 0;
    for (int k = 0; k < 4; ++k) {
      if (mask >> k & 1) {
        idx.push_back(2 * k + 2);
        ++ny;
      } else {
        idx.push_back(2 * k + 1);
      }
    }
    if ((ny % 2 == 0) != real) continue;
    // i^ny: real part (-1)^(ny/2), imaginary part (-1)^((ny-1)/2).
    const int r = ny % 4;
    const T c = (r == 0 || r == 1) ? T(1) : T(-1);
    out += KForm<T>::monomial(8, std::span<const int>(idx), c);
  }
  return out;
}

}  // namespace detail

template <class T>
KForm<T> re_Omega() {
  return detail::omega_part<T>(true);
}

template <class T>
KForm<T> im_Omega() {
  return detail::omega_part<T>(false);
}

template <class T>
Vector<T> complex_J(const Vector<T>& v) {
  if (v.size() != 8) throw PreconditionError("J acts on R^8 = C^4");
  Vector<T> out(8);
  for (std::size_t k = 0; k < 4; ++k) {
    out[2 * k] = -v[2 * k + 1];
    out[2 * k + 1] = v[2 * k];
  }
  return out;
}

/// omega ^ omega / 2.
template <class T>
KForm<T> wirtinger2() {
  const KForm<T> om = kahler_omega<T>();
  const T half = T(1) / T(2);
  return half * wedge(om, om);
}

/// -omega ^ omega / 2 + Re Omega.
template <class T>
KForm<T> spin7_sl_form() {
  return -wirtinger2<T>() + re_Omega<T>();
}

/// omega^4 = 3/2 Omega ^ conj(Omega), where Omega ^ conj(Omega) = Re^2 + Im^2.
template <class T>
bool omega_normalization_holds() {
  const KForm<T> om = kahler_omega<T>();
  const KForm<T> lhs = wedge(wedge(om, om), wedge(om, om));
  const KForm<T> re = re_Omega<T>();
  const KForm<T> im = im_Omega<T>();
  const T three_halves = T(3) / T(2);
  const KForm<T> rhs = three_halves * (wedge(re, re) + wedge(im, im));
  return (lhs - rhs).max_abs() <= (is_exact_v<T> ? 0.0 : 1e-12);
}

/// Special Lagrangian: omega and Im Omega both restrict to zero.
template <class T>
bool sl_test(const OrientedPlane<T>& V, double tol = 1e-9) {
  if (V.dim() != 8 || V.degree() != 4) throw PreconditionError("sl_test expects a 4-plane in R^8");
  const KForm<T> om = kahler_omega<T>();
  const KForm<T> im = im_Omega<T>();
  auto vanishes = [&](const T& x) { return is_exact_v<T> ? ScalarTraits<T>::is_zero(x, 0.0) : std::fabs(to_double(x)) <= tol; };
  if constexpr (is_exact_v<T>) {
    const auto& s = V.spans();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (!vanishes(evaluate(om, {s[i], s[j]}))) return false;
      }
    }
    return vanishes(evaluate_on_spans(im, V));
  } else {
    const auto& q = V.orthonormal();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (!vanishes(evaluate(om, {q[i], q[j]}))) return false;
      }
    }
    return vanishes(restrict_form(im, V));
  }
}

/// Complex: the plane is J-invariant.
template <class T>
bool complex_test(const OrientedPlane<T>& V, double tol = 1e-9) {
  if (V.dim() != 8 || V.degree() != 4) throw PreconditionError("complex_test expects a 4-plane in R^8");
  if constexpr (is_exact_v<T>) {
    Rows<T> rows = V.spans();
    for (const auto& v : V.spans()) rows.push_back(complex_J(v));
    return rank(rows) == 4;
  } else {
    const auto& q = V.orthonormal();
    // J v must have no component orthogonal to the plane.
    for (const auto& v : q) {
      Vector<double> w = complex_J(v);
      for (const auto& b : q) {
        const double c = dot(b, w);
        for (std::size_t i = 0; i < 8; ++i) w[i] -= c * b[i];
      }
      if (std::sqrt(dot(w, w)) > tol) return false;
    }
    return true;
  }
}

// ---------------------------------------------------------------------------
// Calibrations

template <class T>
struct CalibrationForm {
  KForm<T> form{8, 4};
  /// spin7 | spin7-sl | spin7-g2 | g2-assoc | g2-coassoc | wirtinger2 | re-omega | custom
  std::string name = "custom";
};

inline const std::vector<std::string>& builtin_form_names() {
  static const std::vector<std::string> names = {"spin7",    "spin7-sl",   "spin7-g2", "g2-assoc",
                                                 "g2-coassoc", "wirtinger2", "re-omega"};
  return names;
}

template <class T>
CalibrationForm<T> builtin_form(std::string_view name) {
  if (name == "spin7") return {phi0<T>(), "spin7"};
  if (name == "spin7-sl") return {spin7_sl_form<T>(), "spin7-sl"};
  if (name == "spin7-g2") return {spin7_from_g2(build_g2<T>()), "spin7-g2"};
  if (name == "g2-assoc") return {build_g2<T>().phi3, "g2-assoc"};
  if (name == "g2-coassoc") return {build_g2<T>().psi4, "g2-coassoc"};
  if (name == "wirtinger2") return {wirtinger2<T>(), "wirtinger2"};
  if (name == "re-omega") return {re_Omega<T>(), "re-omega"};
  throw InputError("unknown builtin form '" + std::string(name) + "'");
}

template <class T>
T calibration_value(const CalibrationForm<T>& c, const OrientedPlane<T>& V) {
  return restrict_form(c.form, V);
}

enum class CayleyVerdict { cayley_plus, cayley_minus, not_cayley };

inline std::string to_string(CayleyVerdict v) {
  switch (v) {
    case CayleyVerdict::cayley_plus:
      return "cayley+";
    case CayleyVerdict::cayley_minus:
      return "cayley-";
    case CayleyVerdict::not_cayley:
      return "not-cayley";
  }
  return "?";
}

template <class T>
struct CayleyResult {
  CayleyVerdict verdict = CayleyVerdict::not_cayley;
  /// |tau(u1, u2, u3, u4)| on an oriented orthonormal basis.
  double tau_norm = 0;
  /// Calibration value l with Phi|_V = l vol_V (floating approximation in exact mode).
  double value = 0;
  /// sign(l) l^2, exact in exact mode.
  T signed_square{};
  bool tau_vanishes = false;
  bool calibrated = false;
  /// Both criteria give the same answer.
  bool agree = false;
};

template <class T>
CayleyResult<T> cayley_test(const KForm<T>& phi, const OrientedPlane<T>& V, double tau_tol = kTauGate,
                            double cal_tol = kCalibratedTol) {
  if (V.dim() != 8 || V.degree() != 4) throw PreconditionError("cayley_test expects a 4-plane in R^8");
  CayleyResult<T> r;
  if constexpr (is_exact_v<T>) {
    const auto& s = V.spans();
    const KForm<T> t = tau(phi, s[0], s[1], s[2], s[3]);
    // tau is alternating, so tau on the spans is sqrt(Gram det) times tau on an orthonormal basis.
    r.tau_norm = std::sqrt(to_double(norm2(t) / V.gram_det()));
    r.tau_vanishes = t.is_zero(0.0);
    r.signed_square = restricted_square(phi, V);
    r.calibrated = r.signed_square == 1 || r.signed_square == -1;
    const double sq = to_double(r.signed_square);
    r.value = sq < 0 ? -std::sqrt(-sq) : std::sqrt(sq);
  } else {
    const auto& q = V.orthonormal();
    r.tau_norm = std::sqrt(norm2(tau(phi, q[0], q[1], q[2], q[3])));
    r.tau_vanishes = r.tau_norm <= tau_tol;
    r.value = restrict_form(phi, V);
    r.signed_square = r.value < 0 ? -r.value * r.value : r.value * r.value;
    r.calibrated = std::fabs(r.value) >= 1.0 - cal_tol;
  }
  r.agree = r.tau_vanishes == r.calibrated;
  if (r.tau_vanishes) r.verdict = r.value > 0 ? CayleyVerdict::cayley_plus : CayleyVerdict::cayley_minus;
  return r;
}

template <class T>
CayleyResult<T> cayley_test(const Spin7Model<T>& m, const OrientedPlane<T>& V, double tau_tol = kTauGate,
                            double cal_tol = kCalibratedTol) {
  return cayley_test(m.phi, V, tau_tol, cal_tol);
}

// ---------------------------------------------------------------------------
// Comass

struct ComassOptions {
  int restarts = 50;
  double tol = kComassTol;
  std::uint64_t seed = 1;
  int jobs = 1;
  int max_iterations = 500;
  int max_halvings = 40;
};

struct RestartOutcome {
  double value = 0;
  double grad_norm = 0;
  int iterations = 0;
  bool converged = false;
  std::vector<Vector<double>> frame;
};

struct ComassResult {
  double value = 0;
  /// Oriented orthonormal frame of the best plane found.
  std::vector<Vector<double>> argmax;
  int best_restart = 0;
  int restarts = 0;
  int converged_restarts = 0;
  /// The best restart hit the iteration cap before its gradient fell below tol.
  bool warning = false;
  double grad_norm = 0;
  int iterations = 0;
};

/// Single restart of Riemannian gradient ascent of V -> form|_V on orthonormal frames.
RestartOutcome comass_restart(const KForm<double>& form, const ComassOptions& opts, int restart_index);

/// Maximum of form|_V over oriented p-planes, by seeded multi-start ascent.
/// Deterministic for a given seed regardless of opts.jobs.
ComassResult comass_estimate(const KForm<double>& form, const ComassOptions& opts);

inline ComassResult comass_estimate(const CalibrationForm<double>& c, const ComassOptions& opts) {
  return comass_estimate(c.form, opts);
}

}  // namespace cayley
