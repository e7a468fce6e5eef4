#pragma once

// Pointwise Spin(7) linear algebra on R^8.

#include "cayley/linalg.hpp"
#include "cayley/multivec.hpp"
#include "cayley/plane.hpp"

#include <Eigen/Dense>

#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace cayley {

/// Eigenvalue clustering tolerance for floating-mode splittings.
inline constexpr double kSpectrumTol = 1e-8;

/// The standard Spin(7) 4-form
///   e1234 + e1256 - e1278 + e1357 + e1368 + e1458 - e1467
///   - e2358 + e2367 + e2457 + e2468 - e3456 + e3478 + e5678.
template <class T>
KForm<T> phi0() {
  static const int terms[14][5] = {
      {1, 2, 3, 4, +1}, {1, 2, 5, 6, +1}, {1, 2, 7, 8, -1}, {1, 3, 5, 7, +1}, {1, 3, 6, 8, +1},
      {1, 4, 5, 8, +1}, {1, 4, 6, 7, -1}, {2, 3, 5, 8, -1}, {2, 3, 6, 7, +1}, {2, 4, 5, 7, +1},
      {2, 4, 6, 8, +1}, {3, 4, 5, 6, -1}, {3, 4, 7, 8, +1}, {5, 6, 7, 8, +1},
  };
  KForm<T> phi(8, 4);
  for (const auto& t : terms) phi += KForm<T>::monomial(8, {t[0], t[1], t[2], t[3]}, T(t[4]));
  return phi;
}

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of the necessary-condition test for a candidate Spin(7) 4-form.
/// Passing does not prove membership in the GL(8) orbit of phi0.
struct Spin7Certificate {
  bool passed = true;
  std::vector<CertificateCheck> checks;

  std::string first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return c.name + ": " + c.detail;
    }
    return {};
  }
};

class Spin7FormError : public PreconditionError {
 public:
  explicit Spin7FormError(Spin7Certificate cert)
      : PreconditionError("not a Spin(7) form (" + cert.first_failure() + ")"), certificate(std::move(cert)) {}
  Spin7Certificate certificate;
};

template <class T>
struct Spin7Model {
  KForm<T> phi{8, 4};
  /// Bases of the -3 and +1 eigenspaces of a -> *(a ^ phi) on 2-forms.
  /// Orthonormal in floating mode; exact kernel bases in exact mode.
  std::vector<KForm<T>> lambda2_7;
  std::vector<KForm<T>> lambda2_21;
  /// Bases of the 4-form summands of dimensions 1, 7, 27, 35, in that order.
  std::array<std::vector<KForm<T>>, 4> lambda4;
};

/// Matrix (as rows) of a -> *(a ^ phi) on the 28 blades of 2-forms.
template <class T>
Rows<T> lambda2_operator(const KForm<T>& phi) {
  const auto& b2 = BladeBasis::get(8, 2);
  Rows<T> m(b2.size(), Vector<T>(b2.size(), T(0)));
  for (std::size_t j = 0; j < b2.size(); ++j) {
    KForm<T> e(8, 2);
    e[j] = T(1);
    const KForm<T> img = hodge(wedge(e, phi));
    for (std::size_t i = 0; i < b2.size(); ++i) m[i][j] = img[i];
  }
  return m;
}

/// The generator w^flat ^ (v _| phi) - v^flat ^ (w _| phi).
template <class T>
KForm<T> lambda4_7_generator(const KForm<T>& phi, const Vector<T>& v, const Vector<T>& w) {
  return wedge(flat(w), contract(v, phi)) - wedge(flat(v), contract(w, phi));
}

namespace detail {

template <class T>
Rows<T> shifted(Rows<T> m, const T& s) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= s;
  return m;
}

template <class T>
std::vector<KForm<T>> as_forms(const std::vector<Vector<T>>& vs, int degree) {
  std::vector<KForm<T>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(form_from_coeffs(8, degree, v));
  return out;
}

template <class T>
bool form_equal(const KForm<T>& a, const KForm<T>& b, double tol) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return (a - b).max_abs() <= tol;
  }
}

inline std::string fmt_dims(const std::vector<std::size_t>& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  os << ")";
  return os.str();
}

template <class T>
void analyze_spin7(const KForm<T>& phi, Spin7Certificate& cert, Spin7Model<T>* model) {
  auto add = [&](std::string name, bool ok, std::string detail) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
    cert.passed = cert.passed && ok;
  };
  if (phi.dim() != 8 || phi.degree() != 4) {
    add("shape", false, "expected a 4-form on R^8");
    return;
  }
  const double tol = is_exact_v<T> ? 0.0 : 1e-10;

  const bool self_dual = form_equal(hodge(phi), phi, tol);
  add("self-dual", self_dual, self_dual ? "*phi = phi" : "*phi differs from phi");

  const T n2 = norm2(phi);
  const bool norm_ok = ScalarTraits<T>::near(n2, T(14), tol);
  add("norm", norm_ok, "<phi,phi> = " + std::to_string(to_double(n2)));

  // Lambda^2 spectrum.
  const Rows<T> L = lambda2_operator(phi);
  std::vector<Vector<T>> k7;
  std::vector<Vector<T>> k21;
  std::string spectrum_detail;
  bool spectrum_ok = false;
  if constexpr (is_exact_v<T>) {
    k7 = nullspace(shifted(L, T(-3)), 28);
    k21 = nullspace(shifted(L, T(1)), 28);
    spectrum_ok = k7.size() == 7 && k21.size() == 21;
    spectrum_detail = "dim ker(L+3) = " + std::to_string(k7.size()) + ", dim ker(L-1) = " + std::to_string(k21.size());
  } else {
    Eigen::MatrixXd m = detail::to_eigen(L, 28);
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
    const auto& ev = es.eigenvalues();
    std::size_t n_minus3 = 0;
    std::size_t n_plus1 = 0;
    std::size_t other = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      Vector<double> col(28);
      for (int r = 0; r < 28; ++r) col[static_cast<std::size_t>(r)] = es.eigenvectors()(r, i);
      if (std::fabs(ev(i) + 3.0) <= kSpectrumTol) {
        ++n_minus3;
        k7.push_back(std::move(col));
      } else if (std::fabs(ev(i) - 1.0) <= kSpectrumTol) {
        ++n_plus1;
        k21.push_back(std::move(col));
      } else {
        ++other;
      }
    }
    spectrum_ok = asym <= 1e-10 && n_minus3 == 7 && n_plus1 == 21 && other == 0;
    std::ostringstream os;
    os << "eigenvalue -3 x" << n_minus3 << ", +1 x" << n_plus1 << ", other x" << other;
    if (other > 0) os << " (range " << ev.minCoeff() << " .. " << ev.maxCoeff() << ")";
    spectrum_detail = os.str();
  }
  add("lambda2-spectrum", spectrum_ok, spectrum_detail);

  // Lambda^4 summands.
  std::vector<KForm<T>> gens;
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) {
      gens.push_back(lambda4_7_generator(phi, basis_vector<T>(8, i), basis_vector<T>(8, j)));
    }
  }
  std::vector<Vector<T>> l7;
  if constexpr (is_exact_v<T>) {
    l7 = independent_subset(form_rows(gens));
  } else {
    l7 = orthonormalize(form_rows(gens), 1e-9);
  }

  const auto& b4 = BladeBasis::get(8, 4);
  Rows<T> star(b4.size(), Vector<T>(b4.size(), T(0)));
  for (std::size_t j = 0; j < b4.size(); ++j) {
    KForm<T> e(8, 4);
    e[j] = T(1);
    const KForm<T> s = hodge(e);
    for (std::size_t i = 0; i < b4.size(); ++i) star[i][j] = s[i];
  }
  auto l35 = nullspace(shifted(star, T(-1)), 70);
  Rows<T> sys = shifted(star, T(1));
  sys.emplace_back(phi.coeffs().begin(), phi.coeffs().end());
  for (const auto& v : l7) sys.push_back(v);
  auto l27 = nullspace(sys, 70);

  std::vector<Vector<T>> l1;
  if (!phi.is_zero()) {
    Vector<T> p(phi.coeffs().begin(), phi.coeffs().end());
    if constexpr (!is_exact_v<T>) {
      const double nrm = std::sqrt(dot(p, p));
      for (auto& x : p) x /= nrm;
    }
    l1.push_back(std::move(p));
  }
  const std::vector<std::size_t> dims = {l1.size(), l7.size(), l27.size(), l35.size()};
  bool dims_ok = dims == std::vector<std::size_t>{1, 7, 27, 35};
  std::string dims_detail = "summand dims " + fmt_dims(dims);
  if (dims_ok) {
    // Pairwise orthogonality of the four summands.
    const std::vector<const std::vector<Vector<T>>*> parts = {&l1, &l7, &l27, &l35};
    double worst = 0;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        for (const auto& x : *parts[a]) {
          for (const auto& y : *parts[b]) worst = std::max(worst, to_double(ScalarTraits<T>::abs(dot(x, y))));
        }
      }
    }
    if (worst > (is_exact_v<T> ? 0.0 : 1e-9)) {
      dims_ok = false;
      dims_detail += ", summands not orthogonal (max overlap " + std::to_string(worst) + ")";
    }
  }
  add("lambda4-dims", dims_ok, dims_detail);

  if (model && cert.passed) {
    model->phi = phi;
    model->lambda2_7 = as_forms(k7, 2);
    model->lambda2_21 = as_forms(k21, 2);
    model->lambda4[0] = as_forms(l1, 4);
    model->lambda4[1] = as_forms(l7, 4);
    model->lambda4[2] = as_forms(l27, 4);
    model->lambda4[3] = as_forms(l35, 4);
  }
}

}  // namespace detail

/// Necessary conditions for phi to be a Spin(7) form: self-duality, norm 14,
/// Lambda^2 spectrum {-3 (x7), +1 (x21)} and Lambda^4 dims (1, 7, 27, 35).
template <class T>
Spin7Certificate is_spin7_form(const KForm<T>& phi) {
  Spin7Certificate cert;
  detail::analyze_spin7<T>(phi, cert, nullptr);
  return cert;
}

/// Builds the model or throws Spin7FormError carrying the failed certificate.
template <class T>
Spin7Model<T> build_model(const KForm<T>& phi) {
  Spin7Certificate cert;
  Spin7Model<T> model;
  detail::analyze_spin7<T>(phi, cert, &model);
  if (!cert.passed) throw Spin7FormError(std::move(cert));
  return model;
}

// ---------------------------------------------------------------------------
// Cross products. These only need the 4-form, so they take it directly.

/// pi_7(a) = (a - *(a ^ phi)) / 4.
template <class T>
KForm<T> proj2_7(const KForm<T>& phi, const KForm<T>& a) {
  if (a.dim() != 8 || a.degree() != 2) throw PreconditionError("proj2_7 expects a 2-form on R^8");
  const T quarter = T(1) / T(4);
  return quarter * (a - hodge(wedge(a, phi)));
}

template <class T>
KForm<T> proj2_21(const KForm<T>& phi, const KForm<T>& a) {
  return a - proj2_7(phi, a);
}

/// v x w = (v^flat ^ w^flat - *(v^flat ^ w^flat ^ phi)) / 2 = 2 pi_7(v^flat ^ w^flat).
template <class T>
KForm<T> cross2(const KForm<T>& phi, const Vector<T>& v, const Vector<T>& w) {
  const KForm<T> vw = wedge(flat(v), flat(w));
  const T half = T(1) / T(2);
  return half * (vw - hodge(wedge(vw, phi)));
}

/// u x v x w = (u _| (v _| (w _| phi)))^sharp.
template <class T>
Vector<T> cross3(const KForm<T>& phi, const Vector<T>& u, const Vector<T>& v, const Vector<T>& w) {
  return sharp(contract(u, contract(v, contract(w, phi))));
}

/// tau(a,b,c,d) = -a x (b x c x d) + g(a,b) c x d + g(a,c) d x b + g(a,d) b x c.
template <class T>
KForm<T> tau(const KForm<T>& phi, const Vector<T>& a, const Vector<T>& b, const Vector<T>& c, const Vector<T>& d) {
  KForm<T> out = -cross2(phi, a, cross3(phi, b, c, d));
  out += dot(a, b) * cross2(phi, c, d);
  out += dot(a, c) * cross2(phi, d, b);
  out += dot(a, d) * cross2(phi, b, c);
  return out;
}

template <class T>
KForm<T> proj2_7(const Spin7Model<T>& m, const KForm<T>& a) {
  return proj2_7(m.phi, a);
}
template <class T>
KForm<T> proj2_21(const Spin7Model<T>& m, const KForm<T>& a) {
  return proj2_21(m.phi, a);
}
template <class T>
KForm<T> cross2(const Spin7Model<T>& m, const Vector<T>& v, const Vector<T>& w) {
  return cross2(m.phi, v, w);
}
template <class T>
Vector<T> cross3(const Spin7Model<T>& m, const Vector<T>& u, const Vector<T>& v, const Vector<T>& w) {
  return cross3(m.phi, u, v, w);
}
template <class T>
KForm<T> tau(const Spin7Model<T>& m, const Vector<T>& a, const Vector<T>& b, const Vector<T>& c, const Vector<T>& d) {
  return tau(m.phi, a, b, c, d);
}

// ---------------------------------------------------------------------------
// Frames

template <class T>
using Frame8 = std::array<Vector<T>, 8>;

template <class T>
Frame8<T> standard_frame() {
  Frame8<T> f;
  for (int i = 0; i < 8; ++i) f[static_cast<std::size_t>(i)] = basis_vector<T>(8, i + 1);
  return f;
}

struct FrameReport {
  bool is_frame = false;
  bool orthonormal = false;
  /// Largest deviation of the pullback coefficients from the normal form.
  double max_deviation = 0;
  std::string detail;
};

/// Pullback of phi through the frame: the 4-form with coefficients phi(f_i, f_j, f_k, f_l).
template <class T>
KForm<T> pullback(const KForm<T>& phi, const Frame8<T>& f) {
  KForm<T> out(8, 4);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const auto idx = blade_indices(out.blade(n));
    out[n] = evaluate(phi, {f[static_cast<std::size_t>(idx[0] - 1)], f[static_cast<std::size_t>(idx[1] - 1)],
                            f[static_cast<std::size_t>(idx[2] - 1)], f[static_cast<std::size_t>(idx[3] - 1)]});
  }
  return out;
}

/// True iff phi pulled back through f is the normal form phi0.
template <class T>
FrameReport is_spin7_frame(const KForm<T>& phi, const Frame8<T>& f, double tol = 1e-10) {
  FrameReport rep;
  for (const auto& v : f) {
    if (v.size() != 8) throw PreconditionError("frame vectors must lie in R^8");
  }
  double ortho_dev = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const T target = i == j ? T(1) : T(0);
      ortho_dev = std::max(ortho_dev, to_double(ScalarTraits<T>::abs(dot(f[i], f[j]) - target)));
    }
  }
  rep.orthonormal = is_exact_v<T> ? ortho_dev == 0 : ortho_dev <= tol;
  const KForm<T> diff = pullback(phi, f) - phi0<T>();
  rep.max_deviation = diff.max_abs();
  rep.is_frame = is_exact_v<T> ? diff.is_zero(0.0) : rep.max_deviation <= tol;
  std::ostringstream os;
  os << "pullback deviation " << rep.max_deviation << ", orthonormality deviation " << ortho_dev;
  rep.detail = os.str();
  return rep;
}

template <class T>
FrameReport is_spin7_frame(const Spin7Model<T>& m, const Frame8<T>& f, double tol = 1e-10) {
  return is_spin7_frame(m.phi, f, tol);
}

/// (e1, ..., e8) with e4 = -e1xe2xe3, e6 = -e1xe2xe5, e7 = -e1xe3xe5, e8 = e2xe3xe5.
template <class T>
Frame8<T> complete_frame(const KForm<T>& phi, const Vector<T>& e1, const Vector<T>& e2, const Vector<T>& e3,
                         const Vector<T>& e5, double tol = 1e-10) {
  for (const auto* v : {&e1, &e2, &e3, &e5}) {
    if (v->size() != 8) throw PreconditionError("complete_frame: vectors must lie in R^8");
  }
  auto check = [&](const T& value, const T& target, const std::string& what) {
    const bool ok = is_exact_v<T> ? value == target : std::fabs(to_double(value) - to_double(target)) <= tol;
    if (!ok) throw PreconditionError("complete_frame: " + what + " fails (value " + std::to_string(to_double(value)) + ")");
  };
  check(dot(e1, e1), T(1), "|e1| = 1");
  check(dot(e2, e2), T(1), "|e2| = 1");
  check(dot(e3, e3), T(1), "|e3| = 1");
  check(dot(e5, e5), T(1), "|e5| = 1");
  check(dot(e1, e2), T(0), "e1 orthogonal to e2");
  check(dot(e1, e3), T(0), "e1 orthogonal to e3");
  check(dot(e2, e3), T(0), "e2 orthogonal to e3");
  check(dot(e5, e1), T(0), "e5 orthogonal to e1");
  check(dot(e5, e2), T(0), "e5 orthogonal to e2");
  check(dot(e5, e3), T(0), "e5 orthogonal to e3");
  const Vector<T> e4 = -cross3(phi, e1, e2, e3);
  check(dot(e5, e4), T(0), "e5 orthogonal to e1 x e2 x e3");
  return Frame8<T>{e1, e2, e3, e4, e5, -cross3(phi, e1, e2, e5), -cross3(phi, e1, e3, e5), cross3(phi, e2, e3, e5)};
}

template <class T>
Frame8<T> complete_frame(const Spin7Model<T>& m, const Vector<T>& e1, const Vector<T>& e2, const Vector<T>& e3,
                         const Vector<T>& e5, double tol = 1e-10) {
  return complete_frame(m.phi, e1, e2, e3, e5, tol);
}

}  // namespace cayley
