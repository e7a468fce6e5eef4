#include "cayley/verify.hpp"

#include "cayley/calib.hpp"
#include "cayley/dirac.hpp"
#include "cayley/g2.hpp"
#include "cayley/spin7.hpp"

#include <cmath>
#include <deque>
#include <optional>
#include <random>

namespace cayley {

namespace {

template <class T>
class Suite {
 public:
  explicit Suite(double tol) : tol_(tol) {}

  IdentityCheck& open(const std::string& name) {
    checks_.push_back({name, true, 0, 0.0, {}});
    return checks_.back();
  }

  // Records one case of `name`; a nonzero difference fails it in exact mode.
  void record(IdentityCheck& c, double residual, bool exact_zero) {
    ++c.cases;
    c.max_residual = std::max(c.max_residual, residual);
    const bool ok = is_exact_v<T> ? exact_zero : residual <= tol_;
    if (!ok && c.passed) {
      c.passed = false;
      if (c.detail.empty()) c.detail = "first failure at case " + std::to_string(c.cases);
    }
  }

  void form_case(IdentityCheck& c, const KForm<T>& diff) { record(c, diff.max_abs(), diff.is_zero(0.0)); }
  void vector_case(IdentityCheck& c, const Vector<T>& diff) {
    const double r = max_abs(diff);
    bool zero = true;
    for (const auto& x : diff) zero = zero && x == T(0);
    record(c, r, zero);
  }
  void scalar_case(IdentityCheck& c, const T& diff) {
    record(c, to_double(ScalarTraits<T>::abs(diff)), diff == T(0));
  }
  void flag(IdentityCheck& c, bool ok, const std::string& detail) {
    ++c.cases;
    if (!ok) {
      c.passed = false;
      if (c.detail.empty()) c.detail = detail;
    }
  }

  SuiteReport finish(std::string mode) {
    report_.mode = std::move(mode);
    report_.passed = true;
    report_.checks.assign(checks_.begin(), checks_.end());
    for (const auto& c : report_.checks) {
      report_.passed = report_.passed && c.passed;
      report_.max_residual = std::max(report_.max_residual, c.max_residual);
    }
    return std::move(report_);
  }

 private:
  double tol_;
  // Checks are handed out by reference, so the storage must not relocate.
  std::deque<IdentityCheck> checks_;
  SuiteReport report_;
};

Vector<double> gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

// Random Spin(7) frame by completing random e1, e2, e3, e5.
Frame8<double> random_spin7_frame(const KForm<double>& phi, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Vector<double>> seed;
    for (int i = 0; i < 3; ++i) seed.push_back(gaussian(rng, 8));
    auto q = orthonormalize(seed, 1e-6);
    if (q.size() != 3) continue;
    q.push_back(cross3(phi, q[0], q[1], q[2]));
    q.push_back(gaussian(rng, 8));
    auto full = orthonormalize(q, 1e-6);
    if (full.size() != 5) continue;
    return complete_frame(phi, full[0], full[1], full[2], full[4], 1e-8);
  }
}

template <class T>
void cross_identities(Suite<T>& s, const KForm<T>& phi, const std::vector<std::array<Vector<T>, 4>>& quads) {
  // h(a x b, c x d) = -phi(a, b, c, d) + g(a, c) g(b, d) - g(a, d) g(b, c).
  auto& inner2 = s.open("inner-cross-2");
  for (const auto& [a, b, c, d] : quads) {
    const T lhs = inner(cross2(phi, a, b), cross2(phi, c, d));
    const T rhs = -evaluate(phi, {a, b, c, d}) + dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c);
    s.scalar_case(inner2, lhs - rhs);
  }
  auto& norms = s.open("cross-norms");
  for (const auto& [a, b, c, d] : quads) {
    (void)d;
    s.scalar_case(norms, norm2(cross2(phi, a, b)) - norm2(wedge(flat(a), flat(b))));
    const Vector<T> t = cross3(phi, a, b, c);
    s.scalar_case(norms, dot(t, t) - norm2(wedge(wedge(flat(a), flat(b)), flat(c))));
  }
}

template <class T>
void tau_identity(Suite<T>& s, const KForm<T>& phi, const std::vector<std::pair<Vector<T>, Vector<T>>>& pairs) {
  // tau on the 70 basis 4-tuples, then h(tau, v x w) as a 4-form.
  const auto& b4 = BladeBasis::get(8, 4);
  std::vector<KForm<T>> tau_basis;
  for (std::size_t n = 0; n < b4.size(); ++n) {
    const auto idx = blade_indices(b4.blade(n));
    tau_basis.push_back(tau(phi, basis_vector<T>(8, idx[0]), basis_vector<T>(8, idx[1]), basis_vector<T>(8, idx[2]),
                            basis_vector<T>(8, idx[3])));
  }
  auto& c = s.open("inner-tau");
  for (const auto& [v, w] : pairs) {
    const KForm<T> vw = cross2(phi, v, w);
    KForm<T> lhs(8, 4);
    for (std::size_t n = 0; n < b4.size(); ++n) lhs[n] = inner(tau_basis[n], vw);
    s.form_case(c, lhs - lambda4_7_generator(phi, v, w));
  }
}

template <class T>
void table_identity(Suite<T>& s, const KForm<T>& phi) {
  // Rows of the cross product table: the first product equals sign * each other.
  struct Entry {
    int i, j, sign;
  };
  const Entry rows[4][4] = {{{1, 5, 1}, {2, 6, 1}, {3, 7, 1}, {4, 8, 1}},
                            {{1, 6, 1}, {2, 5, -1}, {3, 8, 1}, {4, 7, -1}},
                            {{1, 7, 1}, {2, 8, -1}, {3, 5, -1}, {4, 6, 1}},
                            {{1, 8, 1}, {2, 7, 1}, {3, 6, -1}, {4, 5, -1}}};
  auto e = [](int i) { return basis_vector<T>(8, i); };
  auto& c = s.open("cross-product-table");
  for (const auto& row : rows) {
    const KForm<T> first = cross2(phi, e(row[0].i), e(row[0].j));
    for (int k = 1; k < 4; ++k) {
      const KForm<T> other = cross2(phi, e(row[k].i), e(row[k].j));
      s.form_case(c, row[k].sign > 0 ? first - other : first + other);
    }
  }
}

template <class T>
void frame_identities(Suite<T>& s, const KForm<T>& phi) {
  auto e = [](int i) { return basis_vector<T>(8, i); };
  auto& c4 = s.open("e4-triple-product");
  s.vector_case(c4, e(4) + cross3(phi, e(1), e(2), e(3)));
  auto& cf = s.open("frame-completion");
  try {
    const Frame8<T> f = complete_frame(phi, e(1), e(2), e(3), e(5));
    const FrameReport rep = is_spin7_frame(phi, f);
    s.record(cf, rep.max_deviation, rep.is_frame);
    for (std::size_t i = 0; i < 8; ++i) s.vector_case(cf, f[i] - e(static_cast<int>(i) + 1));
  } catch (const PreconditionError& ex) {
    s.flag(cf, false, ex.what());
  }
}

// Cross products restricted to T and N at the plane spanned by f[0..3].
template <class T>
void restriction_identities(Suite<T>& s, const KForm<T>& phi, const Frame8<T>& f, IdentityCheck& in_e,
                            IdentityCheck& orth_e, IdentityCheck& triple, IdentityCheck& rank_e) {
  const std::array<Vector<T>, 4> t{f[0], f[1], f[2], f[3]};
  const std::array<Vector<T>, 4> n{f[4], f[5], f[6], f[7]};
  std::vector<KForm<T>> e_forms;
  for (const auto& u : t) {
    for (const auto& v : n) {
      const KForm<T> x = cross2(phi, u, v);
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) s.scalar_case(in_e, evaluate(x, {t[a], t[b]}));
      }
      e_forms.push_back(x);
    }
  }
  std::size_t r = 0;
  if constexpr (is_exact_v<T>) {
    r = rank(form_rows(e_forms));
  } else {
    r = orthonormalize(form_rows(e_forms), 1e-8).size();
  }
  s.flag(rank_e, r == 4, "rank of T x N is " + std::to_string(r));
  for (const auto* side : {&t, &n}) {
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        const KForm<T> x = cross2(phi, (*side)[a], (*side)[b]);
        for (const auto& y : e_forms) s.scalar_case(orth_e, inner(x, y));
      }
    }
  }
  // u x v x w lies in T or N according to the parity of normal factors.
  auto component = [&](const Vector<T>& x, const std::array<Vector<T>, 4>& away) {
    Vector<T> c(4);
    for (std::size_t i = 0; i < 4; ++i) c[i] = dot(x, away[i]);
    return c;
  };
  std::array<Vector<T>, 8> all{t[0], t[1], t[2], t[3], n[0], n[1], n[2], n[3]};
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = a + 1; b < 8; ++b) {
      for (std::size_t c = b + 1; c < 8; ++c) {
        const int normals = (a >= 4) + (b >= 4) + (c >= 4);
        const Vector<T> x = cross3(phi, all[a], all[b], all[c]);
        s.vector_case(triple, component(x, normals % 2 == 0 ? n : t));
      }
    }
  }
}

void pointwise_symbol_checks(Suite<double>& s, const Spin7Model<double>& m, const std::vector<Frame8<double>>& frames,
                             double tol) {
  auto& sub = s.open("lambda2-7-splitting");
  auto& cl = s.open("clifford-relation");
  for (const auto& f : frames) {
    try {
      const OrientedPlane<double> plane(std::vector<Vector<double>>{f[0], f[1], f[2], f[3]});
      const CayleyPointModel cm = build_cayley_model(m, plane, {f[4], f[5], f[6], f[7]});
      const SubbundleReport rep = check_subbundle(cm);
      s.record(sub, rep.E_residual, false);
      s.record(sub, rep.embedding_residual, false);
      s.record(sub, std::fabs(rep.embedding_scale - std::sqrt(2.0)), false);
      s.record(sub, rep.orthogonality, false);
      s.flag(sub, rep.dim_E == 4 && rep.image_dim == 3 && cm.kernel_dim == 4,
             "dims E " + std::to_string(rep.dim_E) + ", image " + std::to_string(rep.image_dim) + ", kernel " +
                 std::to_string(cm.kernel_dim));
      const CliffordReport c = clifford_check(cm, 16, 7, tol);
      s.record(cl, c.max_residual, false);
    } catch (const PreconditionError& ex) {
      s.flag(sub, false, ex.what());
      s.flag(cl, false, ex.what());
    }
  }
}

template <class T>
void fixed_identities(Suite<T>& s) {
  auto& g2 = s.open("g2-hodge");
  try {
    const G2Model<T> m = build_g2<T>();
    s.form_case(g2, hodge(m.phi3) - m.psi4);
    auto& sp = s.open("spin7-from-g2");
    s.form_case(sp, spin7_from_g2(m) - phi0<T>());
    auto& eq = s.open("h-equivariance");
    const std::array<Vector<T>, 3> t{basis_vector<T>(7, 1), basis_vector<T>(7, 2), basis_vector<T>(7, 3)};
    const auto am = make_associative_model(m, t, basis_vector<T>(7, 4));
    const EquivarianceReport rep = h_equivariance_check(am);
    s.record(eq, rep.max_residual, rep.passed);
  } catch (const Error& ex) {
    s.flag(g2, false, ex.what());
  }
  auto& om = s.open("omega-normalization");
  s.flag(om, omega_normalization_holds<T>(), "omega^4 differs from 3/2 Omega ^ conj(Omega)");
  auto& sl = s.open("sl-form-is-spin7");
  const Spin7Certificate cert = is_spin7_form(spin7_sl_form<T>());
  s.flag(sl, cert.passed, cert.first_failure());
}

template <class T>
std::optional<Spin7Model<T>> certificate_checks(Suite<T>& s, const KForm<T>& phi) {
  Spin7Certificate cert;
  Spin7Model<T> model;
  detail::analyze_spin7<T>(phi, cert, &model);
  for (const auto& c : cert.checks) {
    auto& chk = s.open("spin7-form/" + c.name);
    s.flag(chk, c.passed, c.detail);
    if (c.passed) chk.detail = c.detail;
  }
  auto& ww = s.open("phi-wedge-phi");
  if (phi.dim() == 8 && phi.degree() == 4) {
    s.form_case(ww, wedge(phi, phi) - T(14) * KForm<T>::volume(8));
  } else {
    s.flag(ww, false, "not a 4-form on R^8");
  }
  if (!cert.passed) return std::nullopt;
  return model;
}

template <class T>
void lambda4_7_membership(Suite<T>& s, const Spin7Model<T>& m, const std::vector<std::pair<Vector<T>, Vector<T>>>& pairs) {
  auto& c = s.open("forms-4-7");
  for (const auto& [v, w] : pairs) {
    const KForm<T> g = lambda4_7_generator(m.phi, v, w);
    for (std::size_t k : {0u, 2u, 3u}) {
      for (const auto& b : m.lambda4[k]) s.scalar_case(c, inner(g, b));
    }
  }
}

template <class T>
std::vector<std::array<Vector<T>, 4>> basis_quads() {
  std::vector<std::array<Vector<T>, 4>> out;
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      for (int c = 1; c <= 8; ++c) {
        for (int d = 1; d <= 8; ++d) {
          out.push_back({basis_vector<T>(8, a), basis_vector<T>(8, b), basis_vector<T>(8, c), basis_vector<T>(8, d)});
        }
      }
    }
  }
  return out;
}

template <class T>
std::vector<std::pair<Vector<T>, Vector<T>>> basis_pairs() {
  std::vector<std::pair<Vector<T>, Vector<T>>> out;
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) out.emplace_back(basis_vector<T>(8, a), basis_vector<T>(8, b));
  }
  return out;
}

}  // namespace

SuiteReport run_identity_suite_exact(const KForm<Rational>& phi) {
  Suite<Rational> s(0.0);
  const auto model = certificate_checks(s, phi);
  if (phi.dim() == 8 && phi.degree() == 4) {
    auto& sd = s.open("hodge-self-dual");
    s.form_case(sd, hodge(phi) - phi);
    cross_identities(s, phi, basis_quads<Rational>());
    const auto pairs = basis_pairs<Rational>();
    tau_identity(s, phi, pairs);
    if (model) lambda4_7_membership(s, *model, pairs);
    table_identity(s, phi);
    frame_identities(s, phi);
    auto& in_e = s.open("cross-2-restriction/T-x-N-in-E");
    auto& orth_e = s.open("cross-2-restriction/TT-NN-orthogonal-to-E");
    auto& triple = s.open("cross-3-restriction");
    auto& rank_e = s.open("E-rank");
    restriction_identities(s, phi, standard_frame<Rational>(), in_e, orth_e, triple, rank_e);
  }
  fixed_identities(s);
  return s.finish("exact");
}

SuiteReport run_identity_suite_float(const KForm<double>& phi, const SuiteOptions& opts) {
  Suite<double> s(opts.tol);
  std::mt19937_64 rng(opts.seed);
  const auto model = certificate_checks(s, phi);
  if (phi.dim() == 8 && phi.degree() == 4) {
    auto& sd = s.open("hodge-self-dual");
    s.form_case(sd, hodge(phi) - phi);

    auto quads = basis_quads<double>();
    std::vector<std::pair<Vector<double>, Vector<double>>> pairs = basis_pairs<double>();
    for (int k = 0; k < opts.trials; ++k) {
      quads.push_back({gaussian(rng, 8), gaussian(rng, 8), gaussian(rng, 8), gaussian(rng, 8)});
      pairs.emplace_back(gaussian(rng, 8), gaussian(rng, 8));
    }
    cross_identities(s, phi, quads);
    tau_identity(s, phi, pairs);
    if (model) lambda4_7_membership(s, *model, pairs);
    table_identity(s, phi);
    frame_identities(s, phi);

    auto& rf = s.open("random-frame-completion");
    std::vector<Frame8<double>> frames{standard_frame<double>()};
    for (int k = 0; k < opts.trials; ++k) {
      try {
        frames.push_back(random_spin7_frame(phi, rng));
        const FrameReport rep = is_spin7_frame(phi, frames.back(), opts.tol);
        s.record(rf, rep.max_deviation, false);
        if (!rep.orthonormal) s.flag(rf, false, rep.detail);
      } catch (const PreconditionError& ex) {
        s.flag(rf, false, ex.what());
        break;
      }
    }
    auto& in_e = s.open("cross-2-restriction/T-x-N-in-E");
    auto& orth_e = s.open("cross-2-restriction/TT-NN-orthogonal-to-E");
    auto& triple = s.open("cross-3-restriction");
    auto& rank_e = s.open("E-rank");
    for (const auto& f : frames) restriction_identities(s, phi, f, in_e, orth_e, triple, rank_e);
    if (model) {
      pointwise_symbol_checks(s, *model, frames, opts.tol);
    } else {
      auto& c = s.open("lambda2-7-splitting");
      s.flag(c, false, "skipped: not a Spin(7) form");
    }
  }
  fixed_identities(s);
  auto& sl = s.open("sl-symbol-intertwining");
  const IntertwineReport r1 = sl_symbol_intertwine(32, opts.seed, opts.tol);
  s.record(sl, r1.max_residual, false);
  s.record(sl, std::fabs(r1.probe_scalar - 1.0), false);
  auto& co = s.open("coassoc-symbol-intertwining");
  const IntertwineReport r2 = coassoc_symbol_intertwine(32, opts.seed, opts.tol);
  s.record(co, r2.max_residual, false);
  s.record(co, std::fabs(r2.probe_scalar - 1.0), false);
  return s.finish("float");
}

}  // namespace cayley
