#include "cayley/dirac.hpp"

#include <cmath>
#include <random>

namespace cayley {

namespace {

using Form = KForm<double>;
using Vec = Vector<double>;

Vec coeff_vector(const Form& a) {
  return Vec(a.coeffs().begin(), a.coeffs().end());
}

double max_dev(const Form& a, const Form& b) {
  return (a - b).max_abs();
}

Vec random_unit(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Vec v(n);
    for (auto& x : v) x = gauss(rng);
    const double nrm = std::sqrt(dot(v, v));
    if (nrm > 1e-3) {
      for (auto& x : v) x /= nrm;
      return v;
    }
  }
}

std::vector<Vec> probe_and_sweep(int random_covectors, std::uint64_t seed) {
  std::vector<Vec> out;
  for (int i = 1; i <= 4; ++i) out.push_back(basis_vector<double>(4, i));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_covectors; ++i) out.push_back(random_unit(rng, 4));
  return out;
}

// Fits c at the first covector, then measures max |lhs - c rhs| over all.
template <class Lhs, class Rhs>
IntertwineReport fit_and_measure(const std::vector<Vec>& covectors, int columns, Lhs&& lhs, Rhs&& rhs, double tol) {
  IntertwineReport rep;
  double num = 0;
  double den = 0;
  for (int k = 0; k < columns; ++k) {
    const Form l = lhs(covectors[0], k);
    const Form r = rhs(covectors[0], k);
    num += inner(l, r);
    den += inner(r, r);
  }
  rep.probe_scalar = den > 0 ? num / den : 0.0;
  for (const auto& xi : covectors) {
    for (int k = 0; k < columns; ++k) {
      const Form r = rhs(xi, k);
      rep.max_residual = std::max(rep.max_residual, max_dev(lhs(xi, k), rep.probe_scalar * r));
    }
    ++rep.covectors;
  }
  rep.passed = std::fabs(std::fabs(rep.probe_scalar) - 1.0) <= tol && rep.max_residual < tol;
  return rep;
}

}  // namespace

CayleyPointModel build_cayley_model(const Spin7Model<double>& m, const OrientedPlane<double>& plane,
                                    const std::vector<Vec>& normal_frame, double tau_tol) {
  if (plane.dim() != 8 || plane.degree() != 4) throw PreconditionError("build_cayley_model expects a 4-plane in R^8");
  CayleyPointModel model;
  model.phi = m.phi;
  const auto& q = plane.orthonormal();
  model.tau_norm = std::sqrt(norm2(tau(m.phi, q[0], q[1], q[2], q[3])));
  if (!(model.tau_norm < tau_tol)) throw NonCayleyError(model.tau_norm);
  model.tangent_frame = q;

  if (normal_frame.empty()) {
    std::vector<Vec> seed = q;
    for (int i = 1; i <= 8; ++i) seed.push_back(basis_vector<double>(8, i));
    const auto full = orthonormalize(seed, 1e-8);
    model.normal_frame.assign(full.begin() + 4, full.end());
  } else {
    if (normal_frame.size() != 4) throw PreconditionError("normal frame needs 4 vectors");
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (std::fabs(dot(normal_frame[i], normal_frame[j]) - (i == j ? 1.0 : 0.0)) > 1e-10) {
          throw PreconditionError("normal frame is not orthonormal");
        }
        if (std::fabs(dot(normal_frame[i], q[j])) > 1e-10) throw PreconditionError("normal frame is not normal to the plane");
      }
    }
    model.normal_frame = normal_frame;
  }

  // Kernel of Lambda^2_7 -> Lambda^2(T).
  Rows<double> restriction;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      Vec row;
      for (const auto& b : m.lambda2_7) row.push_back(evaluate(b, {q[i], q[j]}));
      restriction.push_back(std::move(row));
    }
  }
  model.kernel_dim = m.lambda2_7.size() - rank(restriction, 1e-9);

  std::vector<Vec> products;
  for (const auto& u : q) {
    for (const auto& n : model.normal_frame) products.push_back(coeff_vector(cross2(m.phi, u, n)));
  }
  for (const auto& c : orthonormalize(products, 1e-8)) model.E_basis.push_back(form_from_coeffs(8, 2, c));
  return model;
}

std::array<Form, 3> tangent_asd_forms(const CayleyPointModel& model) {
  const auto& u = model.tangent_frame;
  auto uu = [&](int i, int j) { return wedge(flat(u[static_cast<std::size_t>(i)]), flat(u[static_cast<std::size_t>(j)])); };
  const double r = 1.0 / std::sqrt(2.0);
  return {r * (uu(0, 1) - uu(2, 3)), r * (uu(0, 2) + uu(1, 3)), r * (uu(0, 3) - uu(1, 2))};
}

SubbundleReport check_subbundle(const CayleyPointModel& model) {
  SubbundleReport rep;
  rep.dim_E = model.E_basis.size();
  const auto& u = model.tangent_frame;
  for (const auto& b : model.E_basis) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) rep.E_residual = std::max(rep.E_residual, std::fabs(evaluate(b, {u[i], u[j]})));
    }
    rep.E_residual = std::max(rep.E_residual, proj2_21(model.phi, b).max_abs());
  }
  std::vector<Form> images;
  for (const auto& a : tangent_asd_forms(model)) images.push_back(2.0 * proj2_7(model.phi, a));
  double diag = 0;
  for (const auto& im : images) diag += inner(im, im);
  diag /= static_cast<double>(images.size());
  rep.embedding_scale = std::sqrt(diag);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      const double target = i == j ? diag : 0.0;
      rep.embedding_residual = std::max(rep.embedding_residual, std::fabs(inner(images[i], images[j]) - target));
    }
    for (const auto& b : model.E_basis) rep.orthogonality = std::max(rep.orthogonality, std::fabs(inner(images[i], b)));
  }
  rep.image_dim = rank(form_rows(images), 1e-9);
  return rep;
}

Vec tangent_vector(const CayleyPointModel& model, const Vec& xi) {
  if (xi.size() != 4) throw PreconditionError("covector on the tangent plane needs 4 components");
  Vec v(8, 0.0);
  for (std::size_t i = 0; i < 4; ++i) v = v + xi[i] * model.tangent_frame[i];
  return v;
}

Eigen::Matrix4d symbol_D(const CayleyPointModel& model, const Vec& xi) {
  if (model.E_basis.size() != 4) throw PreconditionError("model has no 4-dimensional E");
  const Vec x = tangent_vector(model, xi);
  Eigen::Matrix4d s;
  for (int j = 0; j < 4; ++j) {
    const Form img = cross2(model.phi, x, model.normal_frame[static_cast<std::size_t>(j)]);
    for (int i = 0; i < 4; ++i) s(i, j) = inner(model.E_basis[static_cast<std::size_t>(i)], img);
  }
  return s;
}

CliffordReport clifford_check(const CayleyPointModel& model, int random_pairs, std::uint64_t seed, double tol) {
  CliffordReport rep;
  auto one = [&](const Vec& a, const Vec& b) {
    const Eigen::Matrix4d sa = symbol_D(model, a);
    const Eigen::Matrix4d sb = symbol_D(model, b);
    const Eigen::Matrix4d r = sa.transpose() * sb + sb.transpose() * sa - 2.0 * dot(a, b) * Eigen::Matrix4d::Identity();
    rep.max_residual = std::max(rep.max_residual, r.cwiseAbs().maxCoeff());
    ++rep.pairs;
  };
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) one(basis_vector<double>(4, i), basis_vector<double>(4, j));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < random_pairs; ++k) {
    Vec a(4);
    Vec b(4);
    for (auto& x : a) x = gauss(rng);
    for (auto& x : b) x = gauss(rng);
    one(a, b);
  }
  rep.passed = rep.max_residual < tol;
  return rep;
}

IntertwineReport sl_symbol_intertwine(int random_covectors, std::uint64_t seed, double tol) {
  const Spin7Model<double> m = build_model(spin7_sl_form<double>());
  std::vector<Vec> u;
  std::vector<Vec> ju;
  for (int k = 1; k <= 4; ++k) {
    u.push_back(basis_vector<double>(8, 2 * k - 1));
    ju.push_back(complex_J(u.back()));
  }
  const Form half_omega = 0.5 * kahler_omega<double>();
  std::vector<Form> pair_image(6, Form(8, 2));
  const auto& b2 = BladeBasis::get(4, 2);
  for (std::size_t n = 0; n < b2.size(); ++n) {
    const auto idx = blade_indices(b2.blade(n));
    pair_image[n] = cross2(m.phi, u[static_cast<std::size_t>(idx[0] - 1)], ju[static_cast<std::size_t>(idx[1] - 1)]);
  }
  auto to_ambient = [&](const Vec& xi) {
    Vec v(8, 0.0);
    for (std::size_t i = 0; i < 4; ++i) v = v + xi[i] * u[i];
    return v;
  };
  auto lhs = [&](const Vec& xi, int k) { return cross2(m.phi, to_ambient(xi), ju[static_cast<std::size_t>(k)]); };
  auto rhs = [&](const Vec& xi, int k) {
    const Form x = flat(xi);
    const Form a = flat(basis_vector<double>(4, k + 1));
    const double f = -contract(xi, a)[0];
    const Form xa = wedge(x, a);
    const Form beta = 0.5 * (xa + hodge(xa));
    Form out = -f * half_omega;
    for (std::size_t n = 0; n < beta.size(); ++n) out += beta[n] * pair_image[n];
    return out;
  };
  return fit_and_measure(probe_and_sweep(random_covectors, seed), 4, lhs, rhs, tol);
}

IntertwineReport coassoc_symbol_intertwine(int random_covectors, std::uint64_t seed, double tol) {
  const Spin7Model<double> m = build_model(spin7_from_g2(build_g2<double>()));
  std::vector<Vec> u;
  for (int k = 5; k <= 8; ++k) u.push_back(basis_vector<double>(8, k));
  std::vector<Vec> n;
  for (int k = 1; k <= 4; ++k) n.push_back(basis_vector<double>(8, k));
  const Vec dtheta = n[0];
  const Form phi3 = contract(dtheta, m.phi);
  auto to_ambient = [&](const Vec& xi) {
    Vec v(8, 0.0);
    for (std::size_t i = 0; i < 4; ++i) v = v + xi[i] * u[i];
    return v;
  };
  // Normal vectors as (a, b) in Lambda^2 + Lambda^4 of the plane.
  std::vector<std::pair<Form, Form>> source;
  source.emplace_back(Form(4, 2), -1.0 * Form::volume(4));
  for (std::size_t k = 1; k < 4; ++k) {
    const Form c = contract(n[k], phi3);
    Form a(4, 2);
    for (std::size_t p = 0; p < a.size(); ++p) {
      const auto idx = blade_indices(a.blade(p));
      a[p] = -evaluate(c, {u[static_cast<std::size_t>(idx[0] - 1)], u[static_cast<std::size_t>(idx[1] - 1)]});
    }
    source.emplace_back(a, Form(4, 4));
  }
  auto lhs = [&](const Vec& xi, int k) { return cross2(m.phi, to_ambient(xi), n[static_cast<std::size_t>(k)]); };
  auto rhs = [&](const Vec& xi, int k) {
    const auto& [a, b] = source[static_cast<std::size_t>(k)];
    const Form g = wedge(flat(xi), a) - contract(xi, b);
    return cross2(m.phi, dtheta, to_ambient(sharp(hodge(g))));
  };
  return fit_and_measure(probe_and_sweep(random_covectors, seed), 4, lhs, rhs, tol);
}

}  // namespace cayley
