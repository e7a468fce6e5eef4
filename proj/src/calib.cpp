#include "cayley/calib.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace cayley {

namespace {

using Frame = std::vector<Vector<double>>;

// Sufficient-increase constant. Small values accept the oscillating step
// t = 2/lambda at Cayley-type maxima and stall the ascent.
constexpr double kArmijo = 0.1;

double frame_value(const KForm<double>& form, const Frame& u) {
  return evaluate(form, std::span<const Vector<double>>(u));
}

// Euclidean gradient: slot i of form(u_1, ..., u_p) as a vector.
Frame euclidean_gradient(const KForm<double>& form, const Frame& u) {
  const std::size_t p = u.size();
  Frame g(p);
  for (std::size_t i = 0; i < p; ++i) {
    KForm<double> c = form;
    for (std::size_t j = 0; j < i; ++j) c = contract(u[j], c);
    // c(x, u_{i+1}, ..., u_p) = (-1)^(p-1-i) c(u_{i+1}, ..., u_p, x)
    for (std::size_t j = i + 1; j < p; ++j) c = contract(u[j], c);
    g[i] = sharp(c);
    if ((p - 1 - i) % 2 == 1) g[i] = -g[i];
  }
  return g;
}

// Projection onto the tangent space of the Stiefel manifold at u:
// G - U sym(U^T G).
Frame tangent_projection(const Frame& u, const Frame& g) {
  const std::size_t p = u.size();
  Frame out = g;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const double s = 0.5 * (dot(u[j], g[i]) + dot(u[i], g[j]));
      for (std::size_t k = 0; k < out[i].size(); ++k) out[i][k] -= s * u[j][k];
    }
  }
  return out;
}

double frame_norm(const Frame& f) {
  double s = 0;
  for (const auto& v : f) s += dot(v, v);
  return std::sqrt(s);
}

// Retraction: orthonormalize in order, which keeps the orientation.
Frame retract(const Frame& u) {
  Frame q = orthonormalize(u, 1e-14);
  if (q.size() != u.size()) throw Error("comass: retraction lost rank");
  return q;
}

Frame random_frame(int dim, int degree, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Frame f(static_cast<std::size_t>(degree), Vector<double>(static_cast<std::size_t>(dim)));
    for (auto& v : f) {
      for (auto& x : v) x = gauss(rng);
    }
    Frame q = orthonormalize(f, 1e-8);
    if (q.size() == f.size()) return q;
  }
}

}  // namespace

RestartOutcome comass_restart(const KForm<double>& form, const ComassOptions& opts, int restart_index) {
  if (form.degree() < 1) throw PreconditionError("comass needs a form of degree >= 1");
  std::seed_seq seq{static_cast<std::uint64_t>(opts.seed), static_cast<std::uint64_t>(restart_index)};
  std::mt19937_64 rng(seq);
  RestartOutcome out;
  Frame u = random_frame(form.dim(), form.degree(), rng);
  double f = frame_value(form, u);
  double step = 1.0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    const Frame xi = tangent_projection(u, euclidean_gradient(form, u));
    const double gn = frame_norm(xi);
    out.grad_norm = gn;
    out.iterations = it;
    if (gn < opts.tol) {
      out.converged = true;
      break;
    }
    // Backtracking: halve until the Armijo condition holds.
    double t = std::min(1.0, 2.0 * step);
    bool moved = false;
    for (int h = 0; h <= opts.max_halvings; ++h) {
      Frame trial = u;
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t k = 0; k < u[i].size(); ++k) trial[i][k] += t * xi[i][k];
      }
      trial = retract(trial);
      const double ft = frame_value(form, trial);
      if (ft >= f + kArmijo * t * gn * gn) {
        u = std::move(trial);
        f = ft;
        step = t;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) {
      // No ascent possible at double precision; treat as stationary.
      out.converged = gn < std::sqrt(opts.tol);
      break;
    }
    out.iterations = it + 1;
  }
  if (!out.converged && out.iterations >= opts.max_iterations) {
    out.grad_norm = frame_norm(tangent_projection(u, euclidean_gradient(form, u)));
    out.converged = out.grad_norm < opts.tol;
  }
  out.value = f;
  out.frame = std::move(u);
  return out;
}

ComassResult comass_estimate(const KForm<double>& form, const ComassOptions& opts) {
  if (opts.restarts < 1) throw PreconditionError("comass: restarts must be >= 1");
  if (!(opts.tol > 0)) throw PreconditionError("comass: tol must be positive");
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opts.restarts));
  const int jobs = std::clamp(opts.jobs, 1, opts.restarts);
  if (jobs == 1) {
    for (int r = 0; r < opts.restarts; ++r) outcomes[static_cast<std::size_t>(r)] = comass_restart(form, opts, r);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (int r = w; r < opts.restarts; r += jobs) outcomes[static_cast<std::size_t>(r)] = comass_restart(form, opts, r);
      });
    }
    for (auto& t : pool) t.join();
  }
  ComassResult res;
  res.restarts = opts.restarts;
  for (int r = 0; r < opts.restarts; ++r) {
    const auto& o = outcomes[static_cast<std::size_t>(r)];
    if (o.converged) ++res.converged_restarts;
    // Strict comparison keeps the lowest index on ties.
    if (r == 0 || o.value > res.value) {
      res.value = o.value;
      res.best_restart = r;
    }
  }
  const auto& best = outcomes[static_cast<std::size_t>(res.best_restart)];
  res.argmax = best.frame;
  res.grad_norm = best.grad_norm;
  res.iterations = best.iterations;
  res.warning = !best.converged;
  return res;
}

}  // namespace cayley
