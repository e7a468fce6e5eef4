#include "cayley/surgery.hpp"

#include <sstream>

namespace cayley {

namespace {

std::string paren(long long x) {
  return x < 0 ? "(" + std::to_string(x) + ")" : std::to_string(x);
}

std::optional<long long> sum_sigma(const std::vector<const TopInvariants*>& plus, const std::vector<const TopInvariants*>& minus,
                                   bool novikov_ok) {
  if (!novikov_ok) return std::nullopt;
  long long s = 0;
  for (const auto* p : plus) {
    if (!p->sigma) return std::nullopt;
    s += *p->sigma;
  }
  for (const auto* p : minus) {
    if (p->dim == plus.front()->dim) {
      if (!p->sigma) return std::nullopt;
      s -= *p->sigma;
    }
  }
  return s;
}

void check_interfaces(int dim, const std::vector<TopInvariants>& along, const char* op) {
  for (const auto& a : along) {
    if (a.dim != dim && a.dim != dim - 1) {
      throw PreconditionError(std::string(op) + ": interface '" + a.label + "' has dimension " + std::to_string(a.dim) +
                              ", expected " + std::to_string(dim - 1) + " or " + std::to_string(dim));
    }
  }
}

}  // namespace

TopInvariants make_invariants(int dim, long long chi, std::optional<long long> sigma, std::string label) {
  if (dim < 0) throw PreconditionError("dimension must be non-negative");
  TopInvariants t;
  t.dim = dim;
  t.chi = chi;
  t.sigma = sigma;
  t.label = std::move(label);
  return t;
}

TopInvariants closed_surface(long long genus, std::string label) {
  if (genus < 0) throw PreconditionError("genus must be non-negative");
  TopInvariants t = make_invariants(2, 2 - 2 * genus, std::nullopt, label.empty() ? "Sigma_" + std::to_string(genus) : label);
  t.betti = std::vector<long long>{1, 2 * genus, 1};
  return t;
}

TopInvariants complex_projective_plane(bool reversed) {
  TopInvariants t = make_invariants(4, 3, reversed ? -1 : 1, reversed ? "CP2bar" : "CP2");
  t.betti = std::vector<long long>{1, 0, 1, 0, 1};
  return t;
}

TopInvariants four_sphere() {
  TopInvariants t = make_invariants(4, 2, 0, "S4");
  t.betti = std::vector<long long>{1, 0, 0, 0, 1};
  return t;
}

TopInvariants closed_three_manifold(std::string label) {
  return make_invariants(3, 0, std::nullopt, std::move(label));
}

TopInvariants handlebody_null_cobordism(long long k, std::string label) {
  if (k < 0) throw PreconditionError("number of handles must be non-negative");
  TopInvariants t = make_invariants(4, 1 - k, 0, label.empty() ? "X_" + std::to_string(k) : label);
  t.betti = std::vector<long long>{1, k, 0, 0, 0};
  return t;
}

TopInvariants glue(const std::vector<TopInvariants>& parts, const std::vector<TopInvariants>& along, bool novikov_ok,
                   std::string label) {
  if (parts.empty()) throw PreconditionError("glue: no parts");
  const int dim = parts.front().dim;
  for (const auto& p : parts) {
    if (p.dim != dim) throw PreconditionError("glue: dimension mismatch between '" + parts.front().label + "' and '" + p.label + "'");
  }
  check_interfaces(dim, along, "glue");
  TopInvariants out;
  out.dim = dim;
  std::vector<const TopInvariants*> plus;
  std::vector<const TopInvariants*> minus;
  for (const auto& p : parts) {
    out.chi += p.chi;
    plus.push_back(&p);
  }
  for (const auto& a : along) {
    out.chi -= a.chi;
    minus.push_back(&a);
  }
  if (dim == 4) out.sigma = sum_sigma(plus, minus, novikov_ok);
  out.label = std::move(label);
  return out;
}

TopInvariants glue(const TopInvariants& a, const TopInvariants& b, const TopInvariants& along, bool novikov_ok,
                   std::string label) {
  return glue(std::vector<TopInvariants>{a, b}, std::vector<TopInvariants>{along}, novikov_ok, std::move(label));
}

TopInvariants excise(const TopInvariants& whole, const std::vector<TopInvariants>& removed,
                     const std::vector<TopInvariants>& along, bool novikov_ok, std::string label) {
  for (const auto& r : removed) {
    if (r.dim != whole.dim) throw PreconditionError("excise: dimension mismatch between '" + whole.label + "' and '" + r.label + "'");
  }
  check_interfaces(whole.dim, along, "excise");
  TopInvariants out;
  out.dim = whole.dim;
  out.chi = whole.chi;
  for (const auto& r : removed) out.chi -= r.chi;
  for (const auto& a : along) out.chi += a.chi;
  if (whole.dim == 4 && novikov_ok && whole.sigma) {
    long long s = *whole.sigma;
    bool known = true;
    for (const auto& r : removed) {
      if (!r.sigma) known = false;
      else s -= *r.sigma;
    }
    for (const auto& a : along) {
      if (a.dim == whole.dim) {
        if (!a.sigma) known = false;
        else s += *a.sigma;
      }
    }
    if (known) out.sigma = s;
  }
  out.label = std::move(label);
  return out;
}

TopInvariants connected_sum(const TopInvariants& a, const TopInvariants& b, std::string label) {
  return connected_sum(a, b, 1, std::move(label));
}

TopInvariants connected_sum(const TopInvariants& a, const TopInvariants& b, long long copies, std::string label) {
  if (a.dim != 4 || b.dim != 4) throw PreconditionError("connected_sum: only 4-manifolds are supported");
  if (copies < 0) throw PreconditionError("connected_sum: copies must be non-negative");
  TopInvariants out;
  out.dim = 4;
  out.chi = a.chi + copies * (b.chi - 2);
  if (a.sigma && b.sigma) out.sigma = *a.sigma + copies * *b.sigma;
  if (a.betti && b.betti && a.betti->size() == 5 && b.betti->size() == 5) {
    std::vector<long long> bt(5);
    bt[0] = 1;
    bt[4] = 1;
    for (std::size_t k = 1; k < 4; ++k) bt[k] = (*a.betti)[k] + copies * (*b.betti)[k];
    out.betti = bt;
  }
  out.label = label.empty() ? a.label + " # " + std::to_string(copies) + " " + b.label : std::move(label);
  return out;
}

long long riemann_hurwitz(int degree, long long chi_base, long long branch_points) {
  if (degree < 1) throw PreconditionError("riemann_hurwitz: degree must be positive");
  if (branch_points < 0) throw PreconditionError("riemann_hurwitz: branch point count must be non-negative");
  if (degree != 2 && branch_points > 0) {
    throw PreconditionError("riemann_hurwitz: only simple branching of double covers is supported");
  }
  return degree * chi_base - branch_points;
}

long long genus_from_chi(long long chi) {
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw PreconditionError("chi = " + std::to_string(chi) + " is not the Euler characteristic of a connected closed orientable surface");
  }
  return (2 - chi) / 2;
}

long long closed_double_genus(long long b1_half) {
  if (b1_half < 0) throw PreconditionError("closed_double_genus: b1 must be non-negative");
  return b1_half;
}

GraphQuotientResult graph_quotient(const Graph& g, long long group_order) {
  if (group_order < 1) throw PreconditionError("graph_quotient: group order must be positive");
  if (g.vertices < 0 || g.edges < 0) throw PreconditionError("graph_quotient: negative cell counts");
  if (g.connected && g.vertices < 1) throw PreconditionError("graph_quotient: a connected graph needs a vertex");
  if (g.vertices % group_order != 0 || g.edges % group_order != 0) throw PreconditionError("action cannot be free");
  GraphQuotientResult r;
  r.quotient = Graph{g.vertices / group_order, g.edges / group_order, g.connected};
  r.chi = r.quotient.vertices - r.quotient.edges;
  if (g.connected) r.b1 = 1 - r.chi;
  return r;
}

TopInvariants product_with_circle(const TopInvariants& a, std::string label) {
  TopInvariants out;
  out.dim = a.dim + 1;
  out.chi = 0;
  if (a.betti) {
    const auto& b = *a.betti;
    std::vector<long long> bt(b.size() + 1, 0);
    for (std::size_t k = 0; k < bt.size(); ++k) {
      if (k < b.size()) bt[k] += b[k];
      if (k >= 1) bt[k] += b[k - 1];
    }
    out.betti = bt;
  }
  out.label = label.empty() ? "S1 x " + a.label : std::move(label);
  return out;
}

namespace {

TopInvariants eval_node(const SurgeryNode& n, const std::string& id, std::vector<DerivationRow>& rows) {
  std::vector<TopInvariants> parts;
  std::vector<TopInvariants> along;
  for (std::size_t i = 0; i < n.parts.size(); ++i) parts.push_back(eval_node(n.parts[i], id + ".parts[" + std::to_string(i) + "]", rows));
  for (std::size_t i = 0; i < n.along.size(); ++i) along.push_back(eval_node(n.along[i], id + ".along[" + std::to_string(i) + "]", rows));

  std::ostringstream f;
  TopInvariants out;
  if (n.op == "leaf") {
    if (!parts.empty() || !along.empty()) throw InputError(id + ": a leaf has no parts");
    out = n.invariants;
    f << "given";
  } else if (n.op == "glue") {
    out = glue(parts, along, n.novikov_ok);
    f << "chi = ";
    for (std::size_t i = 0; i < parts.size(); ++i) f << (i ? " + " : "") << paren(parts[i].chi);
    for (const auto& a : along) f << " - " << paren(a.chi);
    f << " = " << out.chi;
    if (out.sigma) {
      f << "; sigma = ";
      bool first = true;
      for (const auto& p : parts) {
        f << (first ? "" : " + ") << paren(*p.sigma);
        first = false;
      }
      for (const auto& a : along) {
        if (a.dim == out.dim) f << " - " << paren(*a.sigma);
      }
      f << " = " << *out.sigma;
    }
  } else if (n.op == "excise") {
    if (parts.empty()) throw InputError(id + ": excise needs the whole space as its first part");
    const std::vector<TopInvariants> removed(parts.begin() + 1, parts.end());
    out = excise(parts.front(), removed, along, n.novikov_ok);
    f << "chi = " << paren(parts.front().chi);
    for (const auto& r : removed) f << " - " << paren(r.chi);
    for (const auto& a : along) f << " + " << paren(a.chi);
    f << " = " << out.chi;
    if (out.sigma) {
      f << "; sigma = " << paren(*parts.front().sigma);
      for (const auto& r : removed) f << " - " << paren(*r.sigma);
      f << " = " << *out.sigma;
    }
  } else if (n.op == "connected_sum") {
    if (parts.size() != 2) throw InputError(id + ": connected_sum needs exactly two parts");
    out = connected_sum(parts[0], parts[1], n.copies);
    f << "chi = " << paren(parts[0].chi) << " + " << n.copies << " * (" << parts[1].chi << " - 2) = " << out.chi;
    if (out.sigma) f << "; sigma = " << paren(*parts[0].sigma) << " + " << n.copies << " * " << paren(*parts[1].sigma) << " = " << *out.sigma;
  } else if (n.op == "product_s1") {
    if (parts.size() != 1) throw InputError(id + ": product_s1 needs exactly one part");
    out = product_with_circle(parts[0]);
    f << "chi(S1 x M) = 0";
    if (out.betti) {
      f << "; betti =";
      for (auto b : *out.betti) f << " " << b;
    }
  } else {
    throw InputError(id + ": unknown op '" + n.op + "'");
  }
  if (!n.label.empty()) out.label = n.label;
  rows.push_back({id, n.op, out.label, out.dim, out.chi, out.sigma, f.str()});
  return out;
}

}  // namespace

SurgeryResult evaluate(const SurgeryNode& root) {
  SurgeryResult r;
  r.value = eval_node(root, "root", r.rows);
  return r;
}

}  // namespace cayley
