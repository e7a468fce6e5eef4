#pragma once

// Integer bookkeeping of Euler characteristics, signatures and Betti numbers
// under cut-and-paste moves. Nothing here computes homology of an actual
// space: invariants of the pieces are supplied by the caller.

#include "cayley/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cayley {

struct TopInvariants {
  int dim = 4;
  long long chi = 0;
  /// Only meaningful for 4-dimensional pieces.
  std::optional<long long> sigma;
  /// b^0 .. b^dim when known.
  std::optional<std::vector<long long>> betti;
  std::string label;
};

TopInvariants make_invariants(int dim, long long chi, std::optional<long long> sigma, std::string label);

/// Closed orientable surface of genus g.
TopInvariants closed_surface(long long genus, std::string label = {});
TopInvariants complex_projective_plane(bool reversed = false);
TopInvariants four_sphere();
/// Closed 3-manifold used as a gluing interface (chi = 0).
TopInvariants closed_three_manifold(std::string label);
/// Boundary connected sum of k copies of S^1 x D^3: chi = 1 - k, sigma = 0.
TopInvariants handlebody_null_cobordism(long long k, std::string label = {});

/// chi = sum chi(parts) - sum chi(along); sigma adds when novikov_ok.
/// Each interface has the dimension of the parts or one less.
TopInvariants glue(const std::vector<TopInvariants>& parts, const std::vector<TopInvariants>& along, bool novikov_ok = true,
                   std::string label = {});
TopInvariants glue(const TopInvariants& a, const TopInvariants& b, const TopInvariants& along, bool novikov_ok = true,
                   std::string label = {});

/// Complement of `removed` pieces that were attached along `along`:
/// chi = chi(whole) - sum chi(removed) + sum chi(along), sigma likewise.
TopInvariants excise(const TopInvariants& whole, const std::vector<TopInvariants>& removed,
                     const std::vector<TopInvariants>& along, bool novikov_ok = true, std::string label = {});

/// a # b for 4-manifolds: chi = chi(a) + chi(b) - 2, sigma adds.
TopInvariants connected_sum(const TopInvariants& a, const TopInvariants& b, std::string label = {});
/// a # copies b.
TopInvariants connected_sum(const TopInvariants& a, const TopInvariants& b, long long copies, std::string label = {});

/// Double cover with simple branch points: chi = degree * chi_base - branch_points.
long long riemann_hurwitz(int degree, long long chi_base, long long branch_points);
/// Genus of a connected closed orientable surface with the given chi.
long long genus_from_chi(long long chi);
/// Genus of the boundary surface of a closed double: b^1(boundary) = 2 b1_half.
long long closed_double_genus(long long b1_half);

struct Graph {
  long long vertices = 0;
  long long edges = 0;
  bool connected = true;
};

struct GraphQuotientResult {
  Graph quotient;
  long long chi = 0;
  /// Only set for connected graphs: b^1 = 1 - chi.
  std::optional<long long> b1;
};

/// Quotient of a graph by a free action of a group of the given order.
GraphQuotientResult graph_quotient(const Graph& g, long long group_order);

/// S^1 x a: chi = 0, dimension + 1, Betti numbers by Kunneth.
TopInvariants product_with_circle(const TopInvariants& a, std::string label = {});

// ---------------------------------------------------------------------------
// Expression trees

struct SurgeryNode {
  /// leaf | glue | excise | connected_sum | product_s1
  std::string op = "leaf";
  std::string label;
  TopInvariants invariants;
  std::vector<SurgeryNode> parts;
  std::vector<SurgeryNode> along;
  /// connected_sum: number of copies of the second part.
  long long copies = 1;
  bool novikov_ok = true;
  std::string note;
};

struct DerivationRow {
  std::string node;
  std::string op;
  std::string label;
  int dim = 0;
  long long chi = 0;
  std::optional<long long> sigma;
  std::string formula;
};

struct SurgeryResult {
  TopInvariants value;
  /// One row per node, children first.
  std::vector<DerivationRow> rows;
};

SurgeryResult evaluate(const SurgeryNode& root);

}  // namespace cayley
