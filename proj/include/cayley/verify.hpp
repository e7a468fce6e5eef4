#pragma once

// Identity suite over a candidate Spin(7) form: cross product identities,
// splittings, frame completion, restrictions at Cayley planes and the
// pointwise symbol checks.

#include "cayley/multivec.hpp"
#include "cayley/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

struct IdentityCheck {
  std::string name;
  bool passed = true;
  int cases = 0;
  double max_residual = 0;
  std::string detail;
};

struct SuiteReport {
  /// "exact" or "float".
  std::string mode;
  std::vector<IdentityCheck> checks;
  bool passed = true;
  double max_residual = 0;

  int failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
};

struct SuiteOptions {
  /// Random cases per identity in floating mode.
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-10;
};

/// Every identity holds with zero residual or the check fails.
SuiteReport run_identity_suite_exact(const KForm<Rational>& phi);

/// Basis cases plus `trials` seeded random cases per identity.
SuiteReport run_identity_suite_float(const KForm<double>& phi, const SuiteOptions& opts = {});

}  // namespace cayley
