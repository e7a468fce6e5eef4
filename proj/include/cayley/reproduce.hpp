#pragma once

// End-to-end derivation of the two worked examples from versioned fixtures:
// graph quotients, branched cover, cut-and-paste assembly, Euler number of
// the normal bundle and the combined index formula.

#include "cayley/index.hpp"
#include "cayley/io.hpp"
#include "cayley/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cayley {

struct ReproduceRow {
  std::string quantity;
  std::string derivation;
  long long value = 0;
  std::optional<long long> expected;
  bool ok = true;
};

struct ReproduceReport {
  int example = 0;
  std::string title;
  std::vector<ReproduceRow> rows;
  /// Derivation tables of the compactification and of the complement.
  std::vector<DerivationRow> compactification;
  std::vector<DerivationRow> complement;
  IndexResult index;
  long long index_value = 0;
  std::optional<long long> expected_index;
  bool passed = true;
  int mismatches = 0;
};

/// Fixture text compiled into the library; InputError("unknown example ...") otherwise.
const std::string& example_fixture(int example);

ReproduceReport reproduce_fixture(const Json& fixture);
ReproduceReport reproduce_example(int example);

}  // namespace cayley
