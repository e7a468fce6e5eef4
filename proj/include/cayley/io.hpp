#pragma once

// JSON input files. Every schema violation is an InputError.

#include "cayley/errors.hpp"
#include "cayley/index.hpp"
#include "cayley/multivec.hpp"
#include "cayley/scalar.hpp"
#include "cayley/surgery.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace cayley {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

/// {"dim", "degree", "terms": [{"blade": [...], "coeff": "p/q"}]}. Coefficients may also be JSON integers.
KForm<Rational> parse_form(const Json& j);
Json form_to_json(const KForm<Rational>& f);

struct PlaneInput {
  int dim = 0;
  int degree = 0;
  /// Entries given as integers or rational strings are exact; JSON floats are
  /// converted by their exact binary value.
  std::vector<Vector<Rational>> vectors;
};

/// {"dim", "degree", "vectors": [[...], ...]}.
PlaneInput parse_plane(const Json& j);

/// Leaves may carry {"ref": name} instead of "invariants"; refs are resolved
/// against `refs` (an unknown ref is an InputError).
SurgeryNode parse_surgery(const Json& j, const std::map<std::string, TopInvariants>& refs = {});
TopInvariants parse_invariants(const Json& j);

struct IndexInput {
  std::string formula;
  std::map<std::string, long long> fields;
  std::map<std::string, double> real_fields;
  Orientation orientation = Orientation::standard;
};

/// {"formula", "fields": {...}, "orientation"}. Real fields of the formula accept JSON numbers; all others must be integers.
IndexInput parse_index_input(const Json& j);

}  // namespace cayley
