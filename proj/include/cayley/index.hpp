#pragma once

// Index formulas as affine combinations of integer topological data.
//
// Every formula is a table of (field, coefficient) terms. Half-integer
// coefficients are summed exactly and a non-integer total is a ParityError.
// eta-invariants, spectral flow, kernel dimensions and relative Euler numbers
// are inputs; nothing here computes them.
//
// Orientation: "complex" negates the field `sigma` before the formula is
// applied. Complex surfaces are Cayley for the opposite orientation, so
// formulas written for the standard orientation need this flip there.

#include "cayley/errors.hpp"
#include "cayley/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

enum class Orientation { standard, complex };

Orientation parse_orientation(std::string_view s);
std::string to_string(Orientation o);

struct IndexTerm {
  std::string field;
  Rational coeff;
};

struct IndexFormula {
  std::string name;
  std::vector<IndexTerm> terms;
  /// Fields read as real numbers (eta-invariants); the total may then be non-integral.
  std::vector<std::string> real_fields;
};

/// closed, eta, spectral_flow, parallel_section, parallel_section_lift,
/// complex_cross_section, combined_example, special_lagrangian,
/// coassociative, complex_surface, associative.
const std::vector<std::string>& index_formula_names();

/// Throws InputError for unknown names.
const IndexFormula& index_formula(std::string_view name);

struct IndexRow {
  std::string quantity;
  std::string expression;
  std::string value;
};

struct IndexResult {
  std::string formula;
  Orientation orientation = Orientation::standard;
  /// Exact total (integral unless real fields are present).
  std::optional<long long> index;
  double value = 0;
  bool integral = true;
  std::string warning;
  std::vector<IndexRow> derivation;
};

/// Evaluates a formula on named fields. Missing or unknown fields are InputErrors;
/// a non-integer total of integer data is a ParityError.
IndexResult evaluate_index(std::string_view formula, const std::map<std::string, long long>& fields,
                           Orientation orientation = Orientation::standard,
                           const std::map<std::string, double>& real_fields = {});

// Named forms of the same formulas.

long long index_closed(long long chi, long long sigma, long long self_intersection,
                       Orientation o = Orientation::standard);

/// 1/2 chi - 1/2 sigma - euler_normal - dim_ker/2 + (eta_D - eta_B)/2.
IndexResult index_eta(long long chi, long long sigma, long long euler_normal, long long dim_ker, double eta_D,
                      double eta_B, Orientation o = Orientation::standard);

long long index_spectral_flow(long long chi, long long sigma, long long rel_euler, long long sf, long long dim_ker,
                              Orientation o = Orientation::standard);

long long index_parallel_section(long long chi, long long sigma, long long rel_euler, long long b0, long long b1,
                                 Orientation o = Orientation::standard);

long long index_parallel_section_lift(long long chi, long long sigma_X, long long sigma_Xt, long long rel_euler_lift,
                                      long long b0Y, long long b1Y, long long b0Yt, long long b1Yt);

long long index_complex(long long chi, long long sigma, long long rel_euler, long long dimH0,
                        Orientation o = Orientation::standard);

struct CombinedInputs {
  long long chi = 0;
  long long sigma = 0;
  long long euler_normal = 0;
  long long sigma_X4 = 0;
  long long sigma_X4tilde = 0;
  long long b0_Y = 0;
  long long b1_Y = 0;
  long long b0_Ytilde = 0;
  long long b1_Ytilde = 0;
  long long dimH0 = 0;
};

/// 1/2 chi + 1/2 sigma - e + (2 sigma(X4) - sigma(X4~))/2
///   + (b0(Y) + b1(Y) - b0(Y~) - b1(Y~)) - dimH0/2.
/// Written for complex-surface pieces, so sigma already carries the flipped sign.
IndexResult index_combined_example(const CombinedInputs& in);

enum class SpecialVariant { special_lagrangian, coassociative, complex_surface, associative };

SpecialVariant parse_special_variant(std::string_view s);

/// sl: chi, sigma, b0_Y, b1_Y; coassoc: chi, sigma, b0_Y, b1_Y;
/// complex_surface: chi_bar, sigma_bar, self_intersection_bar, chi_C, dimH0;
/// associative: dimH0.
long long index_special(SpecialVariant v, const std::map<std::string, long long>& fields);

}  // namespace cayley
