#include "cayley/index.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace cayley {

namespace {

Rational frac(long long p, long long q) {
  return Rational(p) / Rational(q);
}

std::vector<IndexFormula> build_formulas() {
  const Rational h = frac(1, 2);
  const Rational mh = frac(-1, 2);
  const Rational one(1);
  const Rational mone(-1);
  std::vector<IndexFormula> f;
  f.push_back({"closed", {{"chi", h}, {"sigma", mh}, {"self_intersection", mone}}, {}});
  f.push_back({"eta",
               {{"chi", h}, {"sigma", mh}, {"euler_normal", mone}, {"dim_ker_Dtilde", mh}, {"eta_Dtilde", h}, {"eta_Bev", mh}},
               {"eta_Dtilde", "eta_Bev"}});
  f.push_back({"spectral_flow", {{"chi", h}, {"sigma", mh}, {"rel_euler", mone}, {"SF", one}, {"dim_ker_Dtilde", mh}}, {}});
  f.push_back({"parallel_section", {{"chi", h}, {"sigma", mh}, {"rel_euler", mone}, {"b0_Y", mh}, {"b1_Y", mh}}, {}});
  f.push_back({"parallel_section_lift",
               {{"chi", h},
                {"sigma_X", h},
                {"sigma_Xtilde", mh},
                {"rel_euler_lift", mh},
                {"b0_Y", h},
                {"b1_Y", h},
                {"b0_Ytilde", mh},
                {"b1_Ytilde", mh}},
               {}});
  f.push_back({"complex_cross_section", {{"chi", h}, {"sigma", mh}, {"rel_euler", mone}, {"dimH0", mh}}, {}});
  f.push_back({"combined_example",
               {{"chi", h},
                {"sigma", h},
                {"euler_normal", mone},
                {"sigma_X4", one},
                {"sigma_X4tilde", mh},
                {"b0_Y", one},
                {"b1_Y", one},
                {"b0_Ytilde", mone},
                {"b1_Ytilde", mone},
                {"dimH0", mh}},
               {}});
  f.push_back({"special_lagrangian", {{"chi", mh}, {"sigma", mh}, {"b0_Y", mh}, {"b1_Y", mh}}, {}});
  f.push_back({"coassociative", {{"chi", h}, {"sigma", mh}, {"b0_Y", mh}, {"b1_Y", mh}}, {}});
  f.push_back({"complex_surface",
               {{"chi_bar", h}, {"sigma_bar", h}, {"self_intersection_bar", mone}, {"chi_C", mh}, {"dimH0", mh}},
               {}});
  f.push_back({"associative", {{"dimH0", mh}}, {}});
  return f;
}

const std::vector<IndexFormula>& formulas() {
  static const std::vector<IndexFormula> f = build_formulas();
  return f;
}

std::string coeff_text(const Rational& c) {
  return to_string(c);
}

bool is_real_field(const IndexFormula& f, const std::string& name) {
  for (const auto& r : f.real_fields) {
    if (r == name) return true;
  }
  return false;
}

std::string real_text(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

Orientation parse_orientation(std::string_view s) {
  if (s == "standard") return Orientation::standard;
  if (s == "complex") return Orientation::complex;
  throw InputError("orientation must be \"standard\" or \"complex\", got \"" + std::string(s) + "\"");
}

std::string to_string(Orientation o) {
  return o == Orientation::complex ? "complex" : "standard";
}

const std::vector<std::string>& index_formula_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& f : formulas()) n.push_back(f.name);
    return n;
  }();
  return names;
}

const IndexFormula& index_formula(std::string_view name) {
  for (const auto& f : formulas()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown index formula '" + std::string(name) + "'");
}

IndexResult evaluate_index(std::string_view formula, const std::map<std::string, long long>& fields,
                           Orientation orientation, const std::map<std::string, double>& real_fields) {
  const IndexFormula& f = index_formula(formula);
  IndexResult r;
  r.formula = f.name;
  r.orientation = orientation;

  std::set<std::string> known;
  bool has_sigma = false;
  for (const auto& t : f.terms) {
    known.insert(t.field);
    has_sigma = has_sigma || t.field == "sigma";
  }
  for (const auto& [k, v] : fields) {
    (void)v;
    if (!known.count(k) || is_real_field(f, k)) throw InputError(f.name + ": unexpected integer field '" + k + "'");
  }
  for (const auto& [k, v] : real_fields) {
    (void)v;
    if (!is_real_field(f, k)) throw InputError(f.name + ": unexpected real field '" + k + "'");
  }
  if (orientation == Orientation::complex) {
    if (!has_sigma) throw InputError(f.name + ": orientation \"complex\" needs a 'sigma' field");
    if (f.name == "combined_example") {
      throw InputError("combined_example already carries the complex-surface sign of sigma; use orientation \"standard\"");
    }
  }

  Rational exact(0);
  double real_part = 0;
  bool has_real = false;
  for (const auto& t : f.terms) {
    if (is_real_field(f, t.field)) {
      const auto it = real_fields.find(t.field);
      if (it == real_fields.end()) throw InputError(f.name + ": missing field '" + t.field + "'");
      if (!std::isfinite(it->second)) throw InputError(f.name + ": field '" + t.field + "' is not finite");
      const double v = to_double(t.coeff) * it->second;
      real_part += v;
      has_real = true;
      r.derivation.push_back({coeff_text(t.coeff) + " * " + t.field, coeff_text(t.coeff) + " * " + real_text(it->second),
                              real_text(v)});
      continue;
    }
    const auto it = fields.find(t.field);
    if (it == fields.end()) throw InputError(f.name + ": missing field '" + t.field + "'");
    long long x = it->second;
    if (t.field == "sigma" && orientation == Orientation::complex) {
      r.derivation.push_back({"sigma (orientation complex)", "-(" + std::to_string(x) + ")", std::to_string(-x)});
      x = -x;
    }
    const Rational term = t.coeff * Rational(x);
    exact += term;
    r.derivation.push_back({coeff_text(t.coeff) + " * " + t.field, coeff_text(t.coeff) + " * " + std::to_string(x), to_string(term)});
  }

  if (has_real) {
    r.value = to_double(exact) + real_part;
    const double nearest = std::round(r.value);
    r.integral = std::fabs(r.value - nearest) <= 1e-9;
    if (r.integral) {
      r.index = static_cast<long long>(nearest);
    } else {
      r.warning = "non-integral index " + real_text(r.value) + ": the eta-invariant inputs are inconsistent";
    }
    r.derivation.push_back({"index", "sum of terms", r.integral ? std::to_string(*r.index) : real_text(r.value)});
    return r;
  }
  if (denominator(exact) != 1) {
    throw ParityError("non-integer index: " + f.name + " evaluates to " + to_string(exact));
  }
  r.index = static_cast<long long>(numerator(exact));
  r.value = static_cast<double>(*r.index);
  r.derivation.push_back({"index", "sum of terms", std::to_string(*r.index)});
  return r;
}

long long index_closed(long long chi, long long sigma, long long self_intersection, Orientation o) {
  return *evaluate_index("closed", {{"chi", chi}, {"sigma", sigma}, {"self_intersection", self_intersection}}, o).index;
}

IndexResult index_eta(long long chi, long long sigma, long long euler_normal, long long dim_ker, double eta_D, double eta_B,
                      Orientation o) {
  return evaluate_index("eta", {{"chi", chi}, {"sigma", sigma}, {"euler_normal", euler_normal}, {"dim_ker_Dtilde", dim_ker}}, o,
                        {{"eta_Dtilde", eta_D}, {"eta_Bev", eta_B}});
}

long long index_spectral_flow(long long chi, long long sigma, long long rel_euler, long long sf, long long dim_ker,
                              Orientation o) {
  return *evaluate_index("spectral_flow",
                         {{"chi", chi}, {"sigma", sigma}, {"rel_euler", rel_euler}, {"SF", sf}, {"dim_ker_Dtilde", dim_ker}}, o)
              .index;
}

long long index_parallel_section(long long chi, long long sigma, long long rel_euler, long long b0, long long b1,
                                 Orientation o) {
  return *evaluate_index("parallel_section",
                         {{"chi", chi}, {"sigma", sigma}, {"rel_euler", rel_euler}, {"b0_Y", b0}, {"b1_Y", b1}}, o)
              .index;
}

long long index_parallel_section_lift(long long chi, long long sigma_X, long long sigma_Xt, long long rel_euler_lift,
                                      long long b0Y, long long b1Y, long long b0Yt, long long b1Yt) {
  return *evaluate_index("parallel_section_lift", {{"chi", chi},
                                                   {"sigma_X", sigma_X},
                                                   {"sigma_Xtilde", sigma_Xt},
                                                   {"rel_euler_lift", rel_euler_lift},
                                                   {"b0_Y", b0Y},
                                                   {"b1_Y", b1Y},
                                                   {"b0_Ytilde", b0Yt},
                                                   {"b1_Ytilde", b1Yt}})
              .index;
}

long long index_complex(long long chi, long long sigma, long long rel_euler, long long dimH0, Orientation o) {
  return *evaluate_index("complex_cross_section",
                         {{"chi", chi}, {"sigma", sigma}, {"rel_euler", rel_euler}, {"dimH0", dimH0}}, o)
              .index;
}

IndexResult index_combined_example(const CombinedInputs& in) {
  return evaluate_index("combined_example", {{"chi", in.chi},
                                             {"sigma", in.sigma},
                                             {"euler_normal", in.euler_normal},
                                             {"sigma_X4", in.sigma_X4},
                                             {"sigma_X4tilde", in.sigma_X4tilde},
                                             {"b0_Y", in.b0_Y},
                                             {"b1_Y", in.b1_Y},
                                             {"b0_Ytilde", in.b0_Ytilde},
                                             {"b1_Ytilde", in.b1_Ytilde},
                                             {"dimH0", in.dimH0}});
}

SpecialVariant parse_special_variant(std::string_view s) {
  if (s == "sl" || s == "special_lagrangian") return SpecialVariant::special_lagrangian;
  if (s == "coassoc" || s == "coassociative") return SpecialVariant::coassociative;
  if (s == "complex_surface") return SpecialVariant::complex_surface;
  if (s == "associative") return SpecialVariant::associative;
  throw InputError("unknown special variant '" + std::string(s) + "'");
}

long long index_special(SpecialVariant v, const std::map<std::string, long long>& fields) {
  switch (v) {
    case SpecialVariant::special_lagrangian:
      return *evaluate_index("special_lagrangian", fields).index;
    case SpecialVariant::coassociative:
      return *evaluate_index("coassociative", fields).index;
    case SpecialVariant::complex_surface:
      return *evaluate_index("complex_surface", fields).index;
    case SpecialVariant::associative: {
      const auto it = fields.find("dimH0");
      if (it != fields.end() && it->second % 2 != 0) {
        throw ParityError("non-integer index: associative formula needs even dim_C H^0 (got " + std::to_string(it->second) +
                          "); doubling the complex dimension is the caller's responsibility");
      }
      return *evaluate_index("associative", fields).index;
    }
  }
  throw InputError("unknown special variant");
}

}  // namespace cayley
