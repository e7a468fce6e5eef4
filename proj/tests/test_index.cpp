#include "cayley/index.hpp"
#include "cayley/io.hpp"

#include <doctest.h>

#include <random>

using namespace cayley;

TEST_CASE("worked values of each formula") {
  CHECK(index_closed(24, -16, 9) == 11);
  const auto eta = index_eta(48, -16, 24, 0, 0.0, 0.0);
  REQUIRE(eta.index);
  CHECK(*eta.index == 8);
  CHECK(index_parallel_section_lift(48, 0, 0, 96, 14, 0, 26, 0) == -30);
  CHECK(index_complex(4, 0, 0, 2) == 1);
  CHECK(index_parallel_section(4, 0, 0, 1, 3) == 0);
  CHECK(index_special(SpecialVariant::special_lagrangian, {{"chi", 2}, {"sigma", 0}, {"b0_Y", 1}, {"b1_Y", 1}}) == -2);
  CHECK(index_special(SpecialVariant::associative, {{"dimH0", 4}}) == -2);
  CHECK(index_spectral_flow(10, 2, 1, 3, 2, Orientation::standard) == 5);
}

TEST_CASE("combined formula on the first worked example") {
  CombinedInputs in;
  in.chi = 48;
  in.sigma = -16;
  in.euler_normal = 24;
  in.b0_Y = 1;
  in.b1_Y = 13;
  in.b0_Ytilde = 1;
  in.b1_Ytilde = 25;
  in.dimH0 = 4;
  CHECK(*index_combined_example(in).index == -22);
}

TEST_CASE("coefficient vectors are the documented ones") {
  const auto coeffs = [](const char* name) {
    std::map<std::string, std::string> m;
    for (const auto& t : index_formula(name).terms) m[t.field] = to_string(t.coeff);
    return m;
  };
  CHECK(coeffs("closed") == std::map<std::string, std::string>{{"chi", "1/2"}, {"sigma", "-1/2"}, {"self_intersection", "-1"}});
  CHECK(coeffs("special_lagrangian") ==
        std::map<std::string, std::string>{{"chi", "-1/2"}, {"sigma", "-1/2"}, {"b0_Y", "-1/2"}, {"b1_Y", "-1/2"}});
  CHECK(coeffs("coassociative") ==
        std::map<std::string, std::string>{{"chi", "1/2"}, {"sigma", "-1/2"}, {"b0_Y", "-1/2"}, {"b1_Y", "-1/2"}});
  CHECK(coeffs("associative") == std::map<std::string, std::string>{{"dimH0", "-1/2"}});
  CHECK(coeffs("combined_example").at("sigma") == "1/2");
  CHECK(coeffs("combined_example").at("b1_Ytilde") == "-1");
  CHECK(index_formula_names().size() == 11);
}

TEST_CASE("every formula is affine in its integer fields (property)") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long long> d(-40, 40);
  for (const auto& name : index_formula_names()) {
    const auto& f = index_formula(name);
    if (!f.real_fields.empty()) continue;
    for (int trial = 0; trial < 50; ++trial) {
      // Even values keep every half-integer coefficient integral.
      std::map<std::string, long long> base;
      for (const auto& t : f.terms) base[t.field] = 2 * d(rng);
      const long long i0 = *evaluate_index(name, base).index;
      for (const auto& t : f.terms) {
        auto shifted = base;
        shifted[t.field] += 2;
        const long long i1 = *evaluate_index(name, shifted).index;
        CHECK(Rational(i1 - i0) == Rational(2) * t.coeff);
      }
    }
  }
}

TEST_CASE("odd halvings are parity errors, never rounded") {
  CHECK_THROWS_WITH_AS(index_closed(3, 0, 0), doctest::Contains("non-integer index"), ParityError);
  CHECK_THROWS_AS(index_special(SpecialVariant::associative, {{"dimH0", 3}}), ParityError);
  CHECK_THROWS_AS(index_complex(4, 0, 0, 1), ParityError);
}

TEST_CASE("non-integral eta data gives a warning, not an error") {
  const auto r = index_eta(4, 0, 0, 0, 0.5, 0.0);
  CHECK_FALSE(r.integral);
  CHECK_FALSE(r.index.has_value());
  CHECK(r.value == doctest::Approx(2.25));
  CHECK_FALSE(r.warning.empty());
}

TEST_CASE("orientation flag negates sigma only") {
  CHECK(index_closed(10, 4, 0, Orientation::complex) == index_closed(10, -4, 0));
  CHECK_THROWS_AS(evaluate_index("associative", {{"dimH0", 2}}, Orientation::complex), InputError);
  CHECK_THROWS_AS(evaluate_index("complex_surface",
                                 {{"chi_bar", 2}, {"sigma_bar", 0}, {"self_intersection_bar", 0}, {"chi_C", 0}, {"dimH0", 0}},
                                 Orientation::complex),
                  InputError);
  const auto r = evaluate_index("closed", {{"chi", 10}, {"sigma", 4}, {"self_intersection", 0}}, Orientation::complex);
  bool flipped = false;
  for (const auto& row : r.derivation) flipped = flipped || (row.quantity == "sigma (orientation complex)" && row.value == "-4");
  CHECK(flipped);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(evaluate_index("closed", {{"chi", 2}, {"sigma", 0}}), InputError);
  CHECK_THROWS_AS(evaluate_index("closed", {{"chi", 2}, {"sigma", 0}, {"self_intersection", 0}, {"extra", 1}}), InputError);
  CHECK_THROWS_AS(evaluate_index("nope", {}), InputError);
  CHECK_THROWS_AS(parse_orientation("sideways"), InputError);
}

TEST_CASE("index input files") {
  const auto in = parse_index_input(Json::parse(
      R"({"formula": "eta", "orientation": "complex", "fields": {"chi": 4, "sigma": 2, "euler_normal": 0,
          "dim_ker_Dtilde": 0, "eta_Dtilde": 0.25, "eta_Bev": 0.25}})"));
  CHECK(in.orientation == Orientation::complex);
  CHECK(in.real_fields.at("eta_Dtilde") == 0.25);
  const auto r = evaluate_index(in.formula, in.fields, in.orientation, in.real_fields);
  CHECK(*r.index == 3);
  CHECK_THROWS_AS(parse_index_input(Json::parse(R"({"formula": "closed", "fields": {"chi": 1.5}})")), InputError);
  CHECK_THROWS_AS(parse_index_input(Json::parse(R"({"formula": "closed"})")), InputError);
}
