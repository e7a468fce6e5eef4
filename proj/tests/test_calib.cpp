#include "cayley/calib.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cayley;

namespace {

Vector<Rational> e(int i) {
  return basis_vector<Rational>(8, i);
}

}  // namespace

TEST_CASE("coordinate Cayley planes and their reversal") {
  const auto phi = phi0<Rational>();
  const OrientedPlane<Rational> V({e(1), e(2), e(3), e(4)});
  const auto r = cayley_test(phi, V);
  CHECK(r.verdict == CayleyVerdict::cayley_plus);
  CHECK(r.signed_square == 1);
  CHECK(r.agree);
  const auto rr = cayley_test(phi, V.reversed());
  CHECK(rr.verdict == CayleyVerdict::cayley_minus);
  CHECK(rr.signed_square == -1);
  const auto n = cayley_test(phi, OrientedPlane<Rational>({e(1), e(2), e(3), e(5)}));
  CHECK(n.verdict == CayleyVerdict::not_cayley);
  CHECK(n.signed_square == 0);
  CHECK(n.agree);
}

TEST_CASE("exact test works with non-orthonormal spanning vectors") {
  const auto phi = phi0<Rational>();
  const OrientedPlane<Rational> V({e(1) + e(2), e(2), Rational(3) * e(3), e(4) - e(1)});
  const auto r = cayley_test(phi, V);
  CHECK(r.verdict == CayleyVerdict::cayley_plus);
  CHECK(r.signed_square == 1);
}

TEST_CASE("calibration inequality and criterion agreement on random planes (property)") {
  std::mt19937_64 rng(37);
  const auto phi = phi0<double>();
  for (int trial = 0; trial < 500; ++trial) {
    const auto fr = testing_support::random_frame(rng, 4);
    const OrientedPlane<double> V(fr);
    const auto r = cayley_test(phi, V);
    CHECK(std::fabs(r.value) <= 1.0 + 1e-12);
    CHECK(r.agree);
  }
}

TEST_CASE("planes spanned by completed frames are Cayley (property)") {
  std::mt19937_64 rng(41);
  const auto phi = phi0<double>();
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing_support::random_spin7_frame(rng, phi);
    const auto r = cayley_test(phi, OrientedPlane<double>({f[0], f[1], f[2], f[3]}));
    CHECK(r.verdict == CayleyVerdict::cayley_plus);
    CHECK(r.tau_norm < 1e-9);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("complex and special Lagrangian planes") {
  const auto x = [](int k) { return e(2 * k - 1); };
  const auto y = [](int k) { return e(2 * k); };
  const OrientedPlane<Rational> cx({x(1), y(1), x(2), y(2)});
  CHECK(complex_test(cx));
  CHECK_FALSE(sl_test(cx));
  CHECK(restrict_form(wirtinger2<Rational>(), cx) == 1);
  const OrientedPlane<Rational> sl({x(1), x(2), x(3), x(4)});
  CHECK(sl_test(sl));
  CHECK_FALSE(complex_test(sl));
  CHECK(restrict_form(re_Omega<Rational>(), sl) == 1);
  // Both are Cayley for -omega^2/2 + Re Omega, with opposite signs.
  const auto phi = spin7_sl_form<Rational>();
  CHECK(cayley_test(phi, sl).verdict == CayleyVerdict::cayley_plus);
  CHECK(cayley_test(phi, cx).verdict == CayleyVerdict::cayley_minus);
}

TEST_CASE("complex structure and holomorphic volume normalization") {
  const Vector<Rational> v = {1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(complex_J(complex_J(v)) == -v);
  CHECK(omega_normalization_holds<Rational>());
  CHECK(omega_normalization_holds<double>());
  CHECK(is_spin7_form(spin7_sl_form<Rational>()).passed);
}

TEST_CASE("every builtin name resolves; unknown names are input errors") {
  for (const auto& n : builtin_form_names()) CHECK(builtin_form<double>(n).name == n);
  CHECK_THROWS_AS(builtin_form<double>("nope"), InputError);
}

TEST_CASE("comass of a single blade is 1 with argmax on its plane") {
  ComassOptions o;
  o.restarts = 20;
  o.seed = 3;
  const auto r = comass_estimate(KForm<double>::monomial(8, {1, 2, 3, 4}), o);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
  double outside = 0;
  for (const auto& v : r.argmax) {
    for (std::size_t i = 4; i < 8; ++i) outside = std::max(outside, std::fabs(v[i]));
  }
  CHECK(outside < 1e-4);
}

TEST_CASE("comass is deterministic per seed and independent of the thread count") {
  ComassOptions a;
  a.restarts = 12;
  a.seed = 99;
  ComassOptions b = a;
  b.jobs = 4;
  const auto phi = phi0<double>();
  const auto ra = comass_estimate(phi, a);
  const auto rb = comass_estimate(phi, b);
  CHECK(ra.value == rb.value);
  CHECK(ra.best_restart == rb.best_restart);
  CHECK(ra.argmax == rb.argmax);
}

TEST_CASE("comass scales linearly") {
  ComassOptions o;
  o.restarts = 20;
  const auto twice = comass_estimate(2.0 * phi0<double>(), o);
  CHECK(twice.value == doctest::Approx(2.0).epsilon(1e-9));
  // Blades on complementary 4-planes: the comass stays 1.
  const auto s = KForm<double>::monomial(8, {1, 2, 3, 4}) + KForm<double>::monomial(8, {5, 6, 7, 8});
  CHECK(comass_estimate(s, o).value == doctest::Approx(1.0).epsilon(1e-8));
}
