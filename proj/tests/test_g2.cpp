#include "cayley/g2.hpp"
#include "cayley/spin7.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cayley;

TEST_CASE("G2 forms from the slice: *phi = psi and seven terms") {
  const auto g = build_g2<Rational>();
  CHECK(g.phi3.nonzero_count() == 7);
  CHECK(g.psi4.nonzero_count() == 7);
  CHECK(hodge(g.phi3) == g.psi4);
  CHECK(spin7_from_g2(g) == phi0<Rational>());
}

TEST_CASE("G2 cross product: |v x w|^2 = |v|^2 |w|^2 - <v,w>^2 (property)") {
  std::mt19937_64 rng(29);
  const auto g = build_g2<double>();
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = testing_support::gaussian(rng, 7);
    const auto w = testing_support::gaussian(rng, 7);
    const auto x = cross_g2(g, v, w);
    CHECK(dot(x, x) == doctest::Approx(dot(v, v) * dot(w, w) - dot(v, w) * dot(v, w)).epsilon(1e-10));
    CHECK(std::fabs(dot(x, v)) < 1e-10);
    CHECK(dot(cross_g2(g, w, v), x) == doctest::Approx(-dot(x, x)).epsilon(1e-10));
  }
}

TEST_CASE("associator vanishes exactly on a calibrated 3-plane") {
  const auto g = build_g2<Rational>();
  // Find a blade of phi3 with coefficient +1; that coordinate plane is associative.
  for (std::size_t n = 0; n < g.phi3.size(); ++n) {
    if (g.phi3[n] != 1) continue;
    const auto idx = blade_indices(g.phi3.blade(n));
    const auto a = basis_vector<Rational>(7, idx[0]);
    const auto b = basis_vector<Rational>(7, idx[1]);
    const auto c = basis_vector<Rational>(7, idx[2]);
    CHECK(associator(g, a, b, c) == Vector<Rational>(7, Rational(0)));
    CHECK(is_associative(g, OrientedPlane<Rational>({a, b, c})));
    // The orthogonal 4-plane is coassociative.
    std::vector<Vector<Rational>> rest;
    for (int i = 1; i <= 7; ++i) {
      if (i != idx[0] && i != idx[1] && i != idx[2]) rest.push_back(basis_vector<Rational>(7, i));
    }
    CHECK(is_coassociative(g, OrientedPlane<Rational>(rest)));
    return;
  }
  FAIL("phi3 has no +1 coefficient");
}

TEST_CASE("a generic 3-plane is not associative") {
  const auto g = build_g2<double>();
  const auto e = [](int i) { return basis_vector<double>(7, i); };
  bool found_non = false;
  for (int i = 1; i <= 5 && !found_non; ++i) {
    for (int j = i + 1; j <= 6 && !found_non; ++j) {
      for (int k = j + 1; k <= 7 && !found_non; ++k) {
        if (std::fabs(g.phi3.at({i, j, k})) < 0.5) found_non = !is_associative(g, OrientedPlane<double>({e(i), e(j), e(k)}));
      }
    }
  }
  CHECK(found_non);
}
