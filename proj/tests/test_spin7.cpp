#include "cayley/spin7.hpp"
#include "support.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

using namespace cayley;

namespace {

// The 14 terms of phi0, written out independently of the library.
struct Term {
  int i, j, k, l, sign;
};
const Term kPhi0[] = {{1, 2, 3, 4, 1},  {1, 2, 5, 6, 1},  {1, 2, 7, 8, -1}, {1, 3, 5, 7, 1}, {1, 3, 6, 8, 1},
                      {1, 4, 5, 8, 1},  {1, 4, 6, 7, -1}, {2, 3, 5, 8, -1}, {2, 3, 6, 7, 1}, {2, 4, 5, 7, 1},
                      {2, 4, 6, 8, 1},  {3, 4, 5, 6, -1}, {3, 4, 7, 8, 1},  {5, 6, 7, 8, 1}};

Vector<Rational> e(int i) {
  return basis_vector<Rational>(8, i);
}

}  // namespace

TEST_CASE("phi0 matches the written-out table") {
  const auto phi = phi0<Rational>();
  CHECK(phi.nonzero_count() == 14);
  for (const auto& t : kPhi0) CHECK(phi.at({t.i, t.j, t.k, t.l}) == t.sign);
}

TEST_CASE("phi0 is self-dual with phi ^ phi = 14 vol") {
  const auto phi = phi0<Rational>();
  CHECK(hodge(phi) == phi);
  CHECK(wedge(phi, phi) == Rational(14) * KForm<Rational>::volume(8));
}

TEST_CASE("certificate accepts phi0 and rejects a flipped sign") {
  const auto good = is_spin7_form(phi0<Rational>());
  CHECK(good.passed);
  auto bad = phi0<Rational>();
  bad += KForm<Rational>::monomial(8, {1, 2, 3, 4}, Rational(-2));
  const auto cert = is_spin7_form(bad);
  CHECK_FALSE(cert.passed);
  CHECK(cert.first_failure().find("self-dual") != std::string::npos);
  CHECK_THROWS_AS(build_model(bad), Spin7FormError);
}

TEST_CASE("Lambda^2 spectrum: seven -3 and twenty-one +1") {
  const auto L = lambda2_operator(phi0<double>());
  Eigen::MatrixXd m(28, 28);
  for (int i = 0; i < 28; ++i) {
    for (int j = 0; j < 28; ++j) m(i, j) = L[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  int minus3 = 0, plus1 = 0;
  for (int i = 0; i < 28; ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::fabs(ev + 3) < 1e-8) ++minus3;
    if (std::fabs(ev - 1) < 1e-8) ++plus1;
  }
  CHECK(minus3 == 7);
  CHECK(plus1 == 21);
}

TEST_CASE("exact model dimensions") {
  const auto m = build_model(phi0<Rational>());
  CHECK(m.lambda2_7.size() == 7);
  CHECK(m.lambda2_21.size() == 21);
  CHECK(m.lambda4[0].size() == 1);
  CHECK(m.lambda4[1].size() == 7);
  CHECK(m.lambda4[2].size() == 27);
  CHECK(m.lambda4[3].size() == 35);
}

TEST_CASE("projections to Lambda^2_7 and Lambda^2_21 split a 2-form") {
  const auto phi = phi0<Rational>();
  const auto a = KForm<Rational>::monomial(8, {1, 2}) + Rational(3) * KForm<Rational>::monomial(8, {4, 7});
  const auto p7 = proj2_7(phi, a);
  const auto p21 = proj2_21(phi, a);
  CHECK(p7 + p21 == a);
  CHECK(hodge(wedge(p7, phi)) == Rational(-3) * p7);
  CHECK(hodge(wedge(p21, phi)) == p21);
}

TEST_CASE("cross product table") {
  const auto phi = phi0<Rational>();
  const auto x = [&](int a, int b) { return cross2(phi, e(a), e(b)); };
  CHECK(x(1, 5) == x(2, 6));
  CHECK(x(1, 5) == x(3, 7));
  CHECK(x(1, 5) == x(4, 8));
  CHECK(x(1, 6) == -x(2, 5));
  CHECK(x(1, 6) == x(3, 8));
  CHECK(x(1, 6) == -x(4, 7));
  CHECK(x(1, 7) == -x(2, 8));
  CHECK(x(1, 7) == -x(3, 5));
  CHECK(x(1, 7) == x(4, 6));
  CHECK(x(1, 8) == x(2, 7));
  CHECK(x(1, 8) == -x(3, 6));
  CHECK(x(1, 8) == -x(4, 5));
}

TEST_CASE("triple products complete the standard frame") {
  const auto phi = phi0<Rational>();
  CHECK(cross3(phi, e(1), e(2), e(3)) == -e(4));
  CHECK(cross3(phi, e(1), e(2), e(5)) == -e(6));
  CHECK(cross3(phi, e(1), e(3), e(5)) == -e(7));
  CHECK(cross3(phi, e(2), e(3), e(5)) == e(8));
  const auto f = complete_frame(phi, e(1), e(2), e(3), e(5));
  CHECK(f == standard_frame<Rational>());
}

TEST_CASE("inner product of two cross products (property)") {
  std::mt19937_64 rng(17);
  const auto phi = phi0<double>();
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing_support::gaussian(rng, 8);
    const auto b = testing_support::gaussian(rng, 8);
    const auto c = testing_support::gaussian(rng, 8);
    const auto d = testing_support::gaussian(rng, 8);
    const double lhs = inner(cross2(phi, a, b), cross2(phi, c, d));
    const double rhs = -evaluate(phi, {a, b, c, d}) + dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(10));
  }
}

TEST_CASE("triple product is orthogonal to its factors and has norm |a^b^c| (property)") {
  std::mt19937_64 rng(19);
  const auto phi = phi0<double>();
  for (int trial = 0; trial < 100; ++trial) {
    const auto fr = testing_support::random_frame(rng, 3);
    const auto x = cross3(phi, fr[0], fr[1], fr[2]);
    CHECK(std::fabs(dot(x, fr[0])) < 1e-12);
    CHECK(std::fabs(dot(x, fr[1])) < 1e-12);
    CHECK(std::fabs(dot(x, fr[2])) < 1e-12);
    CHECK(dot(x, x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("random completed frames pull phi back to phi0 (property)") {
  std::mt19937_64 rng(23);
  const auto phi = phi0<double>();
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing_support::random_spin7_frame(rng, phi);
    const auto rep = is_spin7_frame(phi, f);
    CHECK(rep.is_frame);
    CHECK(rep.max_deviation < 1e-10);
  }
}

TEST_CASE("complete_frame rejects non-orthonormal input") {
  const auto phi = phi0<Rational>();
  CHECK_THROWS_AS(complete_frame(phi, e(1), e(1), e(3), e(5)), PreconditionError);
  CHECK_THROWS_AS(complete_frame(phi, e(1), e(2), e(3), e(4)), PreconditionError);
}

TEST_CASE("tau vanishes on e1..e4 and not on e1,e2,e3,e5") {
  const auto phi = phi0<Rational>();
  CHECK(tau(phi, e(1), e(2), e(3), e(4)).is_zero());
  CHECK_FALSE(tau(phi, e(1), e(2), e(3), e(5)).is_zero());
}

TEST_CASE("h(tau(a,b,c,d), v x w) is the Lambda^4_7 generator") {
  const auto phi = phi0<Rational>();
  const auto v = e(2) + e(7);
  const auto w = e(3) - Rational(2) * e(5);
  const auto cvw = cross2(phi, v, w);
  KForm<Rational> h(8, 4);
  const auto& basis = h.basis();
  for (std::size_t n = 0; n < h.size(); ++n) {
    const auto idx = blade_indices(basis.blade(n));
    h[n] = inner(tau(phi, e(idx[0]), e(idx[1]), e(idx[2]), e(idx[3])), cvw);
  }
  CHECK(h == lambda4_7_generator(phi, v, w));
}
