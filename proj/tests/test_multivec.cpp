#include "cayley/multivec.hpp"
#include "cayley/plane.hpp"
#include "cayley/scalar.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace cayley;
using testing_support::gaussian;
using testing_support::permutation_sign;

namespace {

KForm<double> random_form(std::mt19937_64& rng, int dim, int degree) {
  KForm<double> f(dim, degree);
  std::normal_distribution<double> g;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = g(rng);
  return f;
}

// Evaluation straight from the determinant definition of dx_I(v_1..v_k).
double eval_by_determinants(const KForm<double>& a, const std::vector<Vector<double>>& vs) {
  double total = 0;
  const int k = a.degree();
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto idx = blade_indices(a.blade(n));
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    double det = 0;
    do {
      double prod = permutation_sign(perm);
      for (int r = 0; r < k; ++r) prod *= vs[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])][static_cast<std::size_t>(idx[static_cast<std::size_t>(r)] - 1)];
      det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += a[n] * det;
  }
  return total;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-0.25")) == "-1/4");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
}

TEST_CASE("blade basis sizes are binomial coefficients") {
  const int binom8[] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
  for (int k = 0; k <= 8; ++k) CHECK(KForm<double>(8, k).size() == static_cast<std::size_t>(binom8[k]));
}

TEST_CASE("monomial sign follows the sorting permutation") {
  const auto f = KForm<Rational>::monomial(8, {3, 1, 2});
  CHECK(f.at({1, 2, 3}) == 1);
  const auto g = KForm<Rational>::monomial(8, {2, 1, 3});
  CHECK(g.at({1, 2, 3}) == -1);
  CHECK(g.at({3, 1, 2}) == -1);
  CHECK(g.at({1, 3, 2}) == 1);
}

TEST_CASE("evaluation agrees with the determinant definition on random data") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 4;
    const KForm<double> a = random_form(rng, 6, k);
    std::vector<Vector<double>> vs;
    for (int i = 0; i < k; ++i) vs.push_back(gaussian(rng, 6));
    CHECK(evaluate(a, std::span<const Vector<double>>(vs)) == doctest::Approx(eval_by_determinants(a, vs)).epsilon(1e-10));
  }
}

TEST_CASE("wedge is graded commutative and associative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_form(rng, 7, 2);
    const auto b = random_form(rng, 7, 3);
    const auto c = random_form(rng, 7, 1);
    CHECK((wedge(a, b) - wedge(b, a)).max_abs() < 1e-12);
    CHECK((wedge(b, c) + wedge(c, b)).max_abs() < 1e-12);
    CHECK((wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).max_abs() < 1e-11);
  }
}

TEST_CASE("a ^ *b = <a, b> vol and ** = (-1)^{k(n-k)}") {
  std::mt19937_64 rng(5);
  for (int n : {3, 4, 7, 8}) {
    for (int k = 0; k <= n; ++k) {
      const auto a = random_form(rng, n, k);
      const auto b = random_form(rng, n, k);
      const auto lhs = wedge(a, hodge(b));
      CHECK(lhs[0] == doctest::Approx(inner(a, b)).epsilon(1e-10));
      const double s = (k * (n - k)) % 2 == 0 ? 1.0 : -1.0;
      CHECK((hodge(hodge(a)) - s * a).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = gaussian(rng, 8);
    const auto a = random_form(rng, 8, 2);
    const auto b = random_form(rng, 8, 3);
    const auto lhs = contract(v, wedge(a, b));
    const auto rhs = wedge(contract(v, a), b) + wedge(a, contract(v, b));
    CHECK((lhs - rhs).max_abs() < 1e-11);
    // v _| (v _| a) = 0
    CHECK(contract(v, contract(v, b)).max_abs() < 1e-12);
  }
}

TEST_CASE("exact arithmetic keeps identities exact") {
  KForm<Rational> a(5, 2);
  a += KForm<Rational>::monomial(5, {1, 2}, Rational(1, 3));
  a += KForm<Rational>::monomial(5, {3, 4}, Rational(-2, 7));
  CHECK(wedge(a, a).at({1, 2, 3, 4}) == Rational(-4, 21));
  CHECK(hodge(hodge(a)) == a);
}

TEST_CASE("flat and sharp are inverse") {
  const Vector<Rational> v = {Rational(1), Rational(-2, 3), Rational(0), Rational(5)};
  CHECK(sharp(flat(v)) == v);
}

TEST_CASE("planes: Gram determinant and degeneracy") {
  const Vector<Rational> e1 = basis_vector<Rational>(4, 1);
  const Vector<Rational> e2 = basis_vector<Rational>(4, 2);
  OrientedPlane<Rational> p({e1, e1 + e2});
  CHECK(p.gram_det() == 1);
  CHECK_THROWS_AS(OrientedPlane<Rational>({e1, Rational(2) * e1}), DegeneratePlaneError);
  const auto vol = KForm<Rational>::monomial(4, {1, 2});
  CHECK(restrict_form(vol, p) == 1);
  CHECK(restrict_form(vol, p.reversed()) == -1);
}
