#include "cayley/io.hpp"
#include "cayley/surgery.hpp"

#include <doctest.h>

#include <random>

using namespace cayley;

TEST_CASE("glue: chi subtracts the interface, sigma adds") {
  const auto X4 = make_invariants(4, -12, 0, "X4");
  const auto X5 = make_invariants(4, 12, 0, "X5");
  const auto collar = make_invariants(4, -24, 0, "collar");
  const auto X1 = glue(X4, X5, collar);
  CHECK(X1.chi == 24);
  CHECK(*X1.sigma == 0);
  const auto L = closed_three_manifold("L");
  const auto Y = closed_three_manifold("Y");
  CHECK(glue(make_invariants(4, 0, 0, "a"), make_invariants(4, 0, 0, "b"), L).chi == 0);
  CHECK(glue({make_invariants(4, 5, 1, "a"), make_invariants(4, 7, -2, "b")}, {Y}).chi == 12);
  CHECK_THROWS_AS(glue(X4, closed_surface(2), Y), PreconditionError);
  CHECK_THROWS_AS(glue(X4, X5, closed_surface(1)), PreconditionError);
}

TEST_CASE("glue without Novikov leaves sigma undetermined") {
  const auto a = make_invariants(4, 1, 1, "a");
  const auto b = make_invariants(4, 1, 1, "b");
  CHECK_FALSE(glue(a, b, closed_three_manifold("Y"), false).sigma.has_value());
}

TEST_CASE("connected sums") {
  const auto cp2 = complex_projective_plane();
  const auto cp2bar = complex_projective_plane(true);
  const auto m = connected_sum(cp2, cp2bar, 17);
  CHECK(m.chi == 20);
  CHECK(*m.sigma == -16);
  const auto s4 = connected_sum(m, four_sphere());
  CHECK(s4.chi == m.chi);
  CHECK(*s4.sigma == *m.sigma);
  const auto big = connected_sum(connected_sum(cp2, cp2, 12), cp2bar, 29);
  CHECK(big.chi == 44);
  CHECK(*big.sigma == -16);
  CHECK_THROWS_AS(connected_sum(cp2, closed_surface(1)), PreconditionError);
}

TEST_CASE("Riemann-Hurwitz and genus") {
  CHECK(riemann_hurwitz(2, 2, 8) == -4);
  CHECK(genus_from_chi(-4) == 3);
  CHECK(riemann_hurwitz(2, 2, 0) == 4);
  CHECK(riemann_hurwitz(2, -2, 2) == -6);
  CHECK_THROWS_AS(riemann_hurwitz(3, 2, 1), PreconditionError);
  CHECK_THROWS_AS(genus_from_chi(3), PreconditionError);
}

TEST_CASE("graph quotients") {
  const auto k = graph_quotient({16, 64, true}, 4);
  CHECK(k.quotient.vertices == 4);
  CHECK(k.quotient.edges == 16);
  CHECK(k.chi == -12);
  CHECK(*k.b1 == 13);
  const auto kt = graph_quotient({16, 64, true}, 2);
  CHECK(kt.chi == -24);
  CHECK(*kt.b1 == 25);
  const auto id = graph_quotient({4, 4, true}, 1);
  CHECK(id.quotient.vertices == 4);
  CHECK(id.quotient.edges == 4);
  CHECK_THROWS_WITH_AS(graph_quotient({16, 64, true}, 3), doctest::Contains("action cannot be free"), PreconditionError);
  CHECK_FALSE(graph_quotient({4, 2, false}, 2).b1.has_value());
}

TEST_CASE("products with a circle and closed doubles") {
  const auto z = closed_surface(3);
  const auto s1z = product_with_circle(z);
  CHECK(s1z.dim == 3);
  CHECK(s1z.chi == 0);
  CHECK((*s1z.betti)[0] + (*s1z.betti)[1] == 8);
  CHECK((*s1z.betti)[1] == 7);
  auto pt = make_invariants(0, 1, std::nullopt, "pt");
  pt.betti = std::vector<long long>{1};
  const auto s1 = product_with_circle(pt);
  CHECK(*s1.betti == std::vector<long long>{1, 1});
  CHECK(closed_double_genus(13) == 13);
  CHECK(closed_double_genus(0) == 0);
  CHECK(closed_double_genus(3) == 3);
}

TEST_CASE("glue and connected sum are commutative and associative (property)") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long long> d(-50, 50);
  const auto r4 = [&](const char* l) { return make_invariants(4, d(rng), d(rng), l); };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = r4("a");
    const auto b = r4("b");
    const auto c = r4("c");
    const auto i1 = make_invariants(4, d(rng), d(rng), "i1");
    const auto i2 = make_invariants(4, d(rng), d(rng), "i2");
    const auto ab = glue(a, b, i1);
    const auto ba = glue(b, a, i1);
    CHECK(ab.chi == ba.chi);
    CHECK(*ab.sigma == *ba.sigma);
    const auto l = glue(glue(a, b, i1), c, i2);
    const auto r = glue(a, glue(b, c, i2), i1);
    CHECK(l.chi == r.chi);
    CHECK(*l.sigma == *r.sigma);
    const auto s1 = connected_sum(connected_sum(a, b), c);
    const auto s2 = connected_sum(a, connected_sum(c, b));
    CHECK(s1.chi == s2.chi);
    CHECK(*s1.sigma == *s2.sigma);
    // excise undoes glue
    const auto back = excise(ab, {b}, {i1});
    CHECK(back.chi == a.chi);
    CHECK(*back.sigma == *a.sigma);
  }
}

TEST_CASE("expression tree from JSON with one derivation row per node") {
  const Json j = Json::parse(R"({
    "op": "glue", "label": "M",
    "parts": [
      {"op": "connected_sum", "copies": 2, "parts": [
        {"op": "leaf", "label": "CP2", "invariants": {"dim": 4, "chi": 3, "sigma": 1}},
        {"op": "leaf", "label": "CP2bar", "invariants": {"dim": 4, "chi": 3, "sigma": -1}}]},
      {"op": "leaf", "label": "cap", "invariants": {"dim": 4, "chi": 1, "sigma": 0}}],
    "along": {"op": "leaf", "label": "S3", "invariants": {"dim": 3, "chi": 0}}
  })");
  const auto r = evaluate(parse_surgery(j));
  CHECK(r.rows.size() == 6);
  CHECK(r.value.chi == 3 + 2 + 1);
  CHECK(*r.value.sigma == -1);
  CHECK(r.rows.back().node == "root");
  CHECK(r.rows.back().label == "M");
}

TEST_CASE("surgery schema errors") {
  CHECK_THROWS_AS(parse_surgery(Json::parse(R"({"op": "twist"})")), InputError);
  CHECK_THROWS_AS(parse_surgery(Json::parse(R"({"op": "leaf"})")), InputError);
  CHECK_THROWS_AS(parse_surgery(Json::parse(R"({"op": "leaf", "invariants": {"dim": 3, "chi": 2}})")), InputError);
  CHECK_THROWS_AS(parse_surgery(Json::parse(R"({"op": "leaf", "invariants": {"dim": 2, "chi": 2, "sigma": 0}})")), InputError);
  CHECK_THROWS_AS(parse_surgery(Json::parse(R"({"op": "leaf", "ref": "X"})")), InputError);
  CHECK_THROWS_AS(parse_surgery(Json::parse(R"({"op": "leaf", "invariants": {"dim": 2, "chi": 2, "betti": [1, 1, 1]}})")),
                  InputError);
}
