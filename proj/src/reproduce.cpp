#include "cayley/reproduce.hpp"

#include "example_fixtures.hpp"

#include <map>
#include <sstream>

namespace cayley {

namespace {

std::string paren(long long x) {
  return x < 0 ? "(" + std::to_string(x) + ")" : std::to_string(x);
}

long long get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw InputError(std::string("fixture: missing integer '") + key + "'");
  }
  return j[key].get<long long>();
}

const Json& get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("fixture: missing key '") + key + "'");
  return j[key];
}

class Builder {
 public:
  explicit Builder(const Json& expected) : expected_(expected) {}

  long long row(const std::string& quantity, const std::string& derivation, long long value, const char* key = nullptr) {
    ReproduceRow r{quantity, derivation, value, std::nullopt, true};
    if (key && expected_.is_object() && expected_.contains(key)) {
      r.expected = expected_[key].get<long long>();
      r.ok = *r.expected == value;
    }
    rows.push_back(r);
    return value;
  }

  std::vector<ReproduceRow> rows;

 private:
  const Json& expected_;
};

}  // namespace

const std::string& example_fixture(int example) {
  static const std::string one = kExample1Fixture;
  static const std::string two = kExample2Fixture;
  if (example == 1) return one;
  if (example == 2) return two;
  throw InputError("unknown example " + std::to_string(example) + " (available: 1, 2)");
}

ReproduceReport reproduce_fixture(const Json& fx) {
  ReproduceReport rep;
  rep.example = static_cast<int>(get_int(fx, "example"));
  if (fx.contains("title")) rep.title = fx["title"].get<std::string>();
  const Json& expected = fx.contains("expected") ? fx["expected"] : Json::object();
  Builder b(expected);
  std::map<std::string, TopInvariants> refs;

  // Cross-section at infinity from the graph it retracts onto.
  const Json& gj = get(fx, "graph");
  const Graph g{get_int(gj, "vertices"), get_int(gj, "edges"), gj.value("connected", true)};
  const long long order = get_int(fx, "group_order");
  const long long order2 = get_int(fx, "double_cover_order");
  const GraphQuotientResult K = graph_quotient(g, order);
  const GraphQuotientResult Kt = graph_quotient(g, order2);
  if (!K.b1 || !Kt.b1) throw InputError("fixture: graph must be connected");
  b.row("V(K)", std::to_string(g.vertices) + " / " + std::to_string(order), K.quotient.vertices);
  b.row("E(K)", std::to_string(g.edges) + " / " + std::to_string(order), K.quotient.edges);
  b.row("chi(K)", std::to_string(K.quotient.vertices) + " - " + std::to_string(K.quotient.edges), K.chi, "chi_K");
  b.row("b1(K)", "1 - " + paren(K.chi), *K.b1, "b1_K");
  b.row("chi(K~)", std::to_string(Kt.quotient.vertices) + " - " + std::to_string(Kt.quotient.edges), Kt.chi);
  b.row("b1(K~)", "1 - " + paren(Kt.chi), *Kt.b1, "b1_Ktilde");

  TopInvariants Y = closed_three_manifold("Y");
  Y.betti = std::vector<long long>{1, *K.b1, *K.b1, 1};
  TopInvariants Yt = closed_three_manifold("Y~");
  Yt.betti = std::vector<long long>{1, *Kt.b1, *Kt.b1, 1};
  b.row("b0(Y) + b1(Y)", "1 + b1(K)", 1 + *K.b1);
  b.row("b0(Y~) + b1(Y~)", "1 + b1(K~)", 1 + *Kt.b1);
  refs["Y"] = Y;
  refs["Ytilde"] = Yt;

  const long long genus_S = closed_double_genus(*K.b1);
  const TopInvariants S = closed_surface(genus_S, "S");
  b.row("genus(S)", "b1 of the closed double = 2 * " + std::to_string(*K.b1), genus_S);
  b.row("chi(S)", "2 - 2 * " + std::to_string(genus_S), S.chi);
  refs["S"] = S;
  // X4 and X5 are open and overlap in a collar that retracts onto S.
  const TopInvariants overlap = make_invariants(4, S.chi, 0, "collar of S");

  const Json& lj = get(fx, "lens_space");
  const TopInvariants L = parse_invariants(lj);
  refs["L"] = L;

  // Pieces of the smoothed surface.
  const long long sigma_X1 = get_int(fx, "sigma_X1");
  const long long sigma_X4 = get_int(fx, "sigma_X4");
  const long long sigma_X4t = get_int(fx, "sigma_X4tilde");
  const TopInvariants X4 = make_invariants(4, K.chi, sigma_X4, "X4");
  b.row("chi(X4)", "X4 retracts onto K", X4.chi);
  const TopInvariants X5 = make_invariants(4, L.chi + Y.chi - X4.chi, sigma_X1 - sigma_X4, "X5");
  b.row("chi(X5)", "chi(L) + chi(Y) - chi(X4) = " + paren(L.chi) + " + " + paren(Y.chi) + " - " + paren(X4.chi), X5.chi);
  b.row("sigma(X5)", "sigma(X1) - sigma(X4)", *X5.sigma);
  const TopInvariants X1 = glue(X4, X5, overlap, true, "X1");
  b.row("chi(X1)", "chi(X4) + chi(X5) - chi(S) = " + paren(X4.chi) + " + " + paren(X5.chi) + " - " + paren(S.chi), X1.chi,
        "chi_X1");
  b.row("sigma(X1)", "sigma(X4) + sigma(X5)", *X1.sigma);
  refs["X4"] = X4;
  refs["X5"] = X5;
  refs["X1"] = X1;
  refs["X1tilde"] = make_invariants(4, 2 * X1.chi, std::nullopt, "X1~");
  const TopInvariants X5d = glue(X5, X5, overlap, true, "X5 u X5");
  b.row("chi(X5 u X5)", paren(X5.chi) + " + " + paren(X5.chi) + " - " + paren(S.chi), X5d.chi, "chi_X5double");
  refs["X5double"] = X5d;

  // Curve at infinity.
  const Json& bc = get(fx, "branched_cover");
  const long long chi_Z =
      riemann_hurwitz(static_cast<int>(get_int(bc, "degree")), get_int(bc, "base_chi"), get_int(bc, "branch_points"));
  b.row("chi(Z)", std::to_string(get_int(bc, "degree")) + " * " + paren(get_int(bc, "base_chi")) + " - " +
                      std::to_string(get_int(bc, "branch_points")),
        chi_Z);
  const long long genus_Z = genus_from_chi(chi_Z);
  b.row("genus(Z)", "(2 - chi(Z)) / 2", genus_Z, "genus_Z");
  const TopInvariants Z = closed_surface(genus_Z, "Z");
  const TopInvariants S1xZ = product_with_circle(Z, "S1 x Z");
  b.row("b0 + b1 (S1 x Z)", "Kunneth", (*S1xZ.betti)[0] + (*S1xZ.betti)[1]);
  refs["Z"] = Z;
  refs["S1xZ"] = S1xZ;
  refs["D2xZ"] = make_invariants(4, Z.chi, 0, "D2 x Z");
  refs["X13"] = handlebody_null_cobordism(*K.b1, "X13");
  b.row("chi(X13)", "1 - " + std::to_string(*K.b1), refs["X13"].chi);

  // Assembly.
  const SurgeryResult xbar = evaluate(parse_surgery(get(fx, "compactification"), refs));
  rep.compactification = xbar.rows;
  if (!xbar.value.sigma) throw InputError("fixture: compactification signature is undetermined");
  b.row("chi(Xbar)", xbar.rows.back().formula, xbar.value.chi, "chi_Xbar");
  b.row("sigma(Xbar)", "Novikov additivity", *xbar.value.sigma, "sigma_Xbar");
  refs["Xbar"] = xbar.value;

  if (fx.contains("homeomorphism_type")) {
    const Json& h = fx["homeomorphism_type"];
    const long long p = get_int(h, "cp2");
    const long long q = get_int(h, "cp2bar");
    if (p < 1) throw InputError("fixture: homeomorphism type needs at least one CP2");
    TopInvariants m = complex_projective_plane(false);
    m = connected_sum(m, complex_projective_plane(false), p - 1);
    m = connected_sum(m, complex_projective_plane(true), q);
    const std::string name = std::to_string(p) + " CP2 # " + std::to_string(q) + " CP2bar";
    b.row("chi(" + name + ")", "2 + " + std::to_string(p) + " + " + std::to_string(q), m.chi, "chi_Xbar");
    b.row("sigma(" + name + ")", std::to_string(p) + " - " + std::to_string(q), *m.sigma, "sigma_Xbar");
  }

  const SurgeryResult x = evaluate(parse_surgery(get(fx, "complement"), refs));
  rep.complement = x.rows;
  if (!x.value.sigma) throw InputError("fixture: complement signature is undetermined");
  b.row("chi(X)", x.rows.back().formula, x.value.chi, "chi_X");
  b.row("sigma(X)", "Novikov additivity", *x.value.sigma, "sigma_X");

  // Euler number of the normal bundle.
  const Json& ej = get(fx, "euler_normal");
  const Rational scale = parse_rational(get(ej, "scale").get<std::string>());
  const long long self_int = get_int(ej, "self_intersection");
  const SurgeryResult et = evaluate(parse_surgery(get(ej, "tree"), refs));
  const Rational e = scale * Rational(et.value.chi) + Rational(self_int);
  if (denominator(e) != 1) throw ParityError("non-integer index: Euler number " + to_string(e) + " is not an integer");
  const long long euler = static_cast<long long>(numerator(e));
  b.row("e(N)", to_string(scale) + " * chi(" + et.value.label + ") + " + paren(self_int) + " = " + to_string(scale) + " * " +
                    paren(et.value.chi) + " + " + paren(self_int),
        euler, "euler_normal");

  CombinedInputs in;
  in.chi = x.value.chi;
  in.sigma = *x.value.sigma;
  in.euler_normal = euler;
  in.sigma_X4 = sigma_X4;
  in.sigma_X4tilde = sigma_X4t;
  in.b0_Y = (*Y.betti)[0];
  in.b1_Y = (*Y.betti)[1];
  in.b0_Ytilde = (*Yt.betti)[0];
  in.b1_Ytilde = (*Yt.betti)[1];
  in.dimH0 = get_int(fx, "dimH0");
  rep.index = index_combined_example(in);
  rep.index_value = *rep.index.index;
  std::ostringstream d;
  d << "1/2 * " << paren(in.chi) << " + 1/2 * " << paren(in.sigma) << " - " << paren(in.euler_normal) << " + "
    << paren(in.sigma_X4) << " - 1/2 * " << paren(in.sigma_X4tilde) << " + " << paren(in.b0_Y + in.b1_Y) << " - "
    << paren(in.b0_Ytilde + in.b1_Ytilde) << " - 1/2 * " << paren(in.dimH0);
  b.row("index", d.str(), rep.index_value, "index");
  if (expected.contains("index")) rep.expected_index = expected["index"].get<long long>();

  rep.rows = std::move(b.rows);
  for (const auto& r : rep.rows) rep.mismatches += r.ok ? 0 : 1;
  rep.passed = rep.mismatches == 0;
  return rep;
}

ReproduceReport reproduce_example(int example) {
  const std::string& text = example_fixture(example);
  return reproduce_fixture(parse_json_text(text, "example " + std::to_string(example) + " fixture"));
}

}  // namespace cayley
