#include "cayley/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cayley {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

long long as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) fail(where, "non-finite number");
    return Rational(d);
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a number or rational string");
}

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!allowed.count(k)) fail(where, "unknown key '" + k + "'");
  }
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(origin + ": invalid JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

KForm<Rational> parse_form(const Json& j) {
  const std::string where = "form";
  const long long dim = as_integer(require(j, "dim", where), where + ".dim");
  const long long degree = as_integer(require(j, "degree", where), where + ".degree");
  if (dim < 1 || dim > kMaxDim) fail(where, "dim must be in 1..8");
  if (degree < 0 || degree > dim) fail(where, "degree must be in 0..dim");
  const Json& terms = require(j, "terms", where);
  if (!terms.is_array()) fail(where, "'terms' must be an array");
  KForm<Rational> f(static_cast<int>(dim), static_cast<int>(degree));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string w = where + ".terms[" + std::to_string(t) + "]";
    const Json& blade = require(terms[t], "blade", w);
    if (!blade.is_array()) fail(w, "'blade' must be an array");
    std::vector<int> idx;
    std::set<long long> seen;
    for (const auto& b : blade) {
      const long long i = as_integer(b, w + ".blade");
      if (i < 1 || i > dim) fail(w, "blade index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
      if (!seen.insert(i).second) fail(w, "repeated blade index " + std::to_string(i));
      idx.push_back(static_cast<int>(i));
    }
    if (static_cast<long long>(idx.size()) != degree) fail(w, "blade length differs from degree");
    const Rational c = as_rational(require(terms[t], "coeff", w), w + ".coeff");
    f += KForm<Rational>::monomial(static_cast<int>(dim), std::span<const int>(idx), c);
  }
  return f;
}

Json form_to_json(const KForm<Rational>& f) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    terms.push_back({{"blade", blade_indices(f.blade(i))}, {"coeff", to_string(f[i])}});
  }
  return {{"dim", f.dim()}, {"degree", f.degree()}, {"terms", terms}};
}

PlaneInput parse_plane(const Json& j) {
  const std::string where = "plane";
  PlaneInput p;
  const long long dim = as_integer(require(j, "dim", where), where + ".dim");
  const long long degree = as_integer(require(j, "degree", where), where + ".degree");
  if (dim < 1 || dim > kMaxDim) fail(where, "dim must be in 1..8");
  if (degree < 1 || degree > dim) fail(where, "degree must be in 1..dim");
  p.dim = static_cast<int>(dim);
  p.degree = static_cast<int>(degree);
  const Json& vs = require(j, "vectors", where);
  if (!vs.is_array()) fail(where, "'vectors' must be an array");
  if (static_cast<long long>(vs.size()) != degree) fail(where, "number of vectors differs from degree");
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const std::string w = where + ".vectors[" + std::to_string(k) + "]";
    if (!vs[k].is_array() || static_cast<long long>(vs[k].size()) != dim) fail(w, "expected " + std::to_string(dim) + " entries");
    Vector<Rational> v;
    for (const auto& x : vs[k]) v.push_back(as_rational(x, w));
    p.vectors.push_back(std::move(v));
  }
  return p;
}

TopInvariants parse_invariants(const Json& j) {
  const std::string where = "invariants";
  only_keys(j, {"dim", "chi", "sigma", "betti", "label"}, where);
  TopInvariants t;
  if (j.contains("dim")) t.dim = static_cast<int>(as_integer(j["dim"], where + ".dim"));
  if (t.dim < 0 || t.dim > 8) fail(where, "dim must be in 0..8");
  t.chi = as_integer(require(j, "chi", where), where + ".chi");
  if (j.contains("sigma")) {
    const Json& s = j["sigma"];
    if (s.is_null() || (s.is_string() && s.get<std::string>() == "n/a")) {
      t.sigma.reset();
    } else {
      t.sigma = as_integer(s, where + ".sigma");
    }
  }
  if (t.sigma && t.dim != 4) fail(where, "sigma is only meaningful for 4-dimensional pieces");
  if (j.contains("betti")) {
    const Json& b = j["betti"];
    if (!b.is_array() || static_cast<int>(b.size()) != t.dim + 1) fail(where, "betti must list b^0..b^dim");
    std::vector<long long> betti;
    long long alt = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const long long x = as_integer(b[i], where + ".betti");
      if (x < 0) fail(where, "negative Betti number");
      betti.push_back(x);
      alt += (i % 2 == 0 ? x : -x);
    }
    if (alt != t.chi) fail(where, "alternating sum of betti differs from chi");
    t.betti = std::move(betti);
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail(where, "label must be a string");
    t.label = j["label"].get<std::string>();
  }
  if (t.dim % 2 == 1 && t.chi != 0) fail(where, "closed odd-dimensional pieces have chi = 0");
  return t;
}

SurgeryNode parse_surgery(const Json& j, const std::map<std::string, TopInvariants>& refs) {
  const std::string where = "surgery node";
  if (!j.is_object()) fail(where, "expected a JSON object");
  only_keys(j, {"op", "label", "invariants", "ref", "parts", "along", "copies", "novikov_ok", "note"}, where);
  SurgeryNode n;
  if (j.contains("op")) {
    if (!j["op"].is_string()) fail(where, "'op' must be a string");
    n.op = j["op"].get<std::string>();
  }
  static const std::set<std::string> ops = {"leaf", "glue", "excise", "connected_sum", "product_s1"};
  if (!ops.count(n.op)) fail(where, "unknown op '" + n.op + "'");
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail(where, "label must be a string");
    n.label = j["label"].get<std::string>();
  }
  if (j.contains("note")) {
    if (!j["note"].is_string()) fail(where, "note must be a string");
    n.note = j["note"].get<std::string>();
  }
  if (j.contains("novikov_ok")) {
    if (!j["novikov_ok"].is_boolean()) fail(where, "novikov_ok must be a boolean");
    n.novikov_ok = j["novikov_ok"].get<bool>();
  }
  if (j.contains("copies")) {
    n.copies = as_integer(j["copies"], where + ".copies");
    if (n.copies < 0) fail(where, "copies must be non-negative");
  }
  if (n.op == "leaf") {
    if (j.contains("ref") == j.contains("invariants")) fail(where, "a leaf needs exactly one of 'invariants' or 'ref'");
    if (j.contains("ref")) {
      if (!j["ref"].is_string()) fail(where, "ref must be a string");
      const std::string r = j["ref"].get<std::string>();
      const auto it = refs.find(r);
      if (it == refs.end()) fail(where, "unknown ref '" + r + "'");
      n.invariants = it->second;
    } else {
      n.invariants = parse_invariants(j["invariants"]);
    }
    if (n.label.empty()) n.label = n.invariants.label;
    if (n.invariants.label.empty()) n.invariants.label = n.label;
    return n;
  }
  if (j.contains("invariants") || j.contains("ref")) fail(where, "only leaves carry 'invariants' or 'ref'");
  const auto children = [&](const char* key, std::vector<SurgeryNode>& out) {
    if (!j.contains(key)) return;
    const Json& c = j[key];
    if (c.is_array()) {
      for (const auto& x : c) out.push_back(parse_surgery(x, refs));
    } else if (c.is_object()) {
      out.push_back(parse_surgery(c, refs));
    } else {
      fail(where, std::string("'") + key + "' must be an object or an array");
    }
  };
  children("parts", n.parts);
  children("along", n.along);
  return n;
}

IndexInput parse_index_input(const Json& j) {
  const std::string where = "index input";
  if (!j.is_object()) fail(where, "expected a JSON object");
  only_keys(j, {"formula", "fields", "orientation", "note"}, where);
  IndexInput in;
  const Json& f = require(j, "formula", where);
  if (!f.is_string()) fail(where, "'formula' must be a string");
  in.formula = f.get<std::string>();
  const IndexFormula& spec = index_formula(in.formula);
  if (j.contains("orientation")) {
    if (!j["orientation"].is_string()) fail(where, "'orientation' must be a string");
    in.orientation = parse_orientation(j["orientation"].get<std::string>());
  }
  const Json& fields = require(j, "fields", where);
  if (!fields.is_object()) fail(where, "'fields' must be an object");
  for (const auto& [k, v] : fields.items()) {
    const bool real = std::find(spec.real_fields.begin(), spec.real_fields.end(), k) != spec.real_fields.end();
    if (real) {
      if (!v.is_number()) fail(where, "field '" + k + "' must be a number");
      in.real_fields[k] = v.get<double>();
    } else {
      in.fields[k] = as_integer(v, where + ".fields." + k);
    }
  }
  return in;
}

}  // namespace cayley
