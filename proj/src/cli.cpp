#include "cayley/cli.hpp"

#include "cayley/calib.hpp"
#include "cayley/index.hpp"
#include "cayley/reproduce.hpp"
#include "cayley/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace cayley {

namespace {

struct Flags {
  bool exact = false;
  bool flt = false;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string form = "builtin:spin7";
  int restarts = 50;
  double tol = kComassTol;
  std::string vectors;
  std::string input;
  int example = 0;
  std::string output = "text";
  int jobs = 1;
};

Json scalar_json(const Rational& x) {
  return to_string(x);
}

Json scalar_json(double x) {
  return x;
}

Json vectors_json(const std::vector<Vector<double>>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v);
  return a;
}

/// builtin:<name> or a form file; always parsed exactly, cast for float mode.
struct LoadedForm {
  std::string name;
  KForm<Rational> form{8, 4};
};

LoadedForm load_form(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string name = spec.substr(prefix.size());
    return {name, builtin_form<Rational>(name).form};
  }
  return {"file:" + spec, parse_form(read_json_file(spec))};
}

Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"cases", c.cases},
                      {"max_residual", c.max_residual},
                      {"detail", c.detail}});
  }
  Json j;
  j["checks"] = checks;
  j["max_residual"] = r.max_residual;
  j["passed"] = static_cast<int>(r.checks.size()) - r.failed();
  j["failed"] = r.failed();
  return j;
}

int cmd_verify(const Flags& f, Json& rep) {
  const LoadedForm lf = load_form(f.form);
  if (lf.form.dim() != 8 || lf.form.degree() != 4) throw InputError("verify expects a 4-form on R^8");
  rep["inputs"] = {{"form", lf.name}, {"mode", f.exact ? "exact" : "float"}};
  SuiteReport s;
  if (f.exact) {
    s = run_identity_suite_exact(lf.form);
  } else {
    if (f.trials < 0) throw InputError("--trials must be non-negative");
    rep["inputs"]["seed"] = f.seed;
    rep["inputs"]["trials"] = f.trials;
    s = run_identity_suite_float(lf.form.cast<double>(), SuiteOptions{f.trials, f.seed, 1e-10});
  }
  rep["results"] = suite_json(s);
  rep["status"] = s.failed() == 0 ? "pass" : "fail";
  return s.failed() == 0 ? kExitOk : kExitFailure;
}

int cmd_comass(const Flags& f, Json& rep) {
  const LoadedForm lf = load_form(f.form);
  if (f.restarts < 1) throw InputError("--restarts must be positive");
  if (!(f.tol > 0)) throw InputError("--tol must be positive");
  if (f.jobs < 1) throw InputError("--jobs must be positive");
  ComassOptions o;
  o.restarts = f.restarts;
  o.tol = f.tol;
  o.seed = f.seed;
  o.jobs = f.jobs;
  rep["inputs"] = {{"form", lf.name}, {"mode", "float"}, {"restarts", f.restarts}, {"tol", f.tol}, {"seed", f.seed}};
  const ComassResult r = comass_estimate(lf.form.cast<double>(), o);
  rep["results"] = {{"comass", r.value},
                    {"argmax", vectors_json(r.argmax)},
                    {"best_restart", r.best_restart},
                    {"restarts", r.restarts},
                    {"converged_restarts", r.converged_restarts},
                    {"iterations", r.iterations},
                    {"grad_norm", r.grad_norm},
                    {"warning", r.warning}};
  rep["status"] = r.warning ? "warning" : "ok";
  return kExitOk;
}

template <class T>
Json plane_report(const KForm<Rational>& form, const PlaneInput& p, const std::string& form_name) {
  std::vector<Vector<T>> spans;
  for (const auto& v : p.vectors) {
    if constexpr (is_exact_v<T>) {
      spans.push_back(v);
    } else {
      Vector<T> w;
      for (const auto& x : v) w.push_back(to_double(x));
      spans.push_back(std::move(w));
    }
  }
  const OrientedPlane<T> V(std::move(spans));
  const KForm<T> phi = form.template cast<T>();
  if (phi.dim() != p.dim || phi.degree() != p.degree) {
    throw InputError("form of degree " + std::to_string(phi.degree()) + " on R^" + std::to_string(phi.dim()) +
                     " cannot be evaluated on a " + std::to_string(p.degree) + "-plane in R^" + std::to_string(p.dim));
  }
  Json r;
  r["gram_det"] = scalar_json(V.gram_det());
  r["calibration_value"] = scalar_json(restrict_form(phi, V));
  if constexpr (is_exact_v<T>) r["signed_square"] = to_string(restricted_square(phi, V));
  if (p.dim == 8 && p.degree == 4 && (form_name == "spin7" || form_name.rfind("file:", 0) == 0 || form_name == "spin7-sl" ||
                                      form_name == "spin7-g2")) {
    const CayleyResult<T> c = cayley_test(phi, V);
    r["verdict"] = to_string(c.verdict);
    r["tau_norm"] = c.tau_norm;
    r["value"] = c.value;
    r["tau_vanishes"] = c.tau_vanishes;
    r["calibrated"] = c.calibrated;
    r["criteria_agree"] = c.agree;
  }
  return r;
}

int cmd_plane(const Flags& f, Json& rep) {
  if (f.vectors.empty()) throw InputError("plane needs --vectors <file>");
  const LoadedForm lf = load_form(f.form);
  const PlaneInput p = parse_plane(read_json_file(f.vectors));
  rep["inputs"] = {{"form", lf.name}, {"mode", f.exact ? "exact" : "float"}, {"vectors", f.vectors}};
  rep["results"] = f.exact ? plane_report<Rational>(lf.form, p, lf.name) : plane_report<double>(lf.form, p, lf.name);
  const bool agree = !rep["results"].contains("criteria_agree") || rep["results"]["criteria_agree"].get<bool>();
  rep["status"] = agree ? "ok" : "criteria-disagree";
  return agree ? kExitOk : kExitFailure;
}

int cmd_index(const Flags& f, Json& rep) {
  if (f.input.empty()) throw InputError("index needs --input <file>");
  const Json in = read_json_file(f.input);
  const IndexInput ii = parse_index_input(in);
  rep["inputs"] = {{"input", f.input}, {"formula", ii.formula}, {"orientation", to_string(ii.orientation)}};
  const IndexResult r = evaluate_index(ii.formula, ii.fields, ii.orientation, ii.real_fields);
  Json rows = Json::array();
  for (const auto& d : r.derivation) rows.push_back({{"term", d.quantity}, {"expression", d.expression}, {"value", d.value}});
  rep["derivation"] = rows;
  if (!r.warning.empty()) rep["warning"] = r.warning;
  if (r.index) {
    rep["index"] = *r.index;
  } else {
    rep["index"] = r.value;
  }
  return kExitOk;
}

Json surgery_rows(const std::vector<DerivationRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json sigma = r.sigma ? Json(*r.sigma) : Json("n/a");
    a.push_back({{"node", r.node}, {"op", r.op}, {"label", r.label}, {"dim", r.dim}, {"chi", r.chi}, {"sigma", sigma},
                 {"formula", r.formula}});
  }
  return a;
}

int cmd_surgery(const Flags& f, Json& rep) {
  if (f.input.empty()) throw InputError("surgery needs --input <file>");
  const SurgeryResult r = evaluate(parse_surgery(read_json_file(f.input)));
  rep["inputs"] = {{"input", f.input}};
  rep["derivation"] = surgery_rows(r.rows);
  rep["dim"] = r.value.dim;
  rep["chi"] = r.value.chi;
  rep["sigma"] = r.value.sigma ? Json(*r.value.sigma) : Json("n/a");
  return kExitOk;
}

int cmd_reproduce(const Flags& f, Json& rep) {
  const ReproduceReport r = reproduce_example(f.example);
  rep["inputs"] = {{"example", f.example}, {"fixture_digest", digest(Json::parse(example_fixture(f.example)))}};
  rep["title"] = r.title;
  rep["compactification"] = surgery_rows(r.compactification);
  rep["complement"] = surgery_rows(r.complement);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"quantity", row.quantity},
                    {"derivation", row.derivation},
                    {"value", row.value},
                    {"expected", row.expected ? Json(*row.expected) : Json("-")},
                    {"ok", row.ok}});
  }
  rep["derivation"] = rows;
  rep["mismatches"] = r.mismatches;
  rep["status"] = r.passed ? "pass" : "fail";
  if (r.expected_index) rep["expected_index"] = *r.expected_index;
  rep["index"] = r.index_value;
  return r.passed ? kExitOk : kExitFailure;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const Json& j, const std::string& prefix, std::ostringstream& os) {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      render(v, key, os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      std::vector<std::string> cols;
      for (const auto& [c, x] : v.front().items()) {
        (void)x;
        cols.push_back(c);
      }
      std::vector<std::size_t> width(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& row : v) width[c] = std::max(width[c], cell(row[cols[c]]).size());
      }
      os << key << ":\n";
      for (std::size_t c = 0; c < cols.size(); ++c) os << "  " << std::left << std::setw(static_cast<int>(width[c])) << cols[c];
      os << "\n";
      for (const auto& row : v) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          os << "  " << std::left << std::setw(static_cast<int>(width[c])) << cell(row[cols[c]]);
        }
        os << "\n";
      }
    } else {
      os << key << " = " << cell(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, "", os);
  std::string s = os.str();
  // Trailing padding of the last table column.
  std::string out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string digest(const Json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley calibration toolkit"};
  app.require_subcommand(1);
  Flags f;

  const auto add_mode = [&](CLI::App* c) {
    auto* e = c->add_flag("--exact", f.exact, "exact rational arithmetic");
    auto* fl = c->add_flag("--float", f.flt, "floating-point arithmetic (default)");
    e->excludes(fl);
  };
  const auto add_output = [&](CLI::App* c) {
    c->add_option("--output", f.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  add_mode(verify);
  verify->add_option("--seed", f.seed, "random seed");
  verify->add_option("--trials", f.trials, "random cases per identity (float mode)");
  verify->add_option("--form", f.form, "builtin:<name> or form file");
  add_output(verify);

  auto* comass = app.add_subcommand("comass", "estimate the comass of a form");
  add_mode(comass);
  comass->add_option("--form", f.form, "builtin:<name> or form file");
  comass->add_option("--restarts", f.restarts, "number of restarts");
  comass->add_option("--tol", f.tol, "gradient tolerance");
  comass->add_option("--seed", f.seed, "random seed");
  comass->add_option("--jobs", f.jobs, "worker threads");
  add_output(comass);

  auto* plane = app.add_subcommand("plane", "evaluate a form on a plane and test the Cayley condition");
  add_mode(plane);
  plane->add_option("--form", f.form, "builtin:<name> or form file");
  plane->add_option("--vectors", f.vectors, "plane file")->required();
  add_output(plane);

  auto* index = app.add_subcommand("index", "evaluate an index formula");
  add_mode(index);
  index->add_option("--input", f.input, "index input file")->required();
  add_output(index);

  auto* surgery = app.add_subcommand("surgery", "evaluate a surgery expression tree");
  add_mode(surgery);
  surgery->add_option("--input", f.input, "surgery file")->required();
  add_output(surgery);

  auto* reproduce = app.add_subcommand("reproduce", "derive a worked example end to end");
  add_mode(reproduce);
  reproduce->add_option("--example", f.example, "example number")->required();
  add_output(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json rep;
  rep["command"] = sub->get_name();
  int code = kExitOk;
  try {
    if (sub == verify) code = cmd_verify(f, rep);
    else if (sub == comass) code = cmd_comass(f, rep);
    else if (sub == plane) code = cmd_plane(f, rep);
    else if (sub == index) code = cmd_index(f, rep);
    else if (sub == surgery) code = cmd_surgery(f, rep);
    else code = cmd_reproduce(f, rep);
  } catch (const ParityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  Json ordered;
  for (const auto& [k, v] : rep.items()) {
    ordered[k] = v;
    if (k == "inputs") ordered["inputs_digest"] = digest(v);
  }
  if (f.output == "json") {
    out << ordered.dump(2) << "\n";
  } else {
    out << render_text(ordered);
  }
  return code;
}

}  // namespace cayley
