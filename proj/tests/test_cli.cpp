#include "cayley/cli.hpp"

#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace cayley;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"cayley"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const char* name) {
  return std::string(CAYLEY_TEST_DATA) + "/" + name;
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

// Every scalar leaf of the JSON report must appear verbatim in the text report.
void leaves(const Json& j, std::vector<std::string>& out) {
  if (j.is_object() || j.is_array()) {
    for (const auto& x : j) leaves(x, out);
  } else {
    out.push_back(j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

TEST_CASE("reproduce example 1 ends with the index line and exits 0") {
  const auto r = run({"reproduce", "--example", "1"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "index = -22");
}

TEST_CASE("reproduce rejects unknown examples with exit 2") {
  const auto r = run({"reproduce", "--example", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown example") != std::string::npos);
}

TEST_CASE("exact verify passes; a flipped sign fails naming the identity") {
  const auto good = run({"verify", "--exact"});
  CHECK(good.code == 0);
  const auto file = run({"verify", "--exact", "--form", data("form_phi0.json")});
  CHECK(file.code == 0);
  const auto bad = run({"verify", "--exact", "--form", data("form_phi0_flipped.json"), "--output", "json"});
  CHECK(bad.code == 1);
  const Json j = Json::parse(bad.out);
  bool named = false;
  for (const auto& c : j["results"]["checks"]) {
    if (!c["passed"].get<bool>() && c["name"].get<std::string>().rfind("spin7-form", 0) == 0) named = true;
  }
  CHECK(named);
}

TEST_CASE("float verify reports a residual below 1e-10") {
  const auto r = run({"verify", "--float", "--trials", "50", "--seed", "5", "--output", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["results"]["max_residual"].get<double>() < 1e-10);
}

TEST_CASE("comass of a blade file and of builtins") {
  const auto r = run({"comass", "--form", data("form_e1234.json"), "--restarts", "10", "--output", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["results"]["comass"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  const auto w = run({"comass", "--form", "builtin:wirtinger2", "--restarts", "10", "--output", "json"});
  CHECK(Json::parse(w.out)["results"]["comass"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(run({"comass", "--form", "builtin:nothing"}).code == 2);
}

TEST_CASE("plane command verdicts") {
  const auto r = run({"plane", "--form", "builtin:spin7", "--vectors", data("plane_e1234.json"), "--exact", "--output", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["results"]["verdict"] == "cayley+");
  CHECK(j["results"]["tau_norm"].get<double>() == 0.0);
  CHECK(j["results"]["value"].get<double>() == 1.0);
  const auto n = run({"plane", "--vectors", data("plane_e1235.json"), "--output", "json"});
  CHECK(Json::parse(n.out)["results"]["verdict"] == "not-cayley");
  CHECK(run({"plane", "--vectors", data("plane_degenerate.json"), "--exact"}).code == 2);
  CHECK(run({"plane", "--vectors", data("missing.json")}).code == 2);
}

TEST_CASE("index and surgery files") {
  const auto i = run({"index", "--input", data("index_example1.json")});
  CHECK(i.code == 0);
  CHECK(last_line(i.out) == "index = -22");
  const auto p = run({"index", "--input", data("index_parity.json")});
  CHECK(p.code == 1);
  CHECK(p.err.find("non-integer index") != std::string::npos);
  const auto s = run({"surgery", "--input", data("surgery_xbar1.json"), "--output", "json"});
  CHECK(s.code == 0);
  const Json j = Json::parse(s.out);
  CHECK(j["chi"] == 20);
  CHECK(j["sigma"] == -16);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--exact", "--float"}).code == 2);
  CHECK(run({"verify", "--output", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (const auto& args : {std::initializer_list<std::string>{"comass", "--restarts", "8", "--seed", "4", "--output", "json"},
                           std::initializer_list<std::string>{"verify", "--trials", "10", "--output", "json"},
                           std::initializer_list<std::string>{"reproduce", "--example", "2", "--output", "json"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
  }
  const auto j1 = run({"comass", "--restarts", "8", "--jobs", "1", "--output", "json"});
  const auto j4 = run({"comass", "--restarts", "8", "--jobs", "4", "--output", "json"});
  CHECK(Json::parse(j1.out)["results"] == Json::parse(j4.out)["results"]);
}

TEST_CASE("text and JSON renderings carry the same numbers") {
  for (const auto& args : {std::initializer_list<std::string>{"reproduce", "--example", "1"},
                           std::initializer_list<std::string>{"comass", "--restarts", "5"},
                           std::initializer_list<std::string>{"plane", "--vectors", data("plane_e1235.json")}}) {
    std::vector<std::string> text_args(args);
    std::vector<std::string> json_args(args);
    json_args.push_back("--output");
    json_args.push_back("json");
    const auto call = [](const std::vector<std::string>& a) {
      std::vector<std::string> storage = {"cayley"};
      storage.insert(storage.end(), a.begin(), a.end());
      std::vector<const char*> argv;
      for (const auto& s : storage) argv.push_back(s.c_str());
      std::ostringstream out, err;
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
      return out.str();
    };
    const std::string text = call(text_args);
    std::vector<std::string> vals;
    leaves(Json::parse(call(json_args)), vals);
    for (const auto& v : vals) CHECK_MESSAGE(text.find(v) != std::string::npos, v);
  }
}
