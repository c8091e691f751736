#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lapgirth/cli.hpp"

using lapgirth::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

int line_count(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "lapgirth_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string strip_timestamp(const std::string& json) {
  return std::regex_replace(json, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"\"");
}

}  // namespace

TEST_CASE("spectrum") {
  const auto k = invoke({"spectrum", "--family", "k", "3,2"});
  CHECK(k.code == 0);
  CHECK(contains(k.out, "closed form: 0, 2×2, 3, 5"));
  CHECK(contains(k.out, "exact: 0, 2×2, 3, 5"));
  const auto c = invoke({"spectrum", "--family", "cycle", "4"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "0, 2×2, 4"));
  const auto one = invoke({"spectrum", "--g6", "@"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "exact: 0\n"));
  const auto c5 = invoke({"spectrum", "--family", "cycle", "5"});
  CHECK(contains(c5.out, "[x^2 - 5*x + 5]×2"));
  CHECK(contains(c5.out, "4sin^2"));
}

TEST_CASE("count") {
  const auto a = invoke({"count", "--family", "k", "3,2", "--interval", "4", "5"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "m_G(4, 5] = 1\n"));
  CHECK(contains(a.out, "upper endpoint 5 is an eigenvalue: yes"));
  CHECK(contains(a.out, "lower endpoint 4 is an eigenvalue: no"));
  CHECK(contains(invoke({"count", "--family", "cycle", "6", "--interval", "3", "6"}).out, "m_G(3, 6] = 1\n"));
  CHECK(contains(invoke({"count", "--family", "path", "2", "--interval", "0", "2"}).out, "m_G(0, 2] = 1\n"));
  CHECK(contains(invoke({"count", "--g6", "Bw", "--interval", "29/10", "3"}).out, "m_G(29/10, 3] = 2\n"));
  CHECK(contains(invoke({"count", "--g6", "Bw", "--interval", "-1", "0.5"}).out, "m_G(-1, 1/2] = 1\n"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  const auto degenerate = invoke({"count", "--g6", "Bw", "--interval", "3", "3"});
  CHECK(degenerate.code == 2);
  CHECK(contains(degenerate.err, "degenerate"));
  const auto bad_g6 = invoke({"spectrum", "--g6", "B!"});
  CHECK(bad_g6.code == 2);
  CHECK(contains(bad_g6.err, "position 1"));
  const auto bad_family = invoke({"spectrum", "--family", "k", "3,x"});
  CHECK(bad_family.code == 2);
  CHECK(contains(bad_family.err, "position 2"));
  CHECK(invoke({"spectrum", "--family", "wheel", "5"}).code == 2);
  CHECK(invoke({"spectrum", "--family", "gadget", "G9"}).code == 2);
  CHECK(invoke({"verify", "--nmax", "10"}).code == 2);
  CHECK(invoke({"verify"}).code == 2);
  CHECK(invoke({"enumerate", "12"}).code == 2);
  CHECK(invoke({"spectrum"}).code == 2);
}

TEST_CASE("enumerate") {
  const auto four = invoke({"enumerate", "4"});
  CHECK(four.code == 0);
  CHECK(line_count(four.out) == 6);
  CHECK(invoke({"enumerate", "1"}).out == "@\n");
  CHECK(line_count(invoke({"enumerate", "6"}).out) == 112);
  CHECK(invoke({"enumerate", "6", "--jobs", "3"}).out == invoke({"enumerate", "6", "--jobs", "1"}).out);
}

TEST_CASE("verify") {
  const auto json_path = scratch("nmax5.json");
  const auto csv_path = scratch("nmax5.csv");
  const auto r = invoke({"verify", "--nmax", "5", "--json", json_path.string(), "--csv", csv_path.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "violations: 0"));
  const auto doc = nlohmann::json::parse(read_file(json_path));
  CHECK(doc["summary"]["total"] == 1 + 1 + 2 + 6 + 21);
  CHECK(doc["summary"]["violations"].empty());
  CHECK(doc["summary"]["equality_cases"]["C3"] == nlohmann::json::array({"Bw"}));
  CHECK(doc["summary"]["equality_cases"]["K32"].size() == 1);
  CHECK(doc["summary"]["equality_cases"]["U1"].size() == 1);
  CHECK(doc["summary"]["equality_cases"]["Other"].empty());
  CHECK(doc["summary"]["triangle_with_pendant"]["n"] == 4);
  CHECK(doc["summary"]["triangle_with_pendant"]["equality"] == false);
  CHECK(doc["meta"]["command"] == "verify --nmax 5 --json " + json_path.string() + " --csv " + csv_path.string());
  CHECK(line_count(read_file(csv_path)) == 32);

  const auto three = invoke({"verify", "--nmax", "3", "--json", "-"});
  CHECK(three.code == 0);
  const auto start = three.out.find('{');
  const auto end = three.out.rfind("}\n");
  REQUIRE(start != std::string::npos);
  const auto doc3 = nlohmann::json::parse(three.out.substr(start, end - start + 1));
  CHECK(doc3["summary"]["equality_cases"]["C3"] == nlohmann::json::array({"Bw"}));
  CHECK(doc3["summary"]["equality_cases"]["K32"].empty());
  CHECK(doc3["summary"]["equality_cases"]["U1"].empty());
}

TEST_CASE("verify is reproducible modulo the timestamp") {
  const auto path = scratch("repeat.json");
  CHECK(invoke({"verify", "--nmax", "6", "--json", path.string(), "--jobs", "1"}).code == 0);
  const std::string ja = read_file(path);
  CHECK(invoke({"verify", "--nmax", "6", "--json", path.string(), "--jobs", "4"}).code == 0);
  const std::string jb = read_file(path);
  CHECK(contains(ja, "\"timestamp\""));
  // The command line differs in --jobs only; normalise it too.
  const auto normalise = [](std::string s) {
    s = strip_timestamp(s);
    return std::regex_replace(s, std::regex("--jobs [0-9]+"), "--jobs N");
  };
  CHECK(normalise(ja) == normalise(jb));
}

TEST_CASE("verify over a graph6 file") {
  const auto empty = scratch("empty.g6");
  { std::ofstream(empty).flush(); }
  const auto e = invoke({"verify", "--g6-file", empty.string(), "--json", "-"});
  CHECK(e.code == 0);
  CHECK(contains(e.out, "\"total\": 0"));

  const auto some = scratch("some.g6");
  {
    std::ofstream f(some);
    f << "Bw\nDrw\n\nCF\n";  // triangle, a 5-vertex graph, and a star
  }
  const auto s = invoke({"verify", "--g6-file", some.string()});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "graphs scanned: 3"));

  const auto bad = scratch("bad.g6");
  {
    std::ofstream f(bad);
    f << "Bw\nB!\n";
  }
  const auto b = invoke({"verify", "--g6-file", bad.string()});
  CHECK(b.code == 2);
  CHECK(contains(b.err, ":2:"));

  CHECK(invoke({"verify", "--g6-file", scratch("missing.g6").string()}).code == 3);
}
