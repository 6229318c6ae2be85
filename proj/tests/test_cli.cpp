#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"

using coxreg::cli::Json;
using coxreg::cli::run;

namespace {

const std::string kData = COXREG_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

bool is_number(const std::string& s) {
  static const std::regex number(R"(-?\d+(\.\d+)?([eE][-+]?\d+)?)");
  return std::regex_match(s, number);
}

void numeric_leaves(const Json& j, std::vector<std::string>& out) {
  if (j.is_structured()) {
    for (const auto& x : j) numeric_leaves(x, out);
    return;
  }
  const std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (is_number(s)) out.push_back(s);
}

// Numbers in a text report, ignoring the key part of each line.
std::vector<std::string> numbers_in_text(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    std::string values = line.substr(colon + 2);
    for (char& c : values)
      if (c == '{' || c == '}' || c == ',') c = ' ';
    std::istringstream tokens(values);
    for (std::string t; tokens >> t;)
      if (is_number(t)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("cli: regularity with witness") {
  auto r = invoke({"reg", "--field", "q", "--method", "links", data("pentagon.cplx")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("value: 2") != std::string::npos);
  CHECK(r.out.find("witness_face:") != std::string::npos);
  CHECK(r.out.find("witness_degree: 1") != std::string::npos);

  auto all = invoke({"reg", "--method", "all", "--field", "f2", "--json", data("rp2.cplx")});
  REQUIRE(all.code == 0);
  const auto j = Json::parse(all.out);
  CHECK(j["result"]["value"] == 3);
  CHECK(j["result"]["agree"] == true);
}

TEST_CASE("cli: pentagon entry-size table") {
  auto r = invoke({"coxeter-table", "--max-len", "10", "--json", data("pentagon.cplx")});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  std::vector<long long> entries;
  for (const auto& level : j["result"]["levels"]) entries.push_back(level["max_entry"].get<long long>());
  CHECK(entries == std::vector<long long>{1, 2, 4, 8, 18, 39, 84, 180, 388, 836, 1801});
}

TEST_CASE("cli: construct writes the complex and its certificate") {
  const auto dir = std::filesystem::temp_directory_path() / "coxreg_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "s.cplx").string();
  auto r = invoke({"construct", "--k", "4", "--mod", "5", "-o", out, data("twopoints.cplx")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("certificate.displacement: CERTIFIED") != std::string::npos);
  const auto s = coxreg::read_cplx_file(out);
  CHECK(s.vertex_count() == 10);
  CHECK(s.facets().size() == 10);
  std::ifstream side(out + ".json");
  REQUIRE(side);
  const auto cert = Json::parse(side);
  CHECK(cert["schema"] == 1);
  CHECK(cert["certificate"]["displacement"] == "CERTIFIED");
  CHECK(cert["certificate"]["link_check"] == true);

  // Text mode without -o prints a loadable .cplx with the report as comments.
  auto text = invoke({"construct", "--k", "4", "--mod", "5", data("twopoints.cplx")});
  REQUIRE(text.code == 0);
  CHECK(coxreg::parse_cplx(text.out).vertex_count() == 10);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli: kernel search and word evaluation") {
  auto w = invoke({"coxeter-search", "--mod", "5", "--word", "1 3 1 3 1 3 1 3 1 3", "--json", data("pentagon.cplx")});
  REQUIRE(w.code == 0);
  CHECK(Json::parse(w.out)["result"]["word"]["identity_mod_m"] == true);

  auto s = invoke({"coxeter-search", "--mod", "5", "--k", "5", "--search", "word-length", "--json",
                   data("pentagon.cplx")});
  REQUIRE(s.code == 0);
  const auto j = Json::parse(s.out)["result"]["search"];
  CHECK(j["status"] == "COUNTEREXAMPLE");
  CHECK(j["witness_displacement"] == 10);

  CHECK(invoke({"coxeter-search", "--mod", "5", "--word", "1 9", data("pentagon.cplx")}).code == 2);
}

TEST_CASE("cli: JSON reports round-trip through the echoed invocation") {
  const std::vector<std::vector<std::string>> cases{
      {"betti", "--field", "f2", "--json", data("rp2.cplx")},
      {"vcd", "--json", data("rp2.cplx")},
      {"claim", "--field", "z", "--json", data("pentagon.cplx")},
      {"largeness", "--json", data("octahedron.cplx")},
      {"index", "--json", data("heptagon.cplx")},
      {"cm", "--field", "f2", "--json", data("rp2.cplx")},
      {"bounds", "--p", "2", "--n", "12", "--d", "2", "--r", "3", "--json"},
      {"gen", "random", "--n", "8", "--density", "0.4", "--seed", "9", "--json"},
      {"dual", "--json", data("pentagon.cplx")},
      {"facecomplex", "--json", data("twopoints.cplx")},
  };
  for (const auto& args : cases) {
    auto first = invoke(args);
    REQUIRE(first.code == 0);
    const auto j = Json::parse(first.out);
    CHECK(j["schema"] == 1);
    const auto argv = j["invocation"]["argv"].get<std::vector<std::string>>();
    CHECK(argv == args);
    auto again = invoke(argv);
    CHECK(again.out == first.out);
  }
}

TEST_CASE("cli: text and JSON reports carry the same numbers") {
  const std::vector<std::vector<std::string>> cases{
      {"betti", "--field", "q", data("pentagon.cplx")},
      {"reg", "--method", "all", data("rp2.cplx")},
      {"vcd", data("rp2.cplx")},
      {"coxeter-table", "--max-len", "6", data("pentagon.cplx")},
      {"largeness", data("heptagon.cplx")},
      {"bounds", "--p", "3", "--n", "20", "--d", "3", "--r", "3"},
  };
  for (auto args : cases) {
    auto text = invoke(args);
    args.push_back("--json");
    auto json = invoke(args);
    REQUIRE(text.code == 0);
    REQUIRE(json.code == 0);
    std::vector<std::string> from_json;
    numeric_leaves(Json::parse(json.out)["result"], from_json);
    CHECK(numbers_in_text(text.out) == from_json);
  }
}

TEST_CASE("cli: reports do not depend on --threads") {
  const std::vector<std::vector<std::string>> cases{
      {"betti", "--field", "f2", data("rp2.cplx")},
      {"reg", "--method", "all", data("heptagon.cplx")},
      {"vcd", data("rp2.cplx")},
      {"claim", "--field", "z", data("octahedron.cplx")},
      {"coxeter-table", "--max-len", "8", data("pentagon.cplx")},
  };
  for (auto args : cases) {
    auto one = invoke(args);
    args.insert(args.begin() + 1, {"--threads", "3"});
    auto three = invoke(args);
    CHECK(one.code == 0);
    CHECK(one.out == three.out);
  }
}

TEST_CASE("cli: exit codes") {
  auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Exit codes") != std::string::npos);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"reg", "--bogus", data("pentagon.cplx")}).code == 2);
  CHECK(invoke({"reg", "/nonexistent.cplx"}).code == 2);
  CHECK(invoke({"reg", "--field", "z", data("pentagon.cplx")}).code == 2);
  CHECK(invoke({"reg", "--field", "f4", data("pentagon.cplx")}).code == 2);
  CHECK(invoke({"coxeter-table", "--budget", "10", data("pentagon.cplx")}).code == 3);
  CHECK(invoke({"construct", "--k", "5", "--mod", "7", "--group-budget", "100", data("pentagon.cplx")}).code == 3);
  CHECK(invoke({"construct", "--k", "4", "--mod", "2", data("twopoints.cplx")}).code == 5);
  CHECK(invoke({"construct", "--k", "5", "--mod", "5", "--search", "word-length", data("pentagon.cplx")}).code == 5);
  CHECK(invoke({"construct", "--k", "5", "--mod", "7", data("octahedron.cplx")}).code == 2);
}
