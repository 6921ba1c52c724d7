#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kirbyspin/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = kirby::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch files live in one per-process directory, removed at exit.
const fs::path& scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("kirby_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kTrace31 = R"({"names":["K1","K2"],"matrix":[[3,1],[1,1]]})";

}  // namespace

TEST_CASE("snf prints the homology profile") {
  Run r = cli({"snf", write_file("t31.json", kTrace31)});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["invariant_factors"] == json::array({1, 2}));
  CHECK(j["b1"] == 0);
  CHECK(j["order"] == 2);
}

TEST_CASE("char-sublinks lists members and count") {
  Run r = cli({"char-sublinks", write_file("t31.json", kTrace31)});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["enumerated"] == true);
  REQUIRE(j["sublinks"].size() == 2);
  CHECK(j["sublinks"][0]["members"] == json::array({"K1"}));
  CHECK(j["sublinks"][1]["members"] == json::array({"K2"}));
}

TEST_CASE("KIRBY_SPIN_MAX_ENUM lowers the enumeration cap") {
  std::string f =
      write_file("even2.json", R"({"names":["A","B"],"matrix":[[2,0],[0,4]]})");
  ::setenv("KIRBY_SPIN_MAX_ENUM", "3", 1);
  Run r = cli({"char-sublinks", f});
  ::unsetenv("KIRBY_SPIN_MAX_ENUM");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == 4);
  CHECK(j["enumerated"] == false);
  CHECK(j["sublinks"].empty());

  ::setenv("KIRBY_SPIN_MAX_ENUM", "zebra", 1);
  r = cli({"char-sublinks", f});
  ::unsetenv("KIRBY_SPIN_MAX_ENUM");
  CHECK(r.code == 2);
}

TEST_CASE("even-chain emits coefficients and checked value") {
  Run r = cli({"even-chain", "5", "4"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["coefficients"] == json::array({2, 2, 2, 2}));
  CHECK(j["b2"] == 4);
  CHECK(j["value"] == "5/4");

  CHECK(cli({"even-chain", "2", "4"}).code == 2);  // gcd failure
  CHECK(cli({"even-chain", "1", "3"}).code == 2);  // odd denominator
}

TEST_CASE("run executes a script and emits a resumable state") {
  std::string link = write_file("t31.json", kTrace31);
  std::string script = write_file("s.kcs",
                                  "blowup -1 as e0\n"
                                  "assert char\n");
  std::string state = (scratch() / "state.json").string();
  Run r = cli({"run", link, "--char", "K1", "--script", script, "--emit-state",
               state});
  REQUIRE(r.code == 0);
  json summary = json::parse(r.out);
  CHECK(summary["b2"] == 3);
  CHECK(summary["sigma"] == 1);
  CHECK(summary["char"] == json::array({"K1", "e0"}));
  CHECK(summary["tally"]["up_minus"] == 1);
  CHECK(summary["script_sha"].get<std::string>().size() == 64);

  // the emitted state is a valid input for a follow-up run
  std::string undo = write_file("undo.kcs", "blowdown e0\n");
  Run r2 = cli({"run", state, "--script", undo});
  REQUIRE(r2.code == 0);
  json s2 = json::parse(r2.out);
  CHECK(s2["b2"] == 2);
  CHECK(s2["char"] == json::array({"K1"}));
  CHECK(s2["tally"]["up_minus"] == 1);
  CHECK(s2["tally"]["down_minus"] == 1);

  // --char conflicts with an already-charged state file
  CHECK(cli({"run", state, "--char", "K1", "--script", undo}).code == 2);
}

TEST_CASE("run surfaces script failures as exit 2 with the statement index") {
  std::string link = write_file("t31.json", kTrace31);
  std::string script = write_file("bad.kcs", "blowdown K2\n");
  Run r = cli({"run", link, "--char", "K1", "--script", script});
  CHECK(r.code == 2);
  CHECK(r.err.find("statement 1") != std::string::npos);
}

TEST_CASE("obstruct exit code separates the verdicts") {
  Run r = cli({"obstruct", "1", "1", "5"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "obstructed");
  CHECK(j["glued"][0]["b2"] == 26);
  CHECK(j["glued"][0]["sigma"] == 24);

  CHECK(cli({"obstruct", "1", "1", "1"}).code == 1);
  CHECK(cli({"obstruct", "2", "1", "5"}).code == 2);  // even framing
}

TEST_CASE("min-n reports the threshold or none") {
  Run r = cli({"min-n", "3", "1", "--cap", "21"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["min_n"] == 5);

  r = cli({"min-n", "1", "1", "--cap", "1"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["min_n"].is_null());
}

TEST_CASE("--emit writes the document to a file instead of stdout") {
  fs::path out = scratch() / "cert.json";
  Run r = cli({"obstruct", "1", "1", "3", "--emit", out.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  json j = json::parse(in);
  CHECK(j["verdict"] == "obstructed");
}

TEST_CASE("usage errors and help") {
  CHECK(cli({"snf"}).code == 2);                 // missing argument
  CHECK(cli({"warble"}).code == 2);              // unknown command
  CHECK(cli({}).code == 2);                      // no command
  CHECK(cli({"snf", "a.json", "--wat"}).code == 2);
  CHECK(cli({"snf", "/nonexistent_kirby.json"}).code == 2);

  Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("obstruct") != std::string::npos);
}
