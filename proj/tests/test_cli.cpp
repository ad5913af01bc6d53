#include "doctest.h"

#include "qgrass/cli.hpp"
#include "qgrass/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qgrass;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qgrass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("qgrass-cli-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

} // namespace

TEST_CASE("straighten prints the normal form") {
  auto r = cli({"straighten", "--k", "2", "--n", "4", "[13][12]"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^-1 [12][13]\n");
  auto j = Json::parse(cli({"--json", "straighten", "--k", "2", "--n", "4", "[24][13]"}).out);
  CHECK(j["schema"] == "qgrass.element/1");
  CHECK(j["terms"].size() == 2);
  CHECK(cli({"straighten", "--k", "2", "--n", "4", "[15]"}).code == 2);
}

TEST_CASE("verify-lemmas reports and rejects") {
  auto r = cli({"verify-lemmas", "--k", "2", "--n", "4", "--all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS hh1") != std::string::npos);

  auto bad = cli({"verify-lemmas", "--k", "1", "--n", "3", "--lemma", "hh1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("hh1") != std::string::npos);
  CHECK(cli({"verify-lemmas", "--k", "2", "--n", "4", "--lemma", "no-such"}).code == 2);
  CHECK(cli({"verify-lemmas", "--k", "2", "--n", "4"}).code == 2);
  CHECK(cli({"verify-lemmas", "--k", "3", "--n", "7", "--all"}).code == 2);

  auto dir = scratch("verify");
  auto stem = (dir / "cert").string();
  auto j = cli({"--json", "--out", stem, "verify-lemmas", "--k", "2", "--n", "4", "--lemma", "leibniz", "--lemma",
                "u-w-commutation"});
  CHECK(j.code == 0);
  auto cert = Json::parse(j.out);
  CHECK(cert["schema"] == "qgrass.lemma-certificate/1");
  CHECK(cert["checks"].size() == 2);
  CHECK(std::filesystem::exists(stem + ".json"));
  CHECK(std::filesystem::exists(stem + ".txt"));
}

TEST_CASE("hh1 table, JSON and argument checks") {
  auto r = cli({"hh1", "--k", "2", "--n", "4", "--cap", "2", "--shifts", "-1,0,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D_1 D_2 D_3 D_4") != std::string::npos);
  CHECK(r.out.find("limitation:") != std::string::npos);

  auto a = cli({"--json", "hh1", "--k", "2", "--n", "4", "--cap", "2", "--shifts=-1..1", "--q0", "2/3"});
  auto b = cli({"--json", "--serial", "hh1", "--k", "2", "--n", "4", "--cap", "2", "--shifts", "-1,0,1", "--q0", "2/3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = Json::parse(a.out);
  CHECK(j["schema"] == "qgrass.hh1-report/1");
  CHECK(j["shifts"][1]["dim_hh1"] == 4);
  CHECK(j["specialisation"] == "2/3");

  CHECK(cli({"hh1", "--k", "1", "--n", "4"}).code == 2);
  CHECK(cli({"hh1", "--k", "2", "--n", "4", "--q0", "1"}).code == 2);
  CHECK(cli({"hh1", "--k", "2", "--n", "4", "--q0", "0"}).code == 2);
  CHECK(cli({"hh1", "--k", "2", "--n", "4", "--shifts", "a,b"}).code == 2);
  CHECK(cli({"hh1", "--k", "2", "--n", "4", "--cap", "1"}).code == 2);
}

TEST_CASE("dehom-check and decompose") {
  CHECK(cli({"dehom-check", "--k", "2", "--n", "5"}).code == 0);

  auto r = cli({"--json", "decompose", "--m", "2", "--n", "3"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["results"].size() == 3);
  for (const auto& item : j["results"]) CHECK(item["reconstructs"] == true);

  auto dir = scratch("decompose");
  auto file = dir / "d.json";
  std::ofstream(file) << to_json(row_derivation(MatShape{2, 3}, 1) + col_derivation(MatShape{2, 3}, 1) -
                                 col_derivation(MatShape{2, 3}, 2))
                             .dump();
  CHECK(cli({"decompose", "--input", file.string()}).code == 0);
  std::ofstream(file) << "{\"schema\": \"other\"}";
  CHECK(cli({"decompose", "--input", file.string()}).code == 2);
}

TEST_CASE("cache warm, list and clear") {
  auto dir = scratch("cache");
  auto warm = cli({"--cache-dir", dir.string(), "cache", "warm", "--k", "2", "--n", "5", "--deg", "2"});
  CHECK(warm.code == 0);
  auto list = cli({"--cache-dir", dir.string(), "cache", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("\n2       5       2") != std::string::npos);
  auto clear = cli({"--cache-dir", dir.string(), "cache", "clear"});
  CHECK(clear.out.find("removed 0") == std::string::npos);
  CHECK(cli({"--cache-dir", dir.string(), "cache", "list"}).out.find("\n2 ") == std::string::npos);
  CHECK(cli({"cache"}).code == 2);
}
