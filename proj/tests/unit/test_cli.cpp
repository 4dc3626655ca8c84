#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "csf/families.hpp"
#include "csf/graph_io.hpp"
#include "csf/inference.hpp"
#include "csf/json_io.hpp"
#include "csf/star_engine.hpp"
#include "doctest.h"
#include "paper_graphs.hpp"

namespace fam = csf::families;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = csf::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("expand a builtin family") {
    auto r = run({"expand", "--family", "paw"});
    REQUIRE(r.code == 0);
    auto j = csf::Json::parse(r.out);
    CHECK(csf::expansion_from_json(j) == csf::star_expand(fam::paw()));
    CHECK(r.out == csf::expansion_to_json(csf::star_expand(fam::paw())).dump() + "\n");

    auto pan = run({"expand", "--family", "pan", "--n", "6"});
    CHECK(csf::parse_expansion(pan.out) == csf::star_expand(fam::pan(6)));
    auto slow = run({"expand", "--family", "pan", "--n", "6", "--no-memo"});
    CHECK(slow.out == pan.out);
  }

  TEST_CASE("graph sources") {
    CHECK(run({"expand", "--graph6", "C~"}).out == run({"expand", "--family", "complete", "--n", "4"}).out);
    CHECK(run({"expand", "--file", "-"}, "n 4\n0 1\n1 2\n0 2\n2 3\n").out == run({"expand", "--family", "paw"}).out);
    auto cf = run({"leading", "--family", "cuttlefish", "--c", "4", "--t", "2"});
    CHECK(csf::Json::parse(cf.out)["partition"] == csf::Json::array({3, 2, 1}));
    auto bi = run({"expand", "--family", "bicyclic", "--type", "typeII", "--s", "4", "--t", "4", "--ell", "2"});
    CHECK(csf::parse_expansion(bi.out).coefficient({5}) == 7);
  }

  TEST_CASE("infer on a cycle") {
    auto x = run({"expand", "--family", "cycle", "--n", "8"});
    auto r = run({"infer"}, x.out);
    REQUIRE(r.code == 0);
    auto j = csf::Json::parse(r.out);
    CHECK(j["cycle_size"] == 8);
    CHECK(j["is_pure_cycle"] == true);
  }

  TEST_CASE("expand piped into infer matches in-process inference byte for byte") {
    for (const auto& g : {paper::fourteen_vertex().graph, paper::hooks_left().graph, paper::triangle_with_tree().graph,
                          paper::leading_example().graph}) {
      auto x = run({"expand", "--graph6", csf::to_graph6(g)});
      REQUIRE(x.code == 0);
      auto piped = run({"infer"}, x.out);
      auto direct = csf::report_to_json(csf::infer(csf::parse_expansion(x.out))).dump() + "\n";
      CHECK(piped.out == direct);
    }
  }

  TEST_CASE("formulas") {
    auto hook = run({"formula", "unicyclic-hook", "--n", "8", "--c", "4", "--k", "4", "--r", "4", "--m1", "1"});
    CHECK(csf::Json::parse(hook.out)["value"] == -9);
    auto words = run({"formula", "lambda-words", "--family", "path", "--n", "4", "--partition", "4"});
    CHECK(csf::Json::parse(words.out)["count"] == 1);
    auto bic = run({"formula", "bicyclic-cn", "--type", "typeII", "--s", "4", "--t", "4", "--ell", "2"});
    CHECK(csf::Json::parse(bic.out)["value"] == 7);
    CHECK(run({"formula", "nope"}).code == 2);
  }

  TEST_CASE("oracle check") {
    auto r = run({"oracle-check", "--family", "paw"});
    CHECK(r.code == 0);
    CHECK(csf::Json::parse(r.out)["equal"] == true);
  }

  TEST_CASE("enumerate and collisions") {
    CHECK(run({"enumerate", "--n", "7", "--count"}).out == "33\n");
    auto list = run({"enumerate", "--n", "5"});
    CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 5);
    auto r = run({"collisions", "--n", "6", "--cycle", "3"});
    REQUIRE(r.code == 0);
    auto j = csf::Json::parse(r.out);
    REQUIRE(j["classes"].size() >= 1);
    CHECK(j["classes"][0]["graphs"].size() >= 2);
    CHECK(j["classes"][0].contains("expansion_ref"));

    auto path = std::filesystem::temp_directory_path() / "csf-cli-report.json";
    CHECK(run({"--jobs", "2", "collisions", "--n", "6", "--cycle", "3", "--out", path.string()}).code == 0);
    std::ifstream f(path);
    CHECK(csf::Json::parse(f)["n"] == 6);
    std::filesystem::remove(path);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--n-max", "7"});
    CHECK(r.code == 0);
    CHECK(csf::Json::parse(r.out)["all_passed"] == true);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"expand"}).code == 2);
    CHECK(run({"expand", "--graph6", "C~~"}).code == 2);
    CHECK(run({"expand", "--family", "cycle", "--n", "2"}).code == 2);
    CHECK(run({"infer"}, "not json").code == 2);
    auto path = run({"expand", "--family", "path", "--n", "6"});
    auto bad = run({"infer"}, path.out);
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("pretty output") {
    auto r = run({"--pretty", "expand", "--family", "paw"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2+2") != std::string::npos);
  }
}
