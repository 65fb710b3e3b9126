#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "positroid/cli.hpp"
#include "positroid/oracle.hpp"
#include "positroid/text_format.hpp"

using namespace positroid;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "positroid");
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("necklace and perm subcommands") {
  auto r = run_cli({"necklace", "--perm", "8,1,4,2,5+,7,3,6"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "1,2,3,6;2,3,6,8;1,3,6,8;1,4,6,8;1,2,6,8;1,2,6,8;1,2,7,8;1,2,3,8\n");

  auto back = run_cli({"perm", "--necklace", "-"}, r.out);
  CHECK(back.status == 0);
  CHECK(back.out == "8,1,4,2,5+,7,3,6\n");
}

TEST_CASE("necklace piped through perm reproduces the input") {
  for_each_decorated_perm(4, [](const DecoratedPermutation& p) {
    const std::string text = format_perm(p);
    auto neck = run_cli({"necklace", "--perm", text});
    REQUIRE(neck.status == 0);
    auto back = run_cli({"perm", "--necklace", "-"}, neck.out);
    REQUIRE(back.out == text + "\n");
  });
}

TEST_CASE("bases subcommand") {
  auto r = run_cli({"bases", "--perm", "2,3,4,1"});
  CHECK(r.status == 0);
  CHECK(r.out == "1;2;3;4\n");
  auto j = run_cli({"--format", "json", "bases", "--perm", "2,3,4,1"});
  CHECK(nlohmann::json::parse(j.out)["bases"].size() == 4);
}

TEST_CASE("contract and restrict subcommands") {
  auto c = run_cli({"contract", "--perm", "6,1,4,8,2,7,3,5", "-j", "3"});
  CHECK(c.status == 0);
  CHECK(c.out == "6,1,3+,4+,8,7,2,5\n");

  auto r = run_cli({"restrict", "--perm", "6,1,4,8,2,7,3,5", "-j", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "8,1,4,2,5+,7,3,6\n");

  SUBCASE("trace rows match the plain result") {
    auto t = run_cli(
        {"contract", "--perm", "6,1,4,8,2,7,3,5", "-j", "3", "--trace"});
    CHECK(t.status == 0);
    CHECK(t.out.find("phi   3         3         3         4") !=
          std::string::npos);
    CHECK(t.out.substr(t.out.rfind('\n', t.out.size() - 2) + 1) == c.out);
  }
  SUBCASE("repeated -j applies in order") {
    auto seq = run_cli(
        {"restrict", "--perm", "6,1,4,8,2,7,3,5", "-j", "5", "-j", "1"});
    auto step = run_cli({"restrict", "--perm", "8,1,4,2,5+,7,3,6", "-j", "1"});
    CHECK(seq.out == step.out);
  }
  SUBCASE("degenerate fallback warns") {
    auto d = run_cli({"contract", "--perm", "1+,3,2", "-j", "1"});
    CHECK(d.status == 0);
    CHECK(d.out == "1+,2+,3+\n");
    CHECK(d.err.find("warning") != std::string::npos);
  }
  SUBCASE("json describes the same value") {
    auto j = run_cli({"--format", "json", "restrict", "--perm",
                      "6,1,4,8,2,7,3,5", "-j", "5", "--trace"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["steps"][0]["result"] == "8,1,4,2,5+,7,3,6");
    CHECK(doc["steps"][0]["trace"]["rows"][4]["case"] == "R-start");
    CHECK(doc["result"]["perm"] == nlohmann::json({8, 1, 4, 2, 5, 7, 3, 6}));
  }
}

TEST_CASE("is-positroid subcommand") {
  auto yes = run_cli({"is-positroid", "--bases", "1,2;1,3;1,4;2,3;2,4;3,4"});
  CHECK(yes.out == "true\nmatroid exchange: holds\n");
  auto no = run_cli({"is-positroid", "--bases", "1,2;3,4"});
  CHECK(no.status == 0);
  CHECK(no.out == "false\nmatroid exchange: fails\n");
  auto interleaved = run_cli({"is-positroid", "--bases", "1,2;1,4;2,3;3,4"});
  CHECK(interleaved.out == "false\nmatroid exchange: holds\n");
}

TEST_CASE("verify subcommand") {
  auto v = run_cli({"verify", "--max-n", "3", "--jobs", "2"});
  CHECK(v.status == 0);
  CHECK(v.out.find("n=3 restriction: permutations=16") != std::string::npos);
  CHECK(v.out.find("mismatches=1") == std::string::npos);

  auto j = run_cli({"--format", "json", "verify", "--max-n", "2", "--kind",
                    "contraction"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.size() == 2);
  CHECK(doc[1]["permutations"] == 5);
}

TEST_CASE("input errors exit with status 1") {
  CHECK(run_cli({"necklace", "--perm", "3,2,1"}).status == 1);
  CHECK(run_cli({"perm", "--necklace", "1;1,2"}).status == 1);
  CHECK(run_cli({"contract", "--perm", "2,1", "-j", "3"}).status == 1);
  CHECK(run_cli({"verify", "--max-n", "0"}).status == 1);
  CHECK(run_cli({"frobnicate"}).status == 1);
  CHECK(run_cli({}).status == 1);
  auto e = run_cli({"necklace", "--perm", "3,2,1"});
  CHECK(e.err.find("lacks a sign") != std::string::npos);
}
