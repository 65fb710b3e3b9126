#include <doctest.h>

#include "positroid/error.hpp"
#include "positroid/json_format.hpp"
#include "positroid/oracle.hpp"
#include "positroid/text_format.hpp"

using namespace positroid;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_decorated_perm") {
  CHECK(parse_decorated_perm("6,1,4,8,2,7,3,5") ==
        DecoratedPermutation({6, 1, 4, 8, 2, 7, 3, 5}, {}));
  CHECK(parse_decorated_perm(" 8, 1,4,2,5+,7,3, 6 ") ==
        DecoratedPermutation({8, 1, 4, 2, 5, 7, 3, 6}, {{5, Color::kPlus}}));
  CHECK(parse_decorated_perm("1-,3,2") ==
        DecoratedPermutation({1, 3, 2}, {{1, Color::kMinus}}));

  CHECK(error_of([] { parse_decorated_perm("3,2,1"); })
            .find("position 2: fixed point 2 lacks a sign") != std::string::npos);
  CHECK(error_of([] { parse_decorated_perm("2+,1"); })
            .find("sign on non-fixed point 1") != std::string::npos);
  CHECK(error_of([] { parse_decorated_perm("3,3,1"); })
            .find("already used") != std::string::npos);
  CHECK(error_of([] { parse_decorated_perm("1+,x"); })
            .find("position 2") != std::string::npos);
  CHECK(error_of([] { parse_decorated_perm("1+,5"); })
            .find("outside") != std::string::npos);
  CHECK_FALSE(error_of([] { parse_decorated_perm(""); }).empty());
  CHECK_FALSE(error_of([] { parse_decorated_perm("1+,,2"); }).empty());
}

TEST_CASE("necklace text") {
  const auto n = parse_necklace("1,2,3,5;2,3,5,6;3,5,6,1;4,5,6,1;5,6,8,1;"
                                "6,8,1,2;7,8,1,2;8,1,2,3");
  CHECK(n.size() == 8);
  CHECK(n[3] == Subset(8, {1, 3, 5, 6}));
  CHECK(format_necklace(n) ==
        "1,2,3,5;2,3,5,6;1,3,5,6;1,4,5,6;1,5,6,8;1,2,6,8;1,2,7,8;1,2,3,8");

  const auto empty = parse_necklace(";;");
  CHECK(empty.size() == 3);
  CHECK(empty.rank() == 0);
  CHECK(format_necklace(empty) == ";;");
  CHECK(parse_necklace("").size() == 1);

  CHECK_THROWS_AS(parse_necklace("1;1,2"), InvalidNecklace);
  CHECK_THROWS_AS(parse_necklace("1;3"), Error);
  CHECK_THROWS_AS(parse_necklace("1,1;2,2"), Error);
}

TEST_CASE("format_perm prints every fixed point with a sign") {
  for_each_decorated_perm(4, [](const DecoratedPermutation& p) {
    const std::string text = format_perm(p);
    REQUIRE(parse_decorated_perm(text) == p);
    const auto necklace = necklace_of(p);
    REQUIRE(format_necklace(parse_necklace(format_necklace(necklace))) ==
            format_necklace(necklace));
  });
  CHECK(format_perm(DecoratedPermutation({6, 1, 3, 4, 8, 7, 2, 5},
                                         {{3, Color::kPlus},
                                          {4, Color::kPlus}})) ==
        "6,1,3+,4+,8,7,2,5");
}

TEST_CASE("basis family text") {
  const auto f = parse_basis_family("3,4;1,2;1,4;2,3");
  CHECK(f.ground_size() == 4);
  CHECK(format_basis_family(f) == "1,2;1,4;2,3;3,4");
  CHECK(parse_basis_family("", 3).rank() == 0);
  CHECK_THROWS_AS(parse_basis_family(""), Error);
  CHECK_THROWS_AS(parse_basis_family("1,2;3"), Error);
  CHECK_THROWS_AS(parse_basis_family("1,5", 4), Error);
}

TEST_CASE("json forms") {
  const DecoratedPermutation p({8, 1, 4, 2, 5, 7, 3, 6}, {{5, Color::kPlus}});
  const auto j = positroid_json(p);
  CHECK(j["n"] == 8);
  CHECK(j["k"] == 4);
  CHECK(j["perm"] == nlohmann::json({8, 1, 4, 2, 5, 7, 3, 6}));
  CHECK(j["col"] == nlohmann::json({{"5", 1}}));
  CHECK(j["entries"][0] == nlohmann::json({1, 2, 3, 6}));

  const auto t = trace_json(trace_minor(DecoratedPermutation(
                                            {6, 1, 4, 8, 2, 7, 3, 5}, {}),
                                        3, MinorKind::kContraction));
  CHECK(t["bridge"] == "phi");
  CHECK(t["rows"][3]["case"] == "4a");
  CHECK(t["result"] == "6,1,3+,4+,8,7,2,5");

  const auto r = report_json(verify_all(3, MinorKind::kRestriction));
  CHECK(r["mismatches"] == 0);
  CHECK(r["first_failure"].is_null());
  CHECK(r["kind"] == "restriction");
}
