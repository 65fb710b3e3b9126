#include <doctest.h>

#include "brute_force.hpp"
#include "positroid/error.hpp"
#include "positroid/order.hpp"

using namespace positroid;

TEST_CASE("cyclic_lt") {
  CHECK(cyclic_lt(8, 2, 6, 8));
  CHECK(cyclic_lt(2, 3, 6, 8));
  CHECK_FALSE(cyclic_lt(4, 4, 4, 8));
  CHECK_FALSE(cyclic_lt(3, 2, 6, 8));
  // t is the minimum, t-1 the maximum.
  for (Element t = 1; t <= 5; ++t)
    for (Element b = 1; b <= 5; ++b) {
      if (b != t) CHECK(cyclic_lt(t, b, t, 5));
      if (b != cyclic_prev(t, 5)) CHECK(cyclic_lt(b, cyclic_prev(t, 5), t, 5));
    }
  CHECK_THROWS_AS(cyclic_lt(0, 2, 1, 4), Error);
  CHECK_THROWS_AS(cyclic_lt(1, 5, 1, 4), Error);
}

TEST_CASE("in_open_interval") {
  // (7, 3) on [8] is {8, 1, 2}.
  std::vector<Element> inside;
  for (Element x = 1; x <= 8; ++x)
    if (in_open_interval(x, 7, 3, 8)) inside.push_back(x);
  CHECK(inside == std::vector<Element>{1, 2, 8});
  CHECK_FALSE(in_open_interval(3, 3, 4, 8));
  CHECK(in_open_interval(1, 2, 2, 3));
}

TEST_CASE("gale_leq examples") {
  CHECK(gale_leq(Subset(8, {1, 2, 3, 5}), Subset(8, {2, 3, 5, 6}), 1));
  CHECK(gale_leq(Subset(8, {4, 5, 6, 1}), Subset(8, {5, 6, 1, 3}), 4));
  CHECK(gale_leq(Subset(8, {2, 4}), Subset(8, {2, 4}), 3));
  CHECK_FALSE(gale_leq(Subset(8, {2, 3, 5, 6}), Subset(8, {1, 2, 3, 5}), 1));

  try {
    gale_leq(Subset(4, {1}), Subset(4, {1, 2}), 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIncomparableSize);
  }
}

TEST_CASE("gale_leq agrees with the componentwise definition") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      auto all = brute::k_subsets(n, k);
      for (const auto& a : all)
        for (const auto& b : all)
          for (int t = 1; t <= n; ++t)
            REQUIRE(gale_leq(Subset::of(n, a), Subset::of(n, b), t) ==
                    brute::gale_leq(a, b, t, n));
    }
}

TEST_CASE("gale_leq on a 64-element ground set") {
  std::vector<Element> low, high;
  for (Element e = 1; e <= 32; ++e) low.push_back(e);
  for (Element e = 33; e <= 64; ++e) high.push_back(e);
  const Subset a = Subset::of(64, low), b = Subset::of(64, high);
  CHECK(gale_leq(a, b, 1));
  CHECK_FALSE(gale_leq(b, a, 1));
  CHECK(gale_leq(b, a, 33));
  CHECK(gale_extremum(b, 40, Extremum::kMax) == 39);
  CHECK(gale_extremum(a, 64, Extremum::kMin) == 1);
}

TEST_CASE("gale_extremum") {
  CHECK(gale_extremum(Subset(8, {4}), 4, Extremum::kMax) == 4);
  CHECK(gale_extremum(Subset(8, {6, 8}), 1, Extremum::kMin) == 6);
  CHECK(gale_extremum(Subset(8, {8, 2}), 6, Extremum::kMax) == 2);
  CHECK(gale_extremum(Subset(8, {8, 2}), 6, Extremum::kMin) == 8);
  try {
    gale_extremum(Subset(5), 1, Extremum::kMax);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptySet);
  }
}

TEST_CASE("Subset basics") {
  const Subset s(8, {6, 1, 8});
  CHECK(s.size() == 3);
  CHECK(s.elements() == std::vector<Element>{1, 6, 8});
  CHECK(s.elements_from(7) == std::vector<Element>{8, 1, 6});
  CHECK(Subset::cyclic_interval(8, 7, 3) == Subset(8, {7, 8, 1}));
  CHECK(Subset::full(64).size() == 64);
  CHECK_THROWS_AS(Subset(8, {9}), Error);
  CHECK_THROWS_AS(Subset(65), Error);
  CHECK(lex_less(Subset(5, {1, 4}), Subset(5, {2, 3})));
  CHECK(lex_less(Subset(5, {1, 2}), Subset(5, {1, 3})));
  CHECK_FALSE(lex_less(Subset(5, {2, 3}), Subset(5, {2, 3})));
}
