#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcollect/hall_basis.hpp"

using namespace nilcollect;

TEST_CASE("witt formula on two generators") {
  const int expected[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630};
  for (int w = 1; w <= 13; ++w) CHECK(witt_count(2, w) == expected[w - 1]);
  CHECK(witt_count(2, 2) == 1);
  CHECK(witt_count(1, 1) == 1);
  for (int w = 2; w <= 8; ++w) CHECK(witt_count(1, w) == 0);
  CHECK(witt_count(3, 3) == 8);
}

TEST_CASE("rank-2 basis counts match the Witt numbers") {
  Basis b({{"a", 1}, {"b", 1}}, 13);
  CHECK(b.size() == 1377);
  for (int w = 1; w <= 13; ++w) CHECK(Int(b.count_weight(w)) == witt_count(2, w));
  CHECK(b.count_up_to(4) == 8);
  CHECK(b.count_up_to(5) == 14);
  CHECK(b.count_up_to(6) == 23);
  CHECK(b.count_up_to(7) == 41);
  CHECK(b.count_up_to(10) == 226);
}

TEST_CASE("listed prefix and intra-weight order") {
  Basis b({{"a", 1}, {"b", 1}}, 6);
  const char* expected[] = {"a",         "b",         "[b,a]",     "[b,a,a]",      "[b,a,b]",
                            "[b,a,a,a]", "[b,a,a,b]", "[b,a,b,b]", "[b,a,a,[b,a]]"};
  for (int id = 1; id <= 9; ++id) CHECK(b.str(id) == expected[id - 1]);
}

TEST_CASE("rank-1 basis is a single generator") {
  Basis b({{"a", 1}}, 5);
  CHECK(b.size() == 1);
  CHECK(b.str(1) == "a");
}

TEST_CASE("hall condition holds for every bracket") {
  Basis b({{"a", 1}, {"b", 1}}, 8);
  for (const auto& e : b.elements()) {
    if (e.is_generator()) continue;
    CHECK(e.left > e.right);
    CHECK(e.weight == b.weight_of(e.left) + b.weight_of(e.right));
    const auto& l = b.at(e.left);
    if (!l.is_generator()) CHECK(l.right <= e.right);
    CHECK(b.bracket_id(e.left, e.right) == e.id);
  }
  // ids strictly refine weight
  for (int id = 2; id <= b.size(); ++id) CHECK(b.weight_of(id) >= b.weight_of(id - 1));
}

TEST_CASE("regeneration is deterministic") {
  Basis b1({{"a", 1}, {"b", 1}}, 7), b2({{"a", 1}, {"b", 1}}, 7);
  REQUIRE(b1.size() == b2.size());
  for (int id = 1; id <= b1.size(); ++id) {
    CHECK(b1.at(id).left == b2.at(id).left);
    CHECK(b1.at(id).right == b2.at(id).right);
    CHECK(b1.at(id).gen == b2.at(id).gen);
  }
}

TEST_CASE("graded truncation with weighted generators") {
  Basis b({{"c", 2}, {"d", 3}}, 13);
  CHECK(b.size() == 14);
  std::vector<std::string> strs;
  for (int id = 1; id <= b.size(); ++id) strs.push_back(b.str(id));
  auto has = [&](const std::string& s) {
    return std::find(strs.begin(), strs.end(), s) != strs.end();
  };
  CHECK(has("[d,c]"));
  CHECK(has("[d,c,c,[d,c]]"));
  CHECK(has("[d,c,d,[d,c]]"));
  CHECK(has("[d,c,c,c,c,c]"));
  // graded weight 2 + 3*4 = 14 exceeds the cap
  CHECK(!has("[d,c,d,d,d]"));
  CHECK(b.weight_of(b.generator_id("c")) == 2);
  CHECK(b.weight_of(b.bracket_id(2, 1)) == 5);
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(Basis({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Basis({{"a", 1}, {"a", 1}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Basis({{"a", 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Basis({{"a", 0}}, 3), std::invalid_argument);
}
