#include <doctest.h>

#include "nilcollect/expr.hpp"

using namespace nilcollect;

namespace {
const std::vector<std::string> AB = {"a", "b"};
}

TEST_CASE("commutator word evaluates to the bracket") {
  GroupContext ctx(Basis({{"a", 1}, {"b", 1}}, 2));
  CHECK(eval(parse("b^-1 a^-1 b a", AB), ctx) == ctx.element(3));
  CHECK(eval(parse("[b,a]", AB), ctx) == ctx.element(3));
}

TEST_CASE("left-normed bracket sugar") {
  ExprPtr e = parse("[b,a,a,[b,a]]", AB);
  ExprPtr manual = Expr::bracket(
      {Expr::gen("b"), Expr::gen("a"), Expr::gen("a"), Expr::bracket({Expr::gen("b"), Expr::gen("a")})});
  CHECK(equal(e, manual));
}

TEST_CASE("power node") {
  ExprPtr e = parse("(ab)^256", AB);
  REQUIRE(e->kind == Expr::Kind::Power);
  CHECK(e->exp == 256);
  REQUIRE(e->base->kind == Expr::Kind::Product);
  CHECK(e->base->args.size() == 2);
}

TEST_CASE("juxtaposition vs multi-letter names") {
  ExprPtr e = parse("ab", AB);
  CHECK(e->kind == Expr::Kind::Product);
  ExprPtr f = parse("cd", {"cd"});
  CHECK(f->kind == Expr::Kind::Gen);
  CHECK(f->name == "cd");
  ExprPtr g = parse("cd", {"c", "d"});
  CHECK(g->kind == Expr::Kind::Product);
}

TEST_CASE("round trip over a corpus") {
  const std::vector<std::string> corpus = {
      "a", "b", "ab", "ba", "a^2", "b^-3", "(ab)^2", "(ba)^-4", "[b,a]", "[a,b]",
      "[b,a,a]", "[b,a,b]", "[b,a,a,a]", "[b,a,a,b]", "[b,a,b,b]", "[b,a,a,[b,a]]",
      "b^-1 a^-1 b a", "a b a^-1 b^-1", "(ab)^256", "b^-256 a^-256 (ab)^256",
      "[b,a]^4", "[b,a]^-4", "([b,a]a)^3", "[ab,ba]", "[(ab)^2,b]", "[a^2,b^3]",
      "a^0", "(a)^1", "((ab))", "[b,a][a,b]", "a a a", "a^2b^2", "[b^2,a^2]",
      "[[b,a],[b,a,a]]", "[b,a,[b,a,a]]", "(a^-1 b^-1)^5", "[b,a]^100",
      "a^-1", "b^1", "(ab)^-1", "[a,b,a,b]", "[b,a,a,a,a,b]", "((ab)^2 b)^3",
      "a b^2 a^3 b^4", "[b,a]^2 [b,a,a]^3", "((a)^2)^3", "[ [b,a], a ]",
      "b a b a", "a (b a) b", "[a b, b a]"};
  CHECK(corpus.size() >= 50);
  for (const auto& s : corpus) {
    ExprPtr e1 = parse(s, AB);
    ExprPtr e2 = parse(print(e1), AB);
    CHECK_MESSAGE(equal(e1, e2), "round trip failed for: ", s, " printed as: ", print(e1));
  }
}

TEST_CASE("printer output also evaluates identically") {
  GroupContext ctx(Basis({{"a", 1}, {"b", 1}}, 5));
  for (const std::string s : {"b^-2 a^-2 (ab)^2", "[b,a,a,[b,a]]^3 a", "(a[b,a])^-3"}) {
    ExprPtr e = parse(s, AB);
    CHECK(eval(e, ctx) == eval(parse(print(e), AB), ctx));
  }
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_AS(parse("a z", AB), ParseError);
  CHECK_THROWS_AS(parse("(ab", AB), ParseError);
  CHECK_THROWS_AS(parse("[a]", AB), ParseError);
  CHECK_THROWS_AS(parse("a^", AB), ParseError);
  CHECK_THROWS_AS(parse("", AB), ParseError);
  CHECK_THROWS_AS(parse("a)", AB), ParseError);
  try {
    parse("ab q", AB);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}
