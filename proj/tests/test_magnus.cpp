#include <doctest.h>

#include <random>

#include "nilcollect/magnus.hpp"

using namespace nilcollect;

TEST_CASE("generator powers expand binomially") {
  Basis b({{"a", 1}, {"b", 1}}, 2);
  MagnusRing r(b);
  Series s = magnus_image(r, b, {{1, 3}});  // a^3 at cap 2
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({0}) == 3);
  CHECK(s.coefficient({0, 0}) == 3);
  CHECK(s.terms().size() == 3);
}

TEST_CASE("bracket image at cap 2") {
  Basis b({{"a", 1}, {"b", 1}}, 2);
  MagnusRing r(b);
  Series s = magnus_basis_image(r, b, 3);  // [b,a]
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1, 0}) == 1);
  CHECK(s.coefficient({0, 1}) == -1);
  CHECK(s.coefficient({0}) == 0);
}

TEST_CASE("inverse and empty word") {
  Basis b({{"a", 1}, {"b", 1}}, 4);
  MagnusRing r(b);
  CHECK(magnus_image(r, b, {}) == Series::one(r));
  Series a = Series::unit_plus_var(r, 0);
  CHECK(a * a.inverse() == Series::one(r));
  CHECK(a.pow(-3) * a.pow(3) == Series::one(r));
}

TEST_CASE("check_normal_form accepts the collected form and rejects others") {
  GroupContext ctx(Basis({{"a", 1}, {"b", 1}}, 2));
  MagnusRing r(ctx.basis());
  Word ba = {{2, 1}, {1, 1}};
  ExponentVector good = ctx.normal_form(ba);
  CHECK(check_normal_form(r, ctx.basis(), ba, good));
  ExponentVector bad(&ctx);
  bad.add(1, 1);
  bad.add(2, 1);
  CHECK(!check_normal_form(r, ctx.basis(), ba, bad));
}

TEST_CASE("multiplicativity and faithfulness at class 5") {
  GroupContext ctx(Basis({{"a", 1}, {"b", 1}}, 5));
  MagnusRing r(ctx.basis());
  std::mt19937_64 rng(23u);
  auto random_word = [&](int len) {
    Word w;
    for (int i = 0; i < len; ++i) {
      long e = 1 + static_cast<long>(rng() % 3);
      if (rng() & 1) e = -e;
      w.emplace_back(1 + static_cast<int>(rng() % 2), Int(e));
    }
    return w;
  };
  for (int t = 0; t < 20; ++t) {
    Word u = random_word(3), v = random_word(3);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(magnus_image(r, ctx.basis(), uv) ==
          magnus_image(r, ctx.basis(), u) * magnus_image(r, ctx.basis(), v));
    ExponentVector nu = ctx.normal_form(u), nv = ctx.normal_form(v);
    CHECK(check_normal_form(r, ctx.basis(), u, nu));
    // distinct normal forms must have distinct images
    if (nu != nv) CHECK(magnus_image(r, ctx.basis(), u) != magnus_image(r, ctx.basis(), v));
  }
}

TEST_CASE("weighted variables truncate by graded degree") {
  Basis b({{"c", 2}, {"d", 3}}, 5);
  MagnusRing r(b);
  Series c = Series::unit_plus_var(r, 0);
  Series c3 = c.pow(3);
  CHECK(c3.coefficient({0, 0}) == 3);   // degree 4 survives
  CHECK(c3.coefficient({0, 0, 0}) == 0);  // degree 6 truncated
  GroupContext ctx(Basis({{"c", 2}, {"d", 3}}, 5));
  Word dc = {{2, 1}, {1, 1}};
  CHECK(check_normal_form(r, ctx.basis(), dc, ctx.normal_form(dc)));
}

TEST_CASE("expression images") {
  GroupContext ctx(Basis({{"a", 1}, {"b", 1}}, 4));
  MagnusRing r(ctx.basis());
  ExprPtr e = parse("b^-1 a^-1 b a", {"a", "b"});
  CHECK(magnus_expr_image(r, ctx.basis(), e) == magnus_basis_image(r, ctx.basis(), 3));
}
