#include <doctest.h>

#include <random>

#include "nilcollect/strata.hpp"

using namespace nilcollect;

namespace {

const HallExpansion& he7() {
  static HallExpansion h = hall_expansion(7);
  return h;
}

}  // namespace

TEST_CASE("spec construction and validation") {
  auto s = StratificationSpec::power2(32, 13);
  CHECK(s.m == 8);
  CHECK(s.K_scale(2) == 32);
  CHECK(s.N_scale(2) == 256);
  CHECK(s.K_scale(3) == 16);
  CHECK(s.K_scale(4) == 16);
  CHECK(s.K_scale(5) == 8);
  CHECK(s.K_scale(7) == 8);
  CHECK(s.K_scale(8) == 4);
  CHECK(s.K_scale(13) == 4);
  CHECK(s.N_scale(13) == 32);
  CHECK_THROWS_AS(StratificationSpec::power2(16, 13), std::invalid_argument);
  CHECK_THROWS_AS(StratificationSpec::power2(48, 13), std::invalid_argument);
  CHECK_THROWS_AS(StratificationSpec::power2(32, 14), std::invalid_argument);
  auto s3 = StratificationSpec::power3(27, 13);
  CHECK(s3.m == 9);
  CHECK(s3.K_scale(6) == 9);
  CHECK(s3.K_scale(7) == 3);
  CHECK(s3.N_scale(7) == 27);
  auto s5 = StratificationSpec::power5(25, 10);
  CHECK(s5.m == 5);
  CHECK(s5.K_scale(3) == 5);
  CHECK(s5.N_scale(3) == 25);
  CHECK_THROWS_AS(StratificationSpec::power5(5, 10), std::invalid_argument);
  CHECK(StratificationSpec::by_name("2power", 32, 7).p == 2);
  CHECK_THROWS_AS(StratificationSpec::by_name("7power", 49, 7), std::invalid_argument);
}

TEST_CASE("membership and representative vectors") {
  const GroupContext& ctx = he7().context();
  auto spec = StratificationSpec::power2(32, 7);
  CHECK(in_K(ctx.identity(), spec));
  CHECK(in_N(ctx.identity(), spec));
  ExponentVector ba_q = ctx.element(3, 32);
  CHECK(in_K(ba_q, spec));
  CHECK(!in_N(ba_q, spec));
  CHECK(in_N(ctx.element(3, 256), spec));
  CHECK_THROWS_AS(in_K(ctx.generator("a"), spec), std::invalid_argument);

  RepVector v = rv(ctx.element(3, 4 * 32), spec);
  CHECK(v.entries[0] == 4);
  for (size_t i = 1; i < v.entries.size(); ++i) CHECK(v.entries[i] == 0);
  CHECK(rv(ctx.element(3, 256), spec).is_zero());
  CHECK_THROWS_AS(rv(ctx.element(3, 5), spec), std::invalid_argument);

  // r = basis size minus the two generators
  CHECK(static_cast<int>(v.entries.size()) == ctx.basis().size() - 2);
}

TEST_CASE("K/N coordinate count at full class") {
  GroupContext ctx13(Basis({{"a", 1}, {"b", 1}}, 13));
  auto spec = StratificationSpec::power2(32, 13);
  CHECK(rv(ctx13.identity(), spec).entries.size() == 1375);
  GroupContext ctx10(Basis({{"a", 1}, {"b", 1}}, 10));
  auto s5 = StratificationSpec::power5(25, 10);
  CHECK(rv(ctx10.identity(), s5).entries.size() == 224);
}

TEST_CASE("rv additivity and zero test on random K-elements") {
  const GroupContext& ctx = he7().context();
  const Basis& b = ctx.basis();
  auto spec = StratificationSpec::power2(32, 7);
  std::mt19937_64 rng(31u);
  auto random_k = [&](bool force_n) {
    ExponentVector u = ctx.identity();
    for (int t = 0; t < 4; ++t) {
      int id = 3 + static_cast<int>(rng() % (b.size() - 2));
      Int mult = static_cast<long>(rng() % 12);
      if (force_n) mult *= spec.m;
      u = ctx.multiply(std::move(u), ctx.element(id, spec.K_scale(b.weight_of(id)) * mult));
    }
    return u;
  };
  for (int t = 0; t < 30; ++t) {
    ExponentVector u = random_k(false), v = random_k(false);
    REQUIRE(in_K(u, spec));
    CHECK(rv(ctx.multiply(u, v), spec) == rv(u, spec) + rv(v, spec));
    CHECK(rv(u, spec).is_zero() == in_N(u, spec));
  }
  for (int t = 0; t < 10; ++t) {
    ExponentVector u = random_k(true);
    CHECK(in_N(u, spec));
    CHECK(rv(u, spec).is_zero());
  }
}

TEST_CASE("polynomial route for [y^q, x] matches raw collection at q = 32") {
  const HallExpansion& h = he7();
  const GroupContext& ctx = h.context();
  auto spec = StratificationSpec::power2(32, 7);
  const std::vector<std::string> AB = {"a", "b"};
  for (auto [xs, ys] : std::vector<std::pair<std::string, std::string>>{
           {"a", "b"}, {"b", "a"}, {"ab", "b"}, {"a^-1", "ba"}, {"ab", "a b^-1"}}) {
    ExprPtr x = parse(xs, AB), y = parse(ys, AB);
    RepVector fast = rv_power_commutator(x, y, spec, h, ctx);
    ExponentVector direct =
        ctx.commutator(ctx.power(eval(y, ctx), 32), eval(x, ctx));
    CHECK(fast == rv(direct, spec));
  }
  // y = b, x = a: leading coordinate is (q/q) mod 8 = 1 on [b,a]
  RepVector lead = rv_power_commutator(parse("a", AB), parse("b", AB), spec, h, ctx);
  CHECK(lead.entries[0] == 1);
}

TEST_CASE("span accumulation over Z_8") {
  auto spec = StratificationSpec::power2(32, 7);
  GroupContext ctx(Basis({{"a", 1}, {"b", 1}}, 7));
  size_t r = rv(ctx.identity(), spec).entries.size();
  auto vec = [&](std::vector<std::pair<size_t, unsigned>> coords) {
    RepVector v{&spec, std::vector<unsigned>(r, 0)};
    for (auto [i, e] : coords) v.entries[i] = e;
    return v;
  };
  SpanState span(spec);
  CHECK(span.contains(vec({})));
  CHECK(span.add(vec({{0, 1}})));
  CHECK(!span.add(vec({{0, 5}})));
  CHECK(span.contains(vec({{0, 7}})));
  CHECK(span.add(vec({{1, 2}})));
  CHECK(span.contains(vec({{0, 3}, {1, 6}})));
  CHECK(!span.contains(vec({{1, 1}})));
  CHECK(!span.contains(vec({{2, 4}})));
  CHECK(span.add(vec({{2, 2}, {3, 1}})));
  // closure: 4 * (2,1) = (0,4) on coordinates 2,3
  CHECK(span.contains(vec({{3, 4}})));
  CHECK(!span.contains(vec({{2, 2}})));
  CHECK(span.contains(vec({{2, 2}, {3, 5}})));
  auto profile = span.rank_profile();
  REQUIRE(profile.size() == 3);
  CHECK(profile[0] == 1);  // order-8 pivot at coord 0
  CHECK(profile[1] == 2);  // order-4 pivots at coords 1 and 2
  CHECK(profile[2] == 1);  // order-2 closure pivot at coord 3
  CHECK(span.pivot_count() == 4);
}

TEST_CASE("sample word enumeration is deterministic and duplicate-free") {
  GroupContext ctx2(Basis({{"a", 1}, {"b", 1}}, 2));
  auto w1 = enumerate_sample_words(2, ctx2);
  auto w2 = enumerate_sample_words(2, ctx2);
  REQUIRE(w1.size() == w2.size());
  for (size_t i = 0; i < w1.size(); ++i) CHECK(print(w1[i]) == print(w2[i]));
  std::set<std::string> keys;
  for (const auto& w : w1) {
    ExponentVector nf = eval(w, ctx2);
    std::string key;
    for (const auto& [id, e] : nf.exponents()) key += std::to_string(id) + ":" + to_string(e) + ";";
    CHECK(keys.insert(key).second);
  }
  CHECK(w1.size() >= 15);
}
