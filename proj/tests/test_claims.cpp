#include <doctest.h>

#include <set>

#include "nilcollect/claims.hpp"

using namespace nilcollect;

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("basis-*", "basis-counts"));
  CHECK(!glob_match("basis-*", "oracle-words"));
  CHECK(glob_match("*residues", "binomial-residues"));
  CHECK(glob_match("q-?ndependence", "q-independence"));
  CHECK(!glob_match("q-?ndependence", "q-independence-class13"));
  CHECK(glob_match("", ""));
  CHECK(!glob_match("", "x"));
}

TEST_CASE("registry ids are unique and stable") {
  std::set<std::string> ids;
  for (const auto& def : claim_registry()) CHECK(ids.insert(def.id).second);
  CHECK(ids.count("basis-counts"));
  CHECK(ids.count("rep-vectors"));
  CHECK(ids.count("kn-structure"));
  CHECK(ids.size() == 14);
}

TEST_CASE("filtering") {
  auto recs = run_claims("basis-*", false);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].id == "basis-counts");
  CHECK(recs[0].verdict == "pass");
  CHECK(run_claims("nonexistent-*", false).empty());
}

TEST_CASE("heavy claims are skipped unless requested") {
  auto recs = run_claims("rep-vectors", false);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].verdict == "skipped");
}

TEST_CASE("runs are deterministic") {
  auto a = run_claims("basis-*", false);
  auto b = run_claims("basis-*", false);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(a[i].evidence.dump() == b[i].evidence.dump());
  }
}
