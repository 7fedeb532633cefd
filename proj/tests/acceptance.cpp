// Acceptance gate: one line per criterion, exit 0 only if every criterion
// passes. Heavy claims are included (the polynomial cache makes them cheap).
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "nilcollect/claims.hpp"

using nilcollect::ClaimRecord;
using nilcollect::run_claims;

int main() {
  struct Criterion {
    const char* description;
    std::vector<std::string> claim_ids;
  };
  const std::vector<Criterion> criteria = {
      {"basis counts (Witt numbers, cumulative 8/14/23/41/226/1377)", {"basis-counts"}},
      {"first 8 basis elements match the listed prefix", {"basis-prefix"}},
      {"weighted (c:2,d:3) basis yields the tabulated 15 elements", {"basis-weighted-cd"}},
      {"500 random words agree with the series-embedding oracle", {"oracle-words"}},
      {"class-13 expansion polynomials (f3, f4, f5, degrees, nonnegativity)", {"hall-polys"}},
      {"assembled power/commutator expansions equal direct collection", {"power-expansions"}},
      {"[c^r,d^s] and [d^r,c^s] exponent tables for (r,s) in {0..6}^2", {"commutator-tables"}},
      {"q | f_i(q) divisibility for p in {2,3,5}", {"power-divisibility"}},
      {"binomial residue stability and divisibility bands", {"binomial-residues"}},
      {"f_i(q/2) mod q residue row {4,6,7,5,5}(q/8)", {"half-power-residues"}},
      {"representative vectors at q=32, class 13", {"rep-vectors"}},
      {"q-independence of rv([y^q,x]) at q in {32,64,128}",
       {"q-independence", "q-independence-class13"}},
      {"K/N structure: commuting bands, rv additivity, rv=0 iff in N", {"kn-structure"}},
  };

  std::map<std::string, ClaimRecord> by_id;
  for (auto& rec : run_claims("*", /*include_heavy=*/true)) by_id[rec.id] = std::move(rec);

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    bool ok = true;
    double secs = 0;
    for (const auto& id : criteria[i].claim_ids) {
      const ClaimRecord& rec = by_id.at(id);
      ok &= rec.verdict == "pass";
      secs += rec.runtime_s;
    }
    failures += !ok;
    std::printf("%s  criterion %2zu (%6.2fs): %s\n", ok ? "PASS" : "FAIL", i + 1, secs,
                criteria[i].description);
    if (!ok) {
      for (const auto& id : criteria[i].claim_ids) {
        const ClaimRecord& rec = by_id.at(id);
        if (rec.verdict != "pass")
          std::printf("      %s: %s\n        evidence: %s\n", rec.id.c_str(),
                      rec.verdict.c_str(), rec.evidence.dump().c_str());
      }
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures ? 1 : 0;
}
