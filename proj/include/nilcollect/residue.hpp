#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nilcollect/ints.hpp"

namespace nilcollect {

/// Largest e with p^e dividing n; n must be nonzero.
inline unsigned padic_valuation(const Int& n, unsigned p) {
  if (n == 0) throw std::invalid_argument("padic_valuation: n must be nonzero");
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be >= 2");
  Int m = abs(n);
  unsigned e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

inline Int binom(const Int& q, unsigned d) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), q.get_mpz_t(), d);
  return r;
}

/// For q = p^k: writes C(q,d) = (q / p^scale_exp) * n and returns n mod m.
/// The divisibility is checked, not assumed.
inline Int binom_residue(const Int& q, unsigned d, unsigned p, unsigned scale_exp, const Int& m) {
  Int pj = 1;
  for (unsigned i = 0; i < scale_exp; ++i) pj *= p;
  if (q % pj != 0)
    throw std::invalid_argument("binom_residue: p^" + std::to_string(scale_exp) +
                                " does not divide q = " + to_string(q));
  Int divisor = q / pj;
  Int c = binom(q, d);
  if (c % divisor != 0)
    throw std::runtime_error("binom_residue: claim violated: (q/p^" + std::to_string(scale_exp) +
                             ") = " + to_string(divisor) + " does not divide C(" + to_string(q) +
                             "," + std::to_string(d) + ") = " + to_string(c));
  return mod_floor(c / divisor, m);
}

struct ResidueRow {
  unsigned k;
  Int q;
  Int binom;
  Int scaled;   // C(q,d) / (q / p^scale_exp)
  Int residue;  // scaled mod m
};

struct StabilityReport {
  bool stable = false;
  Int residue = 0;  // the common residue when stable
  std::vector<ResidueRow> rows;
};

/// Computes the residue for every q = p^k, k in [k_min, k_max], and reports
/// whether they all agree.
inline StabilityReport verify_residue_stability(unsigned p, unsigned d, unsigned scale_exp,
                                                const Int& m, unsigned k_min, unsigned k_max) {
  StabilityReport rep;
  for (unsigned k = k_min; k <= k_max; ++k) {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, k);
    ResidueRow row;
    row.k = k;
    row.q = q;
    row.binom = binom(q, d);
    row.residue = binom_residue(q, d, p, scale_exp, m);
    Int pj = 1;
    for (unsigned i = 0; i < scale_exp; ++i) pj *= p;
    row.scaled = row.binom / (q / pj);
    rep.rows.push_back(std::move(row));
  }
  rep.stable = !rep.rows.empty();
  if (rep.stable) {
    rep.residue = rep.rows.front().residue;
    for (const auto& row : rep.rows) rep.stable &= (row.residue == rep.residue);
  }
  return rep;
}

}  // namespace nilcollect
