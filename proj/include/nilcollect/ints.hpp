#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nilcollect {

using Int = mpz_class;

/// Generalized binomial coefficient C(t,k) = t(t-1)...(t-k+1)/k!,
/// valid for negative t as well.
inline Int binomial(const Int& t, unsigned k) {
  Int num = 1;
  for (unsigned i = 0; i < k; ++i) num *= t - static_cast<long>(i);
  Int fact = 1;
  for (unsigned i = 2; i <= k; ++i) fact *= i;
  return num / fact;
}

inline Int binomial(long t, unsigned k) { return binomial(Int(t), k); }

/// Moebius function for small arguments.
inline int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

/// Floor-style nonnegative remainder.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace nilcollect
