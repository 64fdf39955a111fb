#pragma once

#include <gmpxx.h>

namespace hankel {

using Int = mpz_class;
using Rat = mpq_class;

// C(n, k), zero outside 0 <= k <= n.
Int binomial(unsigned long n, long k);

// base^e with the empty product convention pow_int(b, 0) = 1.
Int pow_int(const Int& base, unsigned long e);

inline int neg_one_pow(unsigned long e) { return e % 2 == 0 ? 1 : -1; }

// m(m-1)/2, used in sign exponents.
inline unsigned long choose2(unsigned long m) { return m * (m - 1) / 2; }

}  // namespace hankel
