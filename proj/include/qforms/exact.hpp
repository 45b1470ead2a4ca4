#ifndef QFORMS_EXACT_HPP
#define QFORMS_EXACT_HPP

#include <qforms/rational.hpp>

namespace qforms
{

/// Bernoulli number B_k with the B_1 = -1/2 convention. The memo table is shared and locked.
Rational bernoulli(unsigned k);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(unsigned n, long k);

BigInt factorial(unsigned n);

/// Exact 2^e as a rational, e may be negative.
Rational pow2(long e);

} // namespace qforms

#endif
