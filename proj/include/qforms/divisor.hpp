#ifndef QFORMS_DIVISOR_HPP
#define QFORMS_DIVISOR_HPP

#include <vector>

#include <qforms/rational.hpp>

namespace qforms
{

enum class DivisorFnKind {
    plain,            // sum_{d | n} d^k
    alternating_iinf, // sum_{d | n} (-1)^d d^k
    odd_cofactor_0,   // sum_{d | n, n/d odd} d^k
};

/// Positive divisors of n >= 1 in increasing order (trial division up to sqrt n).
std::vector<long> divisors(long n);

BigInt divisor_sum(DivisorFnKind kind, unsigned k, long n);

BigInt sigma(unsigned k, long n);

/// sum_{d | n} (-1)^d d^k for n >= 1; the constant (1 - 2^{k+1}) B_{k+1} / (2 (k+1)) at n = 0.
Rational sigma_iinf(unsigned k, long n);

BigInt sigma_0cusp(unsigned k, long n);

/// sum_{m=0}^{n} sigma_iinf(r, m) sigma_iinf(s, n - m), boundary terms included.
Rational rho_iinf(unsigned r, unsigned s, long n);

/// sum_{m=1}^{n-1} sigma_0cusp(r, m) sigma_0cusp(s, n - m); zero for n <= 1.
BigInt rho_0(unsigned r, unsigned s, long n);

// Batch variants: element i holds the value at n = i for 0 <= i <= n_max.
std::vector<Rational> sigma_iinf_table(unsigned k, long n_max);
std::vector<BigInt> sigma_0cusp_table(unsigned k, long n_max);
std::vector<Rational> rho_iinf_table(unsigned r, unsigned s, long n_max);
std::vector<BigInt> rho_0_table(unsigned r, unsigned s, long n_max);

} // namespace qforms

#endif
