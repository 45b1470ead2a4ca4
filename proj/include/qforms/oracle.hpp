#ifndef QFORMS_ORACLE_HPP
#define QFORMS_ORACLE_HPP

#include <vector>

#include <qforms/rational.hpp>

namespace qforms
{

/// r_s(n), 0 <= n <= n_max, as the s-th power of 1 + 2 sum q^{k^2} over the integers.
std::vector<BigInt> r_oracle(unsigned s, long n_max);

/// t_s(n), 0 <= n <= n_max, as the s-th power of sum_{k>=0} q^{k(k+1)/2}.
std::vector<BigInt> t_oracle(unsigned s, long n_max);

/// Number of x in Z^s with sum x_i^2 = n, by recursive enumeration.
BigInt r_enumerate(unsigned s, long n);

/// Number of x in Z_{>=0}^s with sum x_i (x_i + 1) / 2 = n, by recursive enumeration.
BigInt t_enumerate(unsigned s, long n);

/// r_s(n) for n <= n_max by looping over the box |x_i| <= sqrt(n_max); s <= 4.
std::vector<BigInt> r_lattice_table(unsigned s, long n_max);

} // namespace qforms

#endif
