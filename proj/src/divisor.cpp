#include <qforms/divisor.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <qforms/exact.hpp>

namespace qforms
{

namespace
{

BigInt ipow(long base, unsigned e)
{
    BigInt out;
    BigInt b(base);
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

void require_positive(long n, const char *who)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": n must be >= 1, got " + std::to_string(n));
    }
}

} // namespace

std::vector<long> divisors(long n)
{
    require_positive(n, "divisors");
    std::vector<long> small;
    std::vector<long> large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigInt divisor_sum(DivisorFnKind kind, unsigned k, long n)
{
    require_positive(n, "divisor_sum");
    BigInt acc;
    for (long d : divisors(n)) {
        switch (kind) {
            case DivisorFnKind::plain:
                acc += ipow(d, k);
                break;
            case DivisorFnKind::alternating_iinf:
                if (d % 2 == 0) {
                    acc += ipow(d, k);
                } else {
                    acc -= ipow(d, k);
                }
                break;
            case DivisorFnKind::odd_cofactor_0:
                if ((n / d) % 2 == 1) {
                    acc += ipow(d, k);
                }
                break;
        }
    }
    return acc;
}

BigInt sigma(unsigned k, long n)
{
    return divisor_sum(DivisorFnKind::plain, k, n);
}

Rational sigma_iinf(unsigned k, long n)
{
    if (n < 0) {
        throw std::invalid_argument("sigma_iinf: n must be >= 0");
    }
    if (n == 0) {
        return (Rational(1) - pow2(static_cast<long>(k) + 1)) * bernoulli(k + 1)
               / Rational(2L * (static_cast<long>(k) + 1));
    }
    return Rational(divisor_sum(DivisorFnKind::alternating_iinf, k, n));
}

BigInt sigma_0cusp(unsigned k, long n)
{
    return divisor_sum(DivisorFnKind::odd_cofactor_0, k, n);
}

std::vector<Rational> sigma_iinf_table(unsigned k, long n_max)
{
    std::vector<Rational> out;
    for (long n = 0; n <= n_max; ++n) {
        out.push_back(sigma_iinf(k, n));
    }
    return out;
}

std::vector<BigInt> sigma_0cusp_table(unsigned k, long n_max)
{
    std::vector<BigInt> out{BigInt(0)};
    for (long n = 1; n <= n_max; ++n) {
        out.push_back(sigma_0cusp(k, n));
    }
    return out;
}

std::vector<Rational> rho_iinf_table(unsigned r, unsigned s, long n_max)
{
    const auto a = sigma_iinf_table(r, n_max);
    const auto b = r == s ? a : sigma_iinf_table(s, n_max);
    std::vector<Rational> out;
    for (long n = 0; n <= n_max; ++n) {
        Rational acc;
        for (long m = 0; m <= n; ++m) {
            acc += a[static_cast<std::size_t>(m)] * b[static_cast<std::size_t>(n - m)];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<BigInt> rho_0_table(unsigned r, unsigned s, long n_max)
{
    const auto a = sigma_0cusp_table(r, n_max);
    const auto b = r == s ? a : sigma_0cusp_table(s, n_max);
    std::vector<BigInt> out;
    for (long n = 0; n <= n_max; ++n) {
        BigInt acc;
        for (long m = 1; m <= n - 1; ++m) {
            acc += a[static_cast<std::size_t>(m)] * b[static_cast<std::size_t>(n - m)];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Rational rho_iinf(unsigned r, unsigned s, long n)
{
    if (n < 0) {
        throw std::invalid_argument("rho_iinf: n must be >= 0");
    }
    Rational acc;
    for (long m = 0; m <= n; ++m) {
        acc += sigma_iinf(r, m) * sigma_iinf(s, n - m);
    }
    return acc;
}

BigInt rho_0(unsigned r, unsigned s, long n)
{
    if (n < 0) {
        throw std::invalid_argument("rho_0: n must be >= 0");
    }
    BigInt acc;
    for (long m = 1; m <= n - 1; ++m) {
        acc += sigma_0cusp(r, m) * sigma_0cusp(s, n - m);
    }
    return acc;
}

} // namespace qforms
