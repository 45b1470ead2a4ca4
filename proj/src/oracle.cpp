#include <qforms/oracle.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

#include <qforms/qseries.hpp>

namespace qforms
{

namespace
{

using ZSeries = QSeries<BigInt>;

std::vector<BigInt> to_vector(const ZSeries &a)
{
    return {a.coeffs().begin(), a.coeffs().end()};
}

long isqrt(long n)
{
    auto r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

void require_range(long n_max, const char *who)
{
    if (n_max < 0 || n_max > 1'000'000) {
        throw std::invalid_argument(std::string(who) + ": n_max out of range");
    }
}

} // namespace

std::vector<BigInt> r_oracle(unsigned s, long n_max)
{
    require_range(n_max, "r_oracle");
    const int order = static_cast<int>(n_max);
    ZSeries theta(order);
    theta.set(0, BigInt(1));
    for (long k = 1; k * k <= n_max; ++k) {
        theta.set(static_cast<int>(k * k), BigInt(2));
    }
    return to_vector(pow(theta, s));
}

std::vector<BigInt> t_oracle(unsigned s, long n_max)
{
    require_range(n_max, "t_oracle");
    const int order = static_cast<int>(n_max);
    ZSeries tri(order);
    for (long k = 0; k * (k + 1) / 2 <= n_max; ++k) {
        tri.set(static_cast<int>(k * (k + 1) / 2), BigInt(1));
    }
    return to_vector(pow(tri, s));
}

BigInt r_enumerate(unsigned s, long n)
{
    if (n < 0) {
        return 0;
    }
    std::function<BigInt(unsigned, long)> go = [&](unsigned left, long rest) -> BigInt {
        if (left == 0u) {
            return rest == 0 ? 1 : 0;
        }
        BigInt acc = 0;
        const long bound = isqrt(rest);
        for (long x = -bound; x <= bound; ++x) {
            acc += go(left - 1u, rest - x * x);
        }
        return acc;
    };
    return go(s, n);
}

BigInt t_enumerate(unsigned s, long n)
{
    if (n < 0) {
        return 0;
    }
    std::function<BigInt(unsigned, long)> go = [&](unsigned left, long rest) -> BigInt {
        if (left == 0u) {
            return rest == 0 ? 1 : 0;
        }
        BigInt acc = 0;
        for (long x = 0; x * (x + 1) / 2 <= rest; ++x) {
            acc += go(left - 1u, rest - x * (x + 1) / 2);
        }
        return acc;
    };
    return go(s, n);
}

std::vector<BigInt> r_lattice_table(unsigned s, long n_max)
{
    require_range(n_max, "r_lattice_table");
    if (s < 1u || s > 4u) {
        throw std::invalid_argument("r_lattice_table: s must be in 1..4");
    }
    std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1u, 0);
    const long b = isqrt(n_max);
    std::vector<long> x(s, -b);
    while (true) {
        long q = 0;
        for (long v : x) {
            q += v * v;
        }
        if (q <= n_max) {
            out[static_cast<std::size_t>(q)] += 1;
        }
        std::size_t i = 0;
        while (i < s && x[i] == b) {
            x[i] = -b;
            ++i;
        }
        if (i == s) {
            break;
        }
        ++x[i];
    }
    return out;
}

} // namespace qforms
