#include <qforms/exact.hpp>

#include <mutex>
#include <vector>

namespace qforms
{

namespace
{

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

} // namespace

Rational bernoulli(unsigned k)
{
    if (k >= 3 && k % 2 == 1) {
        return Rational(0);
    }
    std::lock_guard lock(bernoulli_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
    for (auto m = static_cast<unsigned>(bernoulli_table.size()); m <= k; ++m) {
        Rational acc;
        for (unsigned j = 0; j < m; ++j) {
            if (!bernoulli_table[j].is_zero()) {
                acc += Rational(binomial(m + 1, j)) * bernoulli_table[j];
            }
        }
        bernoulli_table.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return bernoulli_table[k];
}

BigInt binomial(unsigned n, long k)
{
    if (k < 0 || k > static_cast<long>(n)) {
        return BigInt(0);
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational pow2(long e)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

} // namespace qforms
