#include <qforms/linear_system.hpp>

#include <utility>

namespace qforms
{

namespace
{

struct Echelon {
    std::vector<std::vector<BigInt>> a; // augmented, integer
    std::vector<std::size_t> pivot_cols;
    std::vector<int> provenance;
};

// Clears denominators row by row, then runs Bareiss' one-step elimination.
Echelon eliminate(const LinearSystem &sys)
{
    const std::size_t m = sys.rows();
    const std::size_t n = sys.columns();
    if (sys.rhs.size() != m) {
        throw std::invalid_argument("LinearSystem: rhs length differs from row count");
    }
    Echelon e;
    e.provenance = sys.provenance;
    e.provenance.resize(m, -1);
    e.a.assign(m, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        if (sys.matrix[i].size() != n) {
            throw std::invalid_argument("LinearSystem: ragged matrix");
        }
        BigInt l = sys.rhs[i].den();
        for (const auto &v : sys.matrix[i]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            e.a[i][j] = sys.matrix[i][j].num() * (l / sys.matrix[i][j].den());
        }
        e.a[i][n] = sys.rhs[i].num() * (l / sys.rhs[i].den());
    }

    BigInt prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && sgn(e.a[p][col]) == 0) {
            ++p;
        }
        if (p == m) {
            continue;
        }
        std::swap(e.a[p], e.a[row]);
        std::swap(e.provenance[p], e.provenance[row]);
        const BigInt &piv = e.a[row][col];
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j <= n; ++j) {
                BigInt t = e.a[i][j] * piv - e.a[i][col] * e.a[row][j];
                mpz_divexact(e.a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e.a[i][col] = 0;
        }
        prev = piv;
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

std::size_t fraction_free_rank(const LinearSystem &sys)
{
    return eliminate(sys).pivot_cols.size();
}

LinearSolution solve_fraction_free(const LinearSystem &sys)
{
    const std::size_t n = sys.columns();
    const Echelon e = eliminate(sys);
    const std::size_t rank = e.pivot_cols.size();
    for (std::size_t i = rank; i < e.a.size(); ++i) {
        if (sgn(e.a[i][n]) != 0) {
            throw InconsistentSystem(e.provenance[i]);
        }
    }
    if (rank < n) {
        throw RankDeficient(rank, n);
    }
    // full column rank: pivot k sits in column k
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc(e.a[k][n]);
        for (std::size_t j = k + 1; j < n; ++j) {
            if (sgn(e.a[k][j]) != 0) {
                acc -= Rational(e.a[k][j]) * x[j];
            }
        }
        x[k] = acc / Rational(e.a[k][k]);
    }
    return {std::move(x), rank};
}

} // namespace qforms
