#include <doctest.h>

#include <random>

#include <qforms/linear_system.hpp>

using namespace qforms;

namespace
{

LinearSystem make(std::vector<std::vector<Rational>> m, std::vector<Rational> b)
{
    LinearSystem sys{std::move(m), std::move(b), {}};
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        sys.provenance.push_back(static_cast<int>(i) + 2);
    }
    return sys;
}

// Textbook Gauss-Jordan over Q with the first nonzero pivot.
std::vector<Rational> gauss_jordan(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c].is_zero()) {
            ++p;
        }
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        const Rational inv = Rational(1) / a[c][c];
        for (auto &x : a[c]) {
            x *= inv;
        }
        b[c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && !a[r][c].is_zero()) {
                const Rational f = a[r][c];
                for (std::size_t k = 0; k < n; ++k) {
                    a[r][k] -= f * a[c][k];
                }
                b[r] -= f * b[c];
            }
        }
    }
    return b;
}

} // namespace

TEST_CASE("small known system")
{
    const auto sys = make({{2, 1}, {1, 3}}, {5, 10});
    const auto sol = solve_fraction_free(sys);
    CHECK(sol.rank == 2);
    CHECK(sol.x[0] == Rational(1));
    CHECK(sol.x[1] == Rational(3));
}

TEST_CASE("rational entries and a zero leading pivot")
{
    const auto sys = make({{0, Rational(1, 2)}, {Rational(2, 3), 1}}, {1, Rational(7, 3)});
    const auto sol = solve_fraction_free(sys);
    CHECK(sol.x[0] == Rational(1, 2));
    CHECK(sol.x[1] == Rational(2));
}

TEST_CASE("overdetermined consistent system")
{
    const auto sys = make({{1, 0}, {0, 1}, {1, 1}, {2, -1}}, {3, 4, 7, 2});
    const auto sol = solve_fraction_free(sys);
    CHECK(sol.x == std::vector<Rational>{3, 4});
    CHECK(fraction_free_rank(sys) == 2);
}

TEST_CASE("rank deficiency is reported")
{
    const auto sys = make({{1, 2}, {2, 4}, {3, 6}}, {1, 2, 3});
    CHECK(fraction_free_rank(sys) == 1);
    try {
        solve_fraction_free(sys);
        FAIL("expected RankDeficient");
    } catch (const RankDeficient &e) {
        CHECK(e.rank == 1);
        CHECK(e.columns == 2);
    }
}

TEST_CASE("inconsistency names the offending row")
{
    const auto sys = make({{1, 0}, {0, 1}, {1, 1}}, {1, 1, 3});
    try {
        solve_fraction_free(sys);
        FAIL("expected InconsistentSystem");
    } catch (const InconsistentSystem &e) {
        CHECK(e.provenance == 4);
    }
}

TEST_CASE("random systems agree with Gauss-Jordan")
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        std::vector<Rational> x(n);
        for (auto &row : a) {
            for (auto &v : row) {
                v = Rational(num(rng), den(rng));
            }
        }
        for (auto &v : x) {
            v = Rational(num(rng), den(rng));
        }
        std::vector<Rational> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                b[i] += a[i][j] * x[j];
            }
        }
        const auto sys = make(a, b);
        if (fraction_free_rank(sys) < n) {
            CHECK_THROWS_AS(solve_fraction_free(sys), RankDeficient);
            continue;
        }
        const auto sol = solve_fraction_free(sys);
        CHECK(sol.x == x);
        CHECK(sol.x == gauss_jordan(a, b));
    }
}

TEST_CASE("malformed systems")
{
    LinearSystem ragged{{{1, 2}, {3}}, {1, 2}, {0, 1}};
    CHECK_THROWS_AS(solve_fraction_free(ragged), std::invalid_argument);
    LinearSystem short_rhs{{{1, 2}, {3, 4}}, {1}, {0, 1}};
    CHECK_THROWS_AS(solve_fraction_free(short_rhs), std::invalid_argument);
}
