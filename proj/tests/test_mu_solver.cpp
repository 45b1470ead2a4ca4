#include <doctest.h>

#include <qforms/mu_solver.hpp>
#include <qforms/oracle.hpp>

using namespace qforms;

namespace
{

RSeries basis_combination(int s, const MuTable &mu, int order)
{
    const auto basis = mu_basis(s, order);
    RSeries out(order);
    for (int l = 2; l <= s; ++l) {
        out += scale(basis[static_cast<std::size_t>(l - 2)], mu.at(l));
    }
    return out;
}

std::optional<int> t_side_mismatch(int s, const MuTable &mu, int order)
{
    return certify_equal(T8_power(s, order), basis_combination(s, mu, order)).first_mismatch;
}

} // namespace

TEST_CASE("tabulated values")
{
    CHECK(solve_mu(2, 40).mu == std::map<int, Rational>{{2, 36}});
    CHECK(solve_mu(3, 40).mu == std::map<int, Rational>{{2, 420}, {3, -200}});
    CHECK(solve_mu(4, 40).mu == std::map<int, Rational>{{2, 3168}, {3, -3600}, {4, 1764}});
    const MuTable m6 = solve_mu(6, 40);
    CHECK(m6.at(2) == Rational(49605048, 343));
    CHECK(m6.at(3) == Rational(-77902500, 343));
    CHECK(m6.at(4) == Rational(15741540, 49));
    CHECK(m6.at(5) == Rational(-139785750, 343));
    CHECK(m6.at(6) == Rational(74727180, 343));
}

TEST_CASE("s = 5 and the printed l = 4 entry")
{
    const MuTable m5 = solve_mu(5, 60);
    CHECK(m5.at(2) == Rational(21060));
    CHECK(m5.at(3) == Rational(-30810));
    CHECK(m5.at(4) == Rational(36960));
    CHECK(m5.at(5) == Rational(-19116));
    MuTable printed = m5;
    printed.mu[4] = Rational(36860);
    CHECK(t_side_mismatch(5, printed, 60) == 2);
}

TEST_CASE("table metadata")
{
    const MuTable m = solve_mu(4, 30, 3);
    CHECK(m.s == 4);
    CHECK(m.mu.size() == 3);
    CHECK(m.system_rows == 6);
    CHECK(m.rank == 3);
    CHECK(m.verified_order == 30);
    CHECK(m.row_exponents == std::vector<int>{2, 3, 4, 5, 6, 7});
}

TEST_CASE("formula examples")
{
    const MuTable m2 = solve_mu(2, 40);
    CHECK(r8s_formula(2, 0, m2) == 1);
    CHECK(r8s_formula(2, 1, m2) == 32);
    CHECK(r8s_formula(2, 2, m2) == 480);
    CHECK(t8s_formula(2, 0, m2) == 1);
    CHECK(t8s_formula(2, 1, m2) == 16);
    CHECK(t8s_formula(3, 0, solve_mu(3, 40)) == 1);
}

TEST_CASE("formulas agree with the series oracles")
{
    for (int s = 2; s <= 3; ++s) {
        const MuTable mu = solve_mu(s, 60);
        const auto r = r_oracle(static_cast<unsigned>(8 * s), 100);
        const auto t = t_oracle(static_cast<unsigned>(8 * s), 100);
        const auto rt = r8s_table(s, 100, mu);
        const auto tt = t8s_table(s, 100, mu);
        for (long n = 0; n <= 100; ++n) {
            CAPTURE(s);
            CAPTURE(n);
            CHECK(rt[static_cast<std::size_t>(n)] == r[static_cast<std::size_t>(n)]);
            CHECK(tt[static_cast<std::size_t>(n)] == t[static_cast<std::size_t>(n)]);
        }
        for (long n : {0L, 7L, 50L}) {
            CHECK(r8s_formula(s, n, mu) == rt[static_cast<std::size_t>(n)]);
            CHECK(t8s_formula(s, n, mu) == tt[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("theta identity")
{
    for (int s = 2; s <= 3; ++s) {
        const auto rep = theta_identity_check(s, solve_mu(s, 40), 40);
        CHECK(rep.passed);
        CHECK(rep.certified_order == 40);
    }
}

TEST_CASE("perturbing mu_2(2) is detected")
{
    MuTable bad = solve_mu(2, 40);
    bad.mu[2] = Rational(35);
    const auto rep = theta_identity_check(2, bad, 40);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.first_mismatch);
    CHECK(rep.first_mismatch->exponent == 0);
    CHECK(t_side_mismatch(2, bad, 40) == 2);
    CHECK_THROWS_AS(r8s_formula(2, 0, bad), NonIntegerResult);
}

TEST_CASE("extra rows do not change the solution")
{
    for (int s = 2; s <= 8; ++s) {
        CAPTURE(s);
        CHECK(solve_mu(s, 2 * s - 1).mu == solve_mu(s, 2 * s - 1, 5).mu);
    }
}

TEST_CASE("full column rank")
{
    for (int s = 2; s <= 12; ++s) {
        CAPTURE(s);
        CHECK(fraction_free_rank(mu_system(s)) == static_cast<std::size_t>(s - 1));
    }
}

TEST_CASE("integrality")
{
    for (int s = 2; s <= 6; ++s) {
        const MuTable mu = solve_mu(s, 2 * s + 20);
        CHECK_NOTHROW(r8s_table(s, 200, mu));
        CHECK_NOTHROW(t8s_table(s, 200, mu));
    }
}

TEST_CASE("r and t sides are linked through the basis identity")
{
    // Coefficient of q^n in T^{8s} reproduces t_{8s}(n - s).
    for (int s = 2; s <= 4; ++s) {
        const MuTable mu = solve_mu(s, 50);
        const RSeries combo = basis_combination(s, mu, 50);
        const auto t = t8s_table(s, 50 - s, mu);
        for (int n = s; n <= 50; ++n) {
            CHECK(combo[n] == Rational(t[static_cast<std::size_t>(n - s)]));
        }
        for (int n = 0; n < s; ++n) {
            CHECK(combo[n].is_zero());
        }
    }
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(solve_mu(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(solve_mu(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(solve_mu(4, 20, -1), std::invalid_argument);
    const MuTable m3 = solve_mu(3, 20);
    CHECK_THROWS_AS(r8s_formula(2, 1, m3), std::invalid_argument);
    CHECK_THROWS_AS(t8s_formula(3, -1, m3), std::invalid_argument);
    CHECK_THROWS_AS(r8s_formula(3, -1, m3), std::invalid_argument);
}
