#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <qforms/exact.hpp>
#include <qforms/numeric.hpp>
#include <qforms/zeta_ext.hpp>

using namespace qforms;

TEST_CASE("zeta_tilde examples")
{
    CHECK(zeta_tilde(1).is_zero());
    CHECK(zeta_tilde(2) == ExtScalar(Rational(-1, 24)));
    const ExtScalar z3 = zeta_tilde(3);
    CHECK(z3.rational_part().is_zero());
    CHECK(z3.symbol_coefficient(3) == Rational(1));
    CHECK(z3.symbolic_part().size() == 1);
}

TEST_CASE("even zeta_tilde matches zeta(2k) / (2 pi i)^{2k}")
{
    const double pi = std::numbers::pi;
    CHECK(zeta_tilde(2).as_rational().to_double() == doctest::Approx(-(pi * pi / 6.0) / (4.0 * pi * pi)).epsilon(1e-14));
    for (unsigned k = 2; k <= 20; k += 2) {
        const double expected = zeta_numeric(k) * (k % 4 == 0 ? 1.0 : -1.0) / std::pow(2.0 * pi, k);
        CHECK(zeta_tilde(k).as_rational().to_double() == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("beta")
{
    CHECK(beta(2) == Rational(-1, 24));
    CHECK(beta(3) == Rational(0));
    CHECK(beta(1) == Rational(1, 4));
    for (unsigned k = 2; k <= 40; k += 2) {
        CHECK(zeta_tilde(k) == ExtScalar(beta(k)));
    }
}

TEST_CASE("ring operations")
{
    const ExtScalar a = ExtScalar(Rational(1, 2)) + ExtScalar::symbol(3, Rational(2));
    const ExtScalar b = ExtScalar(Rational(1, 2)) - ExtScalar::symbol(3);
    CHECK(a + b == ExtScalar(1) + ExtScalar::symbol(3));
    CHECK(ExtScalar(3) * (ExtScalar(Rational(1, 3)) + ExtScalar::symbol(5)) == ExtScalar(1) + ExtScalar::symbol(5, Rational(3)));
    CHECK_THROWS_AS(ExtScalar::symbol(3) * ExtScalar::symbol(3), SymbolicProductError);
    CHECK_THROWS_AS(ExtScalar::symbol(3) * ExtScalar::symbol(5), SymbolicProductError);
    const ExtScalar c = ExtScalar::symbol(3) - ExtScalar::symbol(3);
    CHECK(c.is_zero());
    CHECK_FALSE(c.has_symbols());
    CHECK_THROWS_AS(ExtScalar::symbol(4), std::invalid_argument);
    CHECK_THROWS_AS(ExtScalar::symbol(1), std::invalid_argument);
    CHECK_THROWS_AS(ExtScalar::symbol(3).as_rational(), std::domain_error);
}

TEST_CASE("string encoding")
{
    const ExtScalar x = ExtScalar(Rational(1, 2)) + ExtScalar::symbol(5, Rational(-1, 5)) + ExtScalar::symbol(3, Rational(3));
    CHECK(x.to_string() == "1/2 + 3*z3 - 1/5*z5");
    CHECK(ExtScalar(Rational(-7, 3)).to_string() == "-7/3");
    CHECK(ExtScalar::parse(x.to_string()) == x);
    CHECK(ExtScalar::parse("z3") == ExtScalar::symbol(3));
    CHECK(ExtScalar::parse("-2/3") == ExtScalar(Rational(-2, 3)));
    CHECK_THROWS(ExtScalar::parse("1 + 2*z4"));
    CHECK_THROWS(ExtScalar::parse("1 + 2*y3"));
}

TEST_CASE("coordinates are Q-linear")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        const ExtScalar a = ExtScalar(rnd()) + ExtScalar::symbol(3, rnd()) + ExtScalar::symbol(7, rnd());
        const ExtScalar b = ExtScalar(rnd()) + ExtScalar::symbol(5, rnd()) + ExtScalar::symbol(7, rnd());
        const Rational c = rnd();
        const ExtScalar s = a * c + b;
        CHECK(s.rational_part() == a.rational_part() * c + b.rational_part());
        for (int p : {3, 5, 7, 9}) {
            CHECK(s.symbol_coefficient(p) == a.symbol_coefficient(p) * c + b.symbol_coefficient(p));
        }
        CHECK(ExtScalar::parse(s.to_string()) == s);
    }
}
