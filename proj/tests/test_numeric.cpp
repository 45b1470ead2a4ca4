#include <doctest.h>

#include <cmath>
#include <numbers>

#include <qforms/numeric.hpp>

using namespace qforms;

namespace
{

const ParityPair all_pairs[] = {ParityPair::eo(), ParityPair::oe(), ParityPair::oo()};

ESeries rational_part(const ESeries &a)
{
    return a.map([](const ExtScalar &c) { return ExtScalar(c.rational_part()); });
}

} // namespace

TEST_CASE("Kahan summation")
{
    KahanSum k;
    k += Complex(1.0, 0.0);
    for (int i = 0; i < 1000000; ++i) {
        k += Complex(1e-16, -1e-16);
    }
    CHECK(k.value().real() == doctest::Approx(1.0 + 1e-10).epsilon(1e-14));
    CHECK(k.value().imag() == doctest::Approx(-1e-10).epsilon(1e-12));
}

TEST_CASE("Euler-Maclaurin tail against a long direct sum")
{
    const Complex z(0.3, 1.7);
    for (unsigned k = 2; k <= 6; ++k) {
        Complex direct = 0.0;
        for (long n = 2000000; n > 50; --n) {
            direct += std::pow(z + static_cast<double>(n), -static_cast<int>(k));
        }
        const Complex rest = em_tail(z, k, 2000000);
        const Complex tail = em_tail(z, k, 50);
        CAPTURE(k);
        CHECK(std::abs(tail - (direct + rest)) < 1e-13 * std::abs(tail));
    }
    CHECK_THROWS_AS(em_tail(z, 1, 10), std::invalid_argument);
}

TEST_CASE("zeta values")
{
    const double pi = std::numbers::pi;
    CHECK(zeta_numeric(2) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
    CHECK(zeta_numeric(3) == doctest::Approx(1.2020569031595942).epsilon(1e-15));
    CHECK(zeta_numeric(4) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-15));
    CHECK(zeta_tilde_numeric(1) == Complex(0.0, 0.0));
    const Complex z2 = zeta_tilde_numeric(2);
    CHECK(z2.real() == doctest::Approx(-1.0 / 24).epsilon(1e-14));
    CHECK_THROWS_AS(zeta_numeric(1), std::invalid_argument);
}

TEST_CASE("series evaluation")
{
    const RSeries t = theta_unit(40);
    const Complex q = q_of_tau(Complex(0.0, 1.0));
    CHECK(q.real() == doctest::Approx(std::exp(-2 * std::numbers::pi)).epsilon(1e-15));
    const double expect = 1 + 2 * (q.real() + std::pow(q.real(), 4) + std::pow(q.real(), 9));
    CHECK(evaluate(t, q).real() == doctest::Approx(expect).epsilon(1e-15));
    const ESeries g3 = G(3, 30);
    const Complex direct = zeta_tilde_numeric(3) + evaluate(rational_part(g3), q);
    CHECK(std::abs(evaluate(g3, q) - direct) < 1e-15);
}

TEST_CASE("box and diamond truncations agree")
{
    for (const auto &pp : all_pairs) {
        LatticeTruncation box{300, Complex(0.1, 1.1), TruncationShape::box, true};
        LatticeTruncation diamond = box;
        diamond.shape = TruncationShape::diamond;
        const Complex a = lattice_double_sum(pp, 3, 2, box);
        const Complex b = lattice_double_sum(pp, 3, 2, diamond);
        CAPTURE(pp.name());
        CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
    }
}

TEST_CASE("uncorrected box converges as M grows")
{
    const Complex tau(0.0, 1.2);
    const Complex exact = evaluate(Z_double(ParityPair::eo(), 4, 3, 20), q_of_tau(tau));
    double prev = 1.0;
    for (long M : {50L, 100L, 200L}) {
        const Complex v = lattice_double_sum(ParityPair::eo(), 4, 3, {M, tau, TruncationShape::box, false});
        const double err = std::abs(v - exact) / std::abs(exact);
        CAPTURE(M);
        CHECK(err < 0.75 * prev);
        prev = err;
    }
}

TEST_CASE("imaginary axis splits rational and symbolic parts")
{
    // q is real on the imaginary axis, and each z_p is purely imaginary.
    const Complex tau(0.0, 1.3);
    const Complex q = q_of_tau(tau);
    for (const auto &pp : all_pairs) {
        for (unsigned r : {3u, 4u, 5u}) {
            for (unsigned s : {2u, 3u}) {
                const ESeries z = Z_double(pp, r, s, 30);
                const Complex v = lattice_double_sum(pp, r, s, {400, tau, TruncationShape::box, true});
                const Complex rat = evaluate(rational_part(z), q);
                const Complex sym = evaluate(z - rational_part(z), q);
                CAPTURE(pp.name());
                CAPTURE(r);
                CAPTURE(s);
                CHECK(std::abs(rat.imag()) <= 1e-14 * std::abs(rat));
                CHECK(std::abs(sym.real()) <= 1e-14 * std::abs(v));
                CHECK(v.real() == doctest::Approx(rat.real()).epsilon(1e-9));
                CHECK(v.imag() == doctest::Approx(sym.imag()).epsilon(1e-9).scale(std::abs(v)));
            }
        }
    }
}

TEST_CASE("lattice argument validation")
{
    CHECK_THROWS_AS(lattice_double_sum(ParityPair::oo(), 2, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_double_sum(ParityPair::oo(), 3, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_double_sum(ParityPair::oo(), 3, 2, {0, Complex(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_double_sum(ParityPair::oo(), 3, 2, {10, Complex(0, -1)}), std::invalid_argument);
}
