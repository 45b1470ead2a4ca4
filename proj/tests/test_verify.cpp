#include <doctest.h>

#include <qforms/verify.hpp>

using namespace qforms;

TEST_CASE("shuffle relations through weight 8")
{
    for (unsigned r = 1; r <= 7; ++r) {
        for (unsigned s = 1; r + s <= 8; ++s) {
            for (auto kind : {ShuffleKind::oe, ShuffleKind::oo}) {
                const auto rep = check_shuffle(kind, r, s, 20);
                CAPTURE(to_string(kind));
                CAPTURE(r);
                CAPTURE(s);
                CHECK(rep.passed);
                CHECK(rep.certified_order == 20);
                CHECK(rep.convention == "ge1");
            }
        }
    }
}

TEST_CASE("the other index convention fails early")
{
    const auto rep = check_shuffle(ShuffleKind::oe, 1, 1, 20, {IndexConvention::ge2, true, {}});
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.first_mismatch);
    CHECK(rep.first_mismatch->exponent <= 3);
    CHECK(rep.convention == "ge2");
}

TEST_CASE("the literal unit case misses exactly alpha_4")
{
    const int order = 25;
    ShuffleOptions literal;
    literal.alpha4_at_unit = false;
    const auto rep = check_shuffle(ShuffleKind::oo, 1, 1, order, literal);
    CHECK_FALSE(rep.passed);
    const ESeries lhs = G_0(1, order) * G_0(1, order);
    const ESeries middle = scale(Z_double(ParityPair::oo(), 1, 1, order), Rational(2)) + G_0(2, order);
    CHECK(lhs - middle == to_ext(alpha(4, order)));
    const auto fixed = check_shuffle(ShuffleKind::oo, 1, 1, order);
    CHECK(fixed.passed);
    CHECK(fixed.notes.size() == 1);
}

TEST_CASE("dropping epsilon breaks the unit case")
{
    ShuffleOptions opt;
    opt.z_double = [](ParityPair pp, unsigned r, unsigned s, int order) {
        ESeries z = Z_double(pp, r, s, order);
        if (pp == ParityPair::oo()) {
            z -= to_ext(scale(epsilon(pp, r, s, order), Rational(1, 4)));
        }
        return z;
    };
    CHECK_FALSE(check_shuffle(ShuffleKind::oo, 1, 1, 20, opt).passed);
}

TEST_CASE("summation formula")
{
    for (unsigned k = 4; k <= 12; k += 2) {
        CAPTURE(k);
        CHECK(check_summation(k, 20).passed);
    }
    CHECK_FALSE(check_summation(6, 20, SummationTerms::all_r).passed);
}

TEST_CASE("product decomposition")
{
    for (unsigned r = 4; r <= 8; r += 2) {
        for (unsigned s = 4; s <= 8; s += 2) {
            CHECK(check_star(r, s, 20).passed);
        }
    }
}

TEST_CASE("partial fractions at rational points")
{
    const std::vector<PartialFractionSample> samples{
        {Rational(1, 3), 2, 0}, {Rational(5, 7), 1, -2}, {Rational(-1, 2), 3, 1}};
    for (auto [r, s] : {std::pair{2u, 2u}, {1u, 3u}, {3u, 1u}, {4u, 5u}}) {
        CAPTURE(r);
        CAPTURE(s);
        CHECK(check_partial_fraction(r, s, samples).passed);
    }
    CHECK_THROWS_AS(check_partial_fraction(2, 2, {{Rational(0), 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(check_partial_fraction(2, 2, {{Rational(1, 2), 1, 1}}), std::invalid_argument);
}

TEST_CASE("lattice sum against the expansion")
{
    const auto rep = check_prop4(ParityPair::eo(), 4, 3, Complex(0.0, 1.2), 300, 60, 1e-8);
    CHECK(rep.passed);
    REQUIRE(rep.relative_error);
    CHECK(*rep.relative_error < 1e-8);
    CHECK_THROWS_AS(check_prop4(ParityPair::oo(), 2, 2, Complex(0.0, 1.0), 10, 10, 1e-6), std::invalid_argument);
}

TEST_CASE("theta and T transformation")
{
    const auto rep = check_transformation(2, Complex(0.0, 1.0), 200, 1e-8);
    CHECK(rep.passed);
    REQUIRE(rep.relative_error);
    CHECK(*rep.relative_error < 1e-8);
    CHECK(check_transformation(3, Complex(0.25, 0.75), 300, 1e-6).passed);
}

TEST_CASE("degenerate transformation points abort")
{
    const auto rep = check_transformation(2, Complex(0.0, 50.0), 200, 1e-8);
    CHECK_FALSE(rep.passed);
    REQUIRE_FALSE(rep.notes.empty());
    CHECK(rep.notes.front().rfind("aborted:", 0) == 0);
    CHECK(transformation_floor(2, 200, 1e-8) > 0.0);
}

TEST_CASE("suite output is independent of the thread count")
{
    SuiteOptions one;
    one.order = 10;
    one.threads = 1;
    SuiteOptions many = one;
    many.threads = 4;
    for (Suite suite : {Suite::shuffle, Suite::summation, Suite::star}) {
        const auto a = run_suite(suite, one);
        const auto b = run_suite(suite, many);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].identity == b[i].identity);
            CHECK(a[i].parameters == b[i].parameters);
            CHECK(a[i].passed == b[i].passed);
            CHECK(a[i].passed);
        }
    }
}

TEST_CASE("shuffle suite records the convention first")
{
    SuiteOptions opt;
    opt.order = 8;
    const auto reps = run_suite(Suite::shuffle, opt);
    REQUIRE_FALSE(reps.empty());
    CHECK(reps.front().identity == "shuffle_convention");
    CHECK(reps.front().convention == "ge1");
}

TEST_CASE("suite names")
{
    CHECK(parse_suite("all") == Suite::all);
    CHECK(parse_suite("shuffle") == Suite::shuffle);
    CHECK(parse_suite("transform") == Suite::transform);
    CHECK_THROWS_AS(parse_suite("bogus"), std::invalid_argument);
}
