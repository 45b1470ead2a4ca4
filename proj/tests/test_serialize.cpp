#include <doctest.h>

#include <qforms/double_eisenstein.hpp>
#include <qforms/serialize.hpp>

using namespace qforms;

TEST_CASE("series json round trip")
{
    const ESeries z = Z_double(ParityPair::oo(), 3, 4, 15);
    const json j = series_to_json(z);
    CHECK(j.size() == 16);
    CHECK(j[0].at("n") == 0);
    const ESeries back = series_from_json(json::parse(j.dump()));
    CHECK(back.order() == 15);
    CHECK(back == z);
}

TEST_CASE("series csv round trip")
{
    const ESeries g = G(3, 10);
    const std::string csv = series_to_csv(g);
    CHECK(csv.rfind("n,value\n0,\"", 0) == 0);
    CHECK(series_from_csv(csv) == g);
    CHECK_THROWS_AS(series_from_csv("x,y\n0,1\n"), std::invalid_argument);
    CHECK_THROWS_AS(series_from_csv("n,value\n0,\"1\n"), std::invalid_argument);
    CHECK_THROWS_AS(series_from_csv("n,value\n"), std::invalid_argument);
}

TEST_CASE("json with gaps")
{
    const json j = json::parse(R"([{"n": 0, "coeff": "1"}, {"n": 3, "coeff": "-1/2 + 2*z3"}])");
    const ESeries a = series_from_json(j);
    CHECK(a.order() == 3);
    CHECK(a[1].is_zero());
    CHECK(a[3].symbol_coefficient(3) == Rational(2));
    CHECK(a[3].rational_part() == Rational(-1, 2));
    CHECK_THROWS_AS(series_from_json(json::object()), std::invalid_argument);
    CHECK_THROWS_AS(series_from_json(json::parse(R"([{"n": -1, "coeff": "1"}])")), std::invalid_argument);
}

TEST_CASE("csv quoting")
{
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_quote("") == "\"\"");
}

TEST_CASE("mu table formats")
{
    MuTable t;
    t.s = 3;
    t.mu = {{2, Rational(420)}, {3, Rational(-200)}};
    t.system_rows = 2;
    t.rank = 2;
    t.verified_order = 40;
    t.row_exponents = {2, 3};
    CHECK(mu_to_csv(t) == "l,value\n2,\"420\"\n3,\"-200\"\n");
    const json j = mu_to_json(t);
    CHECK(j.at("s") == 3);
    CHECK(j.at("mu")[1].at("value") == "-200");
    CHECK(j.at("verified_order") == 40);
    CHECK(mu_to_pretty(t).find("mu_3(3) = -200") != std::string::npos);
}

TEST_CASE("report formats")
{
    VerificationReport r;
    r.identity = "star";
    r.parameters = {{"r", "4"}, {"s", "6"}};
    r.passed = false;
    r.first_mismatch = Mismatch{5, "1/2", "1/3"};
    r.certified_order = 20;
    r.notes = {"note"};
    r.elapsed_ms = 12.5;
    const json j = report_to_json(r);
    CHECK(j.at("passed") == false);
    CHECK(j.at("first_mismatch").at("exponent") == 5);
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(report_to_json(r, true).at("elapsed_ms") == 12.5);
    const std::string pretty = report_to_pretty(r);
    CHECK(pretty.rfind("FAIL star", 0) == 0);
    CHECK(pretty.find("mismatch at q^5: 1/2 != 1/3") != std::string::npos);
}
