#include <doctest.h>

#include "gheights/interval.hpp"
#include "gheights/numeric.hpp"

using namespace gheights;

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(Rat(4)) == 2);
    CHECK(*exact_sqrt(Rat(49, 9)) == Rat(7, 3));
    CHECK(*exact_sqrt(Rat(0)) == 0);
    CHECK(!exact_sqrt(Rat(2)).has_value());
    CHECK(!exact_sqrt(Rat(-4)).has_value());
    CHECK(!exact_sqrt(Rat(8, 3)).has_value());
}

TEST_CASE("rational content") {
    CHECK(rational_content({Rat(4), Rat(6)}) == 2);
    CHECK(rational_content({Rat(1, 2), Rat(1, 3)}) == Rat(1, 6));
    CHECK(rational_content({Rat(-2, 3), Rat(4, 3)}) == Rat(2, 3));
    CHECK(rational_content({Rat(0), Rat(0)}) == 0);
}

TEST_CASE("parse and format") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-7") == -7);
    CHECK(format_rat(Rat(3, 4)) == "3/4");
    CHECK(format_rat(Rat(-8, 2)) == "-4");
    CHECK_THROWS_AS(parse_rat("x"), SchemaError);
    CHECK_THROWS_AS(parse_rat("1/0"), SchemaError);
}

TEST_CASE("decimal strings truncate toward zero") {
    CHECK(decimal_string(Rat(1, 3), 5) == "0.33333");
    CHECK(decimal_string(Rat(-1, 3), 5) == "-0.33333");
    CHECK(decimal_string(Rat(7), 2) == "7.00");
}

TEST_CASE("prime factors at desk scale") {
    auto f = prime_factors(Int(49));
    REQUIRE(f.size() == 1);
    CHECK(f[0] == 7);
    auto g = prime_factors(Int(-2012));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == 2);
    CHECK(g[1] == 503);
    CHECK(prime_factors(Int(1)).empty());
    CHECK_THROWS_AS(prime_factors(Int("10000000000001")), ScaleError);
}

TEST_CASE("interval arithmetic basics") {
    RealInterval a(Rat(1), Rat(2));
    RealInterval b(Rat(-1), Rat(1));
    CHECK((a * b).lo() == -2);
    CHECK((a * b).hi() == 2);
    CHECK((a + b).lo() == 0);
    CHECK(b.square().lo() == 0);
    CHECK(b.square().hi() == 1);
    CHECK(a.pow(3).lo() == 1);
    CHECK(a.pow(3).hi() == 8);
    CHECK_THROWS_AS(b.inverse(), DivisionByZero);
    CHECK(a.inverse().lo() == Rat(1, 2));
}

TEST_CASE("interval sqrt is outward and exact on squares") {
    RealInterval four{Rat(4)};
    auto s = four.sqrt_outward(64);
    CHECK(s.is_point());
    CHECK(s.lo() == 2);
    RealInterval two{Rat(2)};
    auto r = two.sqrt_outward(64);
    CHECK(r.lo() * r.lo() <= 2);
    CHECK(r.hi() * r.hi() >= 2);
    CHECK(r.width() <= Rat(1, Int(1) << 62));
}

TEST_CASE("complex enclosure division") {
    ComplexEnclosure i(RealInterval(Rat(0)), RealInterval(Rat(1)));
    ComplexEnclosure one(RealInterval(Rat(1)), RealInterval(Rat(0)));
    auto q = one / i;
    CHECK(q.real().contains(Rat(0)));
    CHECK(q.imaginary().contains(Rat(-1)));
}
