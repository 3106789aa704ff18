#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hw/rational.hpp"
#include "hw/series.hpp"

using namespace hw;

TEST_CASE("add multiply truncate") {
    TruncatedSeries a(3, {Rat(1), Rat(1), Rat(0), Rat(0)});  // 1 + z
    TruncatedSeries b(3, {Rat(1), Rat(-1), Rat(0), Rat(0)});
    auto prod = a * b;
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);
    CHECK(prod.coeff(3) == 0);
    auto sum = a + b;
    CHECK(sum.coeff(0) == 2);
    CHECK(sum.coeff(1) == 0);
    CHECK((a - a) == TruncatedSeries(3));
}

TEST_CASE("reciprocal") {
    TruncatedSeries a(4, {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0)});  // 1 - z
    auto r = a.reciprocal();
    for (int i = 0; i <= 4; ++i) CHECK(r.coeff(i) == 1);
    CHECK((a * r) == TruncatedSeries::one(4));
    CHECK(a.reciprocal().reciprocal() == a);
    CHECK_THROWS_AS(TruncatedSeries(2).reciprocal(), std::domain_error);
}

TEST_CASE("rescale and variable negation") {
    TruncatedSeries a(2, {Rat(1), Rat(2), Rat(3)});
    auto s = a.rescale(Rat(1, 2));
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == Rat(3, 4));
    auto n = a.negate_variable();
    CHECK(n.coeff(1) == -2);
    CHECK(n.coeff(2) == 3);
    CHECK(n.negate_variable() == a);
}

TEST_CASE("rational serialization") {
    CHECK(to_string(Rat(3, 6)) == "1/2");
    CHECK(to_string(Rat(-4, 2)) == "-2");
    CHECK(to_string(Rat(0)) == "0");
    CHECK(parse_rational("7/3") == Rat(7, 3));
    CHECK(parse_rational("-5") == Rat(-5));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}
