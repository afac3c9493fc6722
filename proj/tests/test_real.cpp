#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "burgess/interval.hpp"
#include "burgess/real.hpp"

using namespace burgess;

TEST_CASE("directed rounding brackets the exact value") {
    Real third_up = div(Real(1), Real(3), Round::Up);
    Real third_down = div(Real(1), Real(3), Round::Down);
    CHECK(third_down < third_up);
    Real three_up = mul(third_up, Real(3), Round::Up);
    Real three_down = mul(third_down, Real(3), Round::Down);
    CHECK(three_down < Real(1));
    CHECK(three_up > Real(1));
}

TEST_CASE("interval arithmetic encloses point evaluations") {
    Interval x = Interval::parse("2.5");
    Interval y = (x * x - iv(1)) / (x + iv(3));
    // (6.25 - 1) / 5.5 = 21/22
    Real exact = div(Real(21), Real(22));
    CHECK(y.lower() <= exact);
    CHECK(y.upper() >= exact);
    CHECK(y.width() < Real::parse("1e-45"));
}

TEST_CASE("interval log/exp/pow stay ordered") {
    Interval x = Interval::parse("7.25");
    Interval l = log(x);
    CHECK(l.lower() <= l.upper());
    Interval e = exp(l);
    CHECK(e.lower() <= Real::parse("7.25"));
    CHECK(e.upper() >= Real::parse("7.25"));
    Interval p = pow(x, Interval::parse("-0.375"));
    Real direct = pow(Real::parse("7.25"), Real::parse("-0.375"));
    CHECK(p.lower() <= direct);
    CHECK(p.upper() >= direct);
}

TEST_CASE("parse handles huge exponents") {
    Real p = Real::parse("1e3500");
    Real l = log(p);
    // log(10^3500) = 3500 log 10 ~ 8059.0
    CHECK(l > Real(8059));
    CHECK(l < Real(8060));
}

TEST_CASE("ceiling at the 4th decimal") {
    CHECK(abs(ceil_decimals(Real::parse("2.91840817"), 4) - Real::parse("2.9185")) <
          Real::parse("1e-40"));
    CHECK(abs(ceil_decimals(Real::parse("1.23650001"), 4) - Real::parse("1.2366")) <
          Real::parse("1e-40"));
}

TEST_CASE("double factorial convention") {
    CHECK(double_factorial_odd(-1) == Real(1));
    CHECK(double_factorial_odd(1) == Real(1));
    CHECK(double_factorial_odd(3) == Real(3));
    CHECK(double_factorial_odd(9) == Real(945));
}

TEST_CASE("working precision is configurable and floors at 30 digits") {
    CHECK(working_precision_digits() == 50);
    CHECK_THROWS(set_working_precision_digits(29));
    set_working_precision_digits(60);
    CHECK(working_precision_digits() == 60);
    set_working_precision_digits(50);
}
