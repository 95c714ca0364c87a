#include <doctest.h>

#include <random>

#include "hatgrid/exactnum.hpp"
#include "support/decimal_oracle.hpp"

using namespace hatgrid;

namespace {

GoldenNumber g(long qn, long qd, long rn, long rd)
{
    return {Rational(qn, qd), Rational(rn, rd)};
}

}  // namespace

TEST_CASE("construction from rational and phi parts")
{
    CHECK(GoldenNumber::make(1, 0) == GoldenNumber(1));
    CHECK(GoldenNumber::make(0, 1) == GoldenNumber::phi());
    CHECK(GoldenNumber::make(1, 1) == GoldenNumber::Phi());
    CHECK(GoldenNumber::Phi() - GoldenNumber::phi() == GoldenNumber(1));
}

TEST_CASE("golden identities")
{
    auto phi = GoldenNumber::phi(), Phi = GoldenNumber::Phi();
    CHECK(phi * Phi == GoldenNumber(1));
    CHECK(phi * phi == GoldenNumber(1) - phi);
    CHECK(Phi * Phi == Phi + GoldenNumber(1));
    CHECK(Phi * Phi == GoldenNumber(2) + phi);
    CHECK(pow(phi, 3) == GoldenNumber(2) * phi - GoldenNumber(1));
    CHECK(pow(phi, -1) == Phi);
    CHECK(pow(Phi, 0) == GoldenNumber(1));
}

TEST_CASE("field laws on random elements")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int i = 0; i < 500; ++i) {
        auto x = g(num(rng), den(rng), num(rng), den(rng));
        auto y = g(num(rng), den(rng), num(rng), den(rng));
        auto z = g(num(rng), den(rng), num(rng), den(rng));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x - x == GoldenNumber(0));
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == GoldenNumber(1));
            CHECK((y / x) * x == y);
        }
        CHECK(x * x.conjugate() == GoldenNumber(x.norm()));
    }
}

TEST_CASE("compare examples")
{
    auto phi = GoldenNumber::phi();
    CHECK(compare(GoldenNumber::Phi(), GoldenNumber(1) + phi) == Order::equal);
    CHECK(compare(phi, GoldenNumber(1)) == Order::less);
    // 3 phi against 2, checked with the decimal reference
    int expect = oracle::sign_of(oracle::value(0, 1, 3, 1) - 2);
    CHECK(expect == -1);
    CHECK(compare(GoldenNumber(3) * phi, GoldenNumber(2)) == Order::less);
}

TEST_CASE("floor examples")
{
    auto phi = GoldenNumber::phi();
    CHECK(floor(phi) == 0);
    CHECK(floor(-phi) == -1);
    CHECK(oracle::floor_of(oracle::value(0, 1, 5, 1)) == 3);
    CHECK(floor(GoldenNumber(5) * phi) == 3);
    CHECK(floor(GoldenNumber(Rational(-7, 2))) == -4);
    CHECK(floor(GoldenNumber(4)) == 4);
    CHECK(floor_i64(GoldenNumber(Rational(1, 5)) + GoldenNumber(2) * phi) == 1);
}

TEST_CASE("floor and sign near cancellation agree with the decimal reference")
{
    // q + r phi with q/r a Fibonacci convergent: tiny values of both signs
    long f[40];
    f[0] = 0;
    f[1] = 1;
    for (int i = 2; i < 40; ++i) f[i] = f[i - 1] + f[i - 2];
    for (int i = 2; i < 38; ++i)
        for (int s : {-1, 1}) {
            auto x = g(s * f[i - 1], 1, -s * f[i], 1);
            auto ref = oracle::value(s * f[i - 1], 1, -s * f[i], 1);
            CHECK(x.sign() == oracle::sign_of(ref));
            CHECK(floor(x) == static_cast<long>(oracle::floor_of(ref)));
        }
}

TEST_CASE("ordering is consistent with subtraction sign")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 100);
    for (int i = 0; i < 2000; ++i) {
        auto x = g(num(rng), den(rng), num(rng), den(rng));
        auto y = g(num(rng), den(rng), num(rng), den(rng));
        int s = (x - y).sign();
        auto o = compare(x, y);
        CHECK(o == (s < 0 ? Order::less : s > 0 ? Order::greater : Order::equal));
        CHECK((x < y) == (s < 0));
    }
}

TEST_CASE("parse and print round trip")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), MalformedNumber);
    CHECK_THROWS_AS(parse_rational("abc"), MalformedNumber);
    CHECK(GoldenNumber::parse("1+phi") == GoldenNumber::Phi());
    CHECK(GoldenNumber::parse("-2/3*phi") == g(0, 1, -2, 3));
    CHECK(GoldenNumber::parse("1/5-3*phi") == g(1, 5, -3, 1));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 12);
    for (int i = 0; i < 300; ++i) {
        auto x = g(num(rng), den(rng), num(rng), den(rng));
        CHECK(GoldenNumber::parse(x.str()) == x);
    }
}

TEST_CASE("lattice membership")
{
    CHECK(GoldenNumber(3).in_integer_lattice());
    CHECK((GoldenNumber(2) - GoldenNumber(5) * GoldenNumber::phi()).in_integer_lattice());
    CHECK_FALSE(GoldenNumber(Rational(1, 5)).in_integer_lattice());
    CHECK_FALSE(g(0, 1, 1, 2).in_integer_lattice());
}
