#include <doctest.h>

#include <lozi/error.hpp>
#include <lozi/rational.hpp>

#include <cstdint>
#include <random>
#include <sstream>

using lozi::Rational;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
}

TEST_CASE("zero denominator") {
    CHECK_THROWS_AS(Rational(1, 0), lozi::DivisionByZeroError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), lozi::DivisionByZeroError);
    CHECK_THROWS_AS(Rational(0).reciprocal(), lozi::DivisionByZeroError);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("7/4") == Rational(7, 4));
    CHECK(Rational::parse("1.75") == Rational(7, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("2/6") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse("1/2/3"), lozi::ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1/2"), lozi::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), lozi::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), lozi::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2/3"), lozi::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), lozi::DivisionByZeroError);
}

TEST_CASE("str parse round-trip") {
    for (const char* text : {"0", "-5", "7/4", "-19/24", "10/51", "1291/2"}) {
        CAPTURE(text);
        CHECK(Rational::parse(text).str() == text);
    }
}

TEST_CASE("field identities on random triples") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int k = 0; k < 60; ++k) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
    }
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-7, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(7, 3).sign() == 1);
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(2, 3) >= Rational(2, 3));
}

TEST_CASE("compound assignment and stream output") {
    Rational r(1, 2);
    r += Rational(1, 3);
    CHECK(r == Rational(5, 6));
    r *= Rational(6, 5);
    CHECK(r == Rational(1));
    r /= Rational(4);
    CHECK(r == Rational(1, 4));
    std::ostringstream os;
    os << Rational(-3, 9);
    CHECK(os.str() == "-1/3");
}

TEST_CASE("to_double on exact dyadics") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-19, 8).to_double() == -2.375);
}

} // TEST_SUITE
