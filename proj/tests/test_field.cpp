#include "polyquat/field.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyquat::field;

TEST_CASE("basis products") {
    CHECK(FieldElement::sqrt2() * FieldElement::sqrt2() == FieldElement(2));
    CHECK(FieldElement::sqrt5() * FieldElement::sqrt5() == FieldElement(5));
    CHECK(FieldElement::sqrt10() * FieldElement::sqrt10() == FieldElement(10));
    CHECK(FieldElement::sqrt2() * FieldElement::sqrt5() == FieldElement::sqrt10());
    CHECK(FieldElement::sqrt2() * FieldElement::sqrt10() ==
          FieldElement(2) * FieldElement::sqrt5());
    CHECK(FieldElement::sqrt5() * FieldElement::sqrt10() ==
          FieldElement(5) * FieldElement::sqrt2());
}

TEST_CASE("golden ratio identities") {
    const FieldElement tau = FieldElement::tau();
    const FieldElement sigma = FieldElement::sigma();
    CHECK(tau + sigma == FieldElement(1));
    CHECK(tau * sigma == FieldElement(-1));
    CHECK(tau * tau == tau + FieldElement(1));
    CHECK(sigma * sigma == sigma + FieldElement(1));
    CHECK(tau.inverse() == tau - FieldElement(1));
}

TEST_CASE("inverse") {
    FieldElement x(Rational(3), Rational(2), Rational(-1), Rational(1, 3));
    CHECK(x * x.inverse() == FieldElement(1));
    CHECK(x.inverse() * x == FieldElement(1));
    CHECK(FieldElement::sqrt2().inverse() ==
          FieldElement(Rational(0), Rational(1, 2), Rational(0), Rational(0)));
    CHECK_THROWS_AS(FieldElement(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldElement(1) / FieldElement(0), DivisionByZero);
}

TEST_CASE("galois conjugates fix the rationals") {
    FieldElement x(Rational(3), Rational(2), Rational(-1), Rational(1, 3));
    FieldElement norm = x * x.conj_sqrt2() * x.conj_sqrt5() * (x.conj_sqrt2().conj_sqrt5());
    CHECK(norm.is_rational());
}

TEST_CASE("sign by interval refinement") {
    CHECK(FieldElement(0).sign() == 0);
    CHECK(FieldElement::sqrt2().sign() == 1);
    CHECK((-FieldElement::sqrt10()).sign() == -1);
    CHECK(FieldElement::sigma().sign() == -1);
    // 3363/2378 is a continued fraction convergent of sqrt2: the difference
    // is about 2e-8 and still has a decidable sign.
    CHECK((FieldElement(Rational(3363, 2378)) - FieldElement::sqrt2()).sign() == 1);
    CHECK((FieldElement(Rational(1393, 985)) - FieldElement::sqrt2()).sign() == -1);
    // sqrt2*sqrt5 - sqrt10 is exactly zero, not a tiny number.
    CHECK((FieldElement::sqrt2() * FieldElement::sqrt5() - FieldElement::sqrt10()).sign() ==
          0);
    CHECK((FieldElement::tau() - FieldElement(Rational(1618, 1000))).sign() == 1);
    CHECK((FieldElement::tau() - FieldElement(Rational(16181, 10000))).sign() == -1);
}

TEST_CASE("total order") {
    CHECK(FieldElement(1) < FieldElement::sqrt2());
    CHECK(FieldElement::sqrt2() < FieldElement::tau());
    CHECK(FieldElement::tau() < FieldElement(2));
    CHECK(FieldElement::sqrt5() < FieldElement::sqrt10());
    CHECK_FALSE(FieldElement::sqrt2() < FieldElement::sqrt2());
}

TEST_CASE("float export") {
    CHECK(std::abs(FieldElement::sqrt2().to_float() - 1.4142135623730951) < 1e-15);
    CHECK(std::abs(FieldElement::tau().to_float() - 1.6180339887498949) < 1e-15);
    FieldElement x(Rational(-7, 3), Rational(1, 5), Rational(2), Rational(-1, 7));
    double expected = -7.0 / 3 + 0.2 * std::sqrt(2.0) + 2 * std::sqrt(5.0) -
                      std::sqrt(10.0) / 7;
    CHECK(std::abs(x.to_float() - expected) < 1e-12);
    CHECK(std::abs(x.to_float(256) - expected) < 1e-12);
}

TEST_CASE("string round trip") {
    const FieldElement samples[] = {
        FieldElement(0),
        FieldElement(Rational(-5, 3)),
        FieldElement::sqrt2(),
        -FieldElement::sqrt10(),
        FieldElement::tau(),
        FieldElement(Rational(3), Rational(-2, 7), Rational(0), Rational(11, 4)),
    };
    for (const auto& x : samples) CHECK(FieldElement::parse(x.str()) == x);
    CHECK(FieldElement::parse("1/2 + 1/2*r5") == FieldElement::tau());
    CHECK(FieldElement::parse("-r2") == -FieldElement::sqrt2());
    CHECK_THROWS_AS(FieldElement::parse("1 + r3"), ParseError);
    CHECK_THROWS_AS(FieldElement::parse(""), ParseError);
}

TEST_CASE("rational square roots in the field") {
    auto r = sqrt_rational(Rational(9, 4));
    REQUIRE(r);
    CHECK(*r == FieldElement(Rational(3, 2)));
    r = sqrt_rational(Rational(2));
    REQUIRE(r);
    CHECK(*r == FieldElement::sqrt2());
    r = sqrt_rational(Rational(50));
    REQUIRE(r);
    CHECK(*r == FieldElement(5) * FieldElement::sqrt2());
    r = sqrt_rational(Rational(49, 10));
    REQUIRE(r);
    CHECK(*r * *r == FieldElement(Rational(49, 10)));
    CHECK(sqrt_rational(Rational(0)));
    CHECK_FALSE(sqrt_rational(Rational(3)));
    CHECK_FALSE(sqrt_rational(Rational(-4)));
}

TEST_CASE("hash respects equality") {
    FieldElement a = FieldElement::tau() * FieldElement::tau();
    FieldElement b = FieldElement::tau() + FieldElement(1);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
}
