#include <stdexcept>

#include "doctest.h"
#include "lapspec/checked_int.hpp"
#include "lapspec/rational.hpp"

TEST_SUITE_BEGIN("rational");

using lapspec::Rational;
using lapspec::int128;

TEST_CASE("rational normalization") {
    Rational r(6, 4);
    CHECK(r.num == 3);
    CHECK(r.den == 2);

    Rational neg(3, -9);
    CHECK(neg.num == -1);
    CHECK(neg.den == 3);

    Rational zero(0, 17);
    CHECK(zero.num == 0);
    CHECK(zero.den == 1);

    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // field axioms on a small lattice of values
    const Rational vals[] = {Rational(0), Rational(1), Rational(-3, 7),
                             Rational(22, 6), Rational(-5)};
    for (const auto& x : vals)
        for (const auto& y : vals) {
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x + y) - y == x);
            if (y.num != 0) CHECK((x / y) * y == x);
        }
}

TEST_CASE("rational comparison") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7) > Rational(20, 3));
}

TEST_CASE("rational to_double and to_string") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(-70, 4).to_double() == doctest::Approx(-17.5));
    CHECK(lapspec::to_string(Rational(24, 11)) == "24/11");
    CHECK(lapspec::to_string(Rational(5)) == "5");
    CHECK(lapspec::to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("checked arithmetic overflow") {
    const int128 big = lapspec::checked_pow(int128(10), 37);
    CHECK_THROWS_AS((void)lapspec::checked_mul(big, big), std::overflow_error);
    CHECK_THROWS_AS((void)lapspec::checked_pow(int128(10), 40),
                    std::overflow_error);
    CHECK(lapspec::checked_add(big, big) == 2 * big);
    CHECK(lapspec::to_string(int128(-1)) == "-1");
    CHECK(lapspec::to_string(lapspec::checked_pow(int128(2), 100)) ==
          "1267650600228229401496703205376");
}

TEST_CASE("rational overflow surfaces as an exception") {
    Rational huge(lapspec::checked_pow(int128(10), 37), 1);
    CHECK_THROWS_AS((void)(huge * huge), std::overflow_error);
    // gcd shortcut keeps representable products representable
    Rational a(lapspec::checked_pow(int128(10), 30), 3);
    Rational b(3, lapspec::checked_pow(int128(10), 28));
    CHECK(a * b == Rational(100));
}

TEST_SUITE_END();
