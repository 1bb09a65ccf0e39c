#pragma once
// Exact rationals over checked 128-bit integers.
// Invariant: den > 0 and gcd(|num|, den) == 1 after every operation.

#include "lapspec/checked_int.hpp"

namespace lapspec {

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = checked_sub(0, a);
    if (b < 0) b = checked_sub(0, b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Rational {
    int128 num = 0;
    int128 den = 1;

    Rational() = default;
    Rational(int128 n) : num(n) {}  // NOLINT: implicit by design, integers embed
    Rational(int128 n, int128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    double to_double() const {
        return double((long double)num / (long double)den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        int128 g = gcd128(a.den, b.den);
        int128 bd = b.den / g;
        int128 n = checked_add(checked_mul(a.num, bd), checked_mul(b.num, a.den / g));
        return Rational(n, checked_mul(a.den, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num = checked_sub(0, a.num);
        r.den = a.den;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        int128 g1 = gcd128(a.num, b.den);
        int128 g2 = gcd128(b.num, a.den);
        Rational r;
        r.num = checked_mul(a.num / g1, b.num / g2);
        r.den = checked_mul(a.den / g2, b.den / g1);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return a * Rational(b.den, b.num);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;  // both normalized
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

inline std::string to_string(const Rational& r) {
    if (r.den == 1) return to_string(r.num);
    return to_string(r.num) + "/" + to_string(r.den);
}

}  // namespace lapspec
