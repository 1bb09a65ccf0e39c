#pragma once
// 128-bit integers with overflow checking. Overflow throws, never wraps.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lapspec {

using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in 128-bit addition");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in 128-bit subtraction");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in 128-bit multiplication");
    return r;
}

// b^e for small nonnegative exponents.
inline int128 checked_pow(int128 b, int e) {
    if (e < 0) throw std::domain_error("checked_pow: negative exponent");
    int128 r = 1;
    while (e-- > 0) r = checked_mul(r, b);
    return r;
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // two-step negation so INT128_MIN does not overflow
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::int64_t to_int64(int128 v) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw std::overflow_error("value " + to_string(v) + " does not fit in 64 bits");
    return std::int64_t(v);
}

}  // namespace lapspec
