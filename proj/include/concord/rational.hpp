#pragma once
#include <cstdint>
#include <numeric>
#include <string>

#include "concord/errors.hpp"

namespace concord {

// Exact rational on int64. All quantities here are tiny (denominators divide
// 4k for desk-scale k), but intermediates are overflow-checked anyway.
struct Rat {
    long long num = 0;
    long long den = 1; // always > 0, gcd(num,den) == 1

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        check(den != 0, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static long long checked_mul(long long a, long long b) {
        __int128 r = (__int128)a * b;
        check(r <= INT64_MAX && r >= INT64_MIN, "rational overflow");
        return (long long)r;
    }
    static long long checked_add(long long a, long long b) {
        __int128 r = (__int128)a + b;
        check(r <= INT64_MAX && r >= INT64_MIN, "rational overflow");
        return (long long)r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    Rat operator-() const { return Rat(-num, den); }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    // Canonical rendering: always "p/q" in lowest terms, q > 0 ("0/1", "-4/5", "2/1").
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace concord
