#pragma once

#include <numeric>
#include <string>

#include "mset/error.hpp"

namespace mset {

// Tiny exact rational over long long; enough for the finite covolume sums
// where denominators stay below a few thousand.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw ConfigError("InvalidRational", "zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num * y.num, x.den * y.den);
    }
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace mset
