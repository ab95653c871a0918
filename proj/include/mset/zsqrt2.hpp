#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mset/error.hpp"

namespace mset {

inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

// Element of the ring Z[sqrt(2)], stored as the integer pair (a, b) with
// value a + b*sqrt(2).  The Galois conjugate a - b*sqrt(2) is what the
// star map produces for the arithmetic schemes built on this ring.
struct ZSqrt2 {
    long long a = 0;
    long long b = 0;

    constexpr ZSqrt2() = default;
    constexpr ZSqrt2(long long a_, long long b_) : a(a_), b(b_) {}

    ZSqrt2 conj() const { return {a, -b}; }

    double value() const { return double(a) + double(b) * kSqrt2; }
    double conj_value() const { return double(a) - double(b) * kSqrt2; }

    // a^2 - 2 b^2, the field norm; zero only for the zero element.
    __int128 norm() const {
        return __int128(a) * a - 2 * __int128(b) * b;
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { auto n = norm(); return n == 1 || n == -1; }

    friend ZSqrt2 operator+(const ZSqrt2& x, const ZSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
    friend ZSqrt2 operator-(const ZSqrt2& x, const ZSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
    friend ZSqrt2 operator-(const ZSqrt2& x) { return {-x.a, -x.b}; }
    friend ZSqrt2 operator*(const ZSqrt2& x, const ZSqrt2& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    ZSqrt2& operator+=(const ZSqrt2& y) { a += y.a; b += y.b; return *this; }
    ZSqrt2& operator-=(const ZSqrt2& y) { a -= y.a; b -= y.b; return *this; }

    friend bool operator==(const ZSqrt2& x, const ZSqrt2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const ZSqrt2& x, const ZSqrt2& y) { return !(x == y); }

    // Order by real value, exactly.  sqrt(2) is irrational, so distinct
    // elements never compare equal here.
    friend bool operator<(const ZSqrt2& x, const ZSqrt2& y) {
        long long da = x.a - y.a, db = x.b - y.b;
        if (db == 0) return da < 0;
        // compare da with -db*sqrt2
        if (db > 0) {
            if (da >= 0) return false;
            return __int128(da) * da > 2 * __int128(db) * db;
        }
        if (da <= 0) return true;
        return __int128(da) * da < 2 * __int128(db) * db;
    }

    // Exact multiplicative inverse for units; throws otherwise.
    ZSqrt2 inv() const {
        auto n = norm();
        if (n == 1) return conj();
        if (n == -1) return -conj();
        throw ConfigError("NotExact", "ZSqrt2::inv: element is not a unit");
    }

    std::string str() const {
        return std::to_string(a) + (b >= 0 ? "+" : "") + std::to_string(b) + "*sqrt2";
    }
};

// Exact ring division x / y, or nullopt when y does not divide x.
inline std::optional<ZSqrt2> zsqrt2_divide(const ZSqrt2& x, const ZSqrt2& y) {
    __int128 n = y.norm();
    if (n == 0) return std::nullopt;
    ZSqrt2 num = x * y.conj(); // x * conj(y) has value norm(y) * (x/y)
    __int128 na = num.a, nb = num.b;
    if (na % n != 0 || nb % n != 0) return std::nullopt;
    return ZSqrt2{(long long)(na / n), (long long)(nb / n)};
}

// Sign of (a + b*sqrt2) - q for a finite double q, computed exactly.
// q is decomposed as an integer mantissa times a power of two, and the
// comparison is settled in exact integer arithmetic (cpp_int absorbs the
// huge scaled mantissas).  Used only near decision boundaries; callers
// keep a float fast path.
inline int zsqrt2_compare_value(long long a, long long b, double q) {
    if (!std::isfinite(q))
        throw ConfigError("NotExact", "zsqrt2_compare_value: comparison bound is not finite");
    namespace mp = boost::multiprecision;
    int exp = 0;
    double mant = std::frexp(q, &exp); // q = mant * 2^exp, |mant| in [0.5,1)
    long long m = (long long)std::ldexp(mant, 53); // integer, |m| < 2^53
    long long e = exp - 53;                        // q = m * 2^e
    // Scale everything by 2^k with k = max(0, -e) so q becomes integral.
    long long k = e < 0 ? -e : 0;
    mp::cpp_int M = m;
    M <<= (unsigned)(e + k); // e + k >= 0
    mp::cpp_int U = mp::cpp_int(a) << (unsigned)k;
    U -= M;                                   // compare U against -b*2^k*sqrt2
    mp::cpp_int V = mp::cpp_int(-b) << (unsigned)k;
    if (V == 0) return U == 0 ? 0 : (U > 0 ? 1 : -1);
    if (U >= 0 && V < 0) return 1;
    if (U <= 0 && V > 0) return -1;
    if (U == 0) return V > 0 ? -1 : 1;
    mp::cpp_int lhs = U * U, rhs = 2 * V * V;
    int s = (U > 0) ? 1 : -1; // both sides share this sign
    if (lhs == rhs) return 0; // only possible when U = V = 0, handled above
    return (lhs > rhs) == (s > 0) ? 1 : -1;
}

inline int compare_value_to(const ZSqrt2& x, double q) { return zsqrt2_compare_value(x.a, x.b, q); }
inline int compare_conj_to(const ZSqrt2& x, double q) { return zsqrt2_compare_value(x.a, -x.b, q); }

// True iff the real value a + b*sqrt2 equals q exactly.  Since q is a
// dyadic rational this forces b = 0 and a = q.
inline bool zsqrt2_equals_dyadic(const ZSqrt2& x, double q) {
    if (x.b != 0) return false;
    return double(x.a) == q && std::floor(q) == q;
}

// Recover the unique (a, b) with |a + b*sqrt2 - x| <= tol and
// |a - b*sqrt2| <= conj_bound.  Distinct candidates differ in value by at
// least 1/(2*conj_bound) (their difference has |field norm| >= 1), so the
// answer is unique whenever tol < 1/(4*conj_bound).
inline std::optional<ZSqrt2> zsqrt2_from_value(double x, double conj_bound, double tol = 1e-9) {
    if (!(conj_bound > 0)) return std::nullopt;
    long long a_lo = (long long)std::floor((x - conj_bound) / 2.0) - 1;
    long long a_hi = (long long)std::ceil((x + conj_bound) / 2.0) + 1;
    for (long long a = a_lo; a <= a_hi; ++a) {
        long long b = (long long)std::llround((x - double(a)) / kSqrt2);
        ZSqrt2 cand{a, b};
        if (std::abs(cand.value() - x) <= tol && std::abs(cand.conj_value()) <= conj_bound + tol)
            return cand;
    }
    return std::nullopt;
}

} // namespace mset
