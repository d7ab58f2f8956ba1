#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace picard {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a series coefficient at or beyond the tracked precision is
// requested, or when an operation cannot honour its precision contract.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// floor(a/b) for exact integers, b > 0
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline Integer rat_floor(const Rational& r) { return floor_div(num(r), den(r)); }

inline Integer rat_ceil(const Rational& r) { return -rat_floor(-r); }

// narrow an exact integer to long long, guarding overflow
inline long long to_ll(const Integer& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer out of long long range");
    return static_cast<long long>(v);
}

// r - floor(r), in [0, 1)
inline Rational mod_one(const Rational& r) { return r - Rational(rat_floor(r)); }

// Kronecker character of discriminant -4: nonzero only on odd n
inline int chi_minus4(long long n) {
    long long r = ((n % 4) + 4) % 4;
    return r == 1 ? 1 : (r == 3 ? -1 : 0);
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

// generalized binomial coefficient C(n, k) for integer n (any sign), k >= 0;
// always an integer
inline Integer binomial(const Integer& n, unsigned long k) {
    Integer acc = 1;
    for (unsigned long j = 0; j < k; ++j) {
        acc *= n - Integer(j);
        acc /= Integer(j) + 1;   // exact: product of j+1 consecutive integers
    }
    return acc;
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string rat_str(const Rational& r) { return r.str(); }

// element of Q(i) with exact rational parts
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    // lexicographic; used as a deterministic container/order key
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::string str() const {
        if (im == 0) return rat_str(re);
        std::string s;
        if (re != 0) s += rat_str(re);
        if (im > 0 && re != 0) s += "+";
        if (im == -1) s += "-";
        else if (im != 1) s += rat_str(im) + "*";
        s += "i";
        return s;
    }
};

}  // namespace picard
