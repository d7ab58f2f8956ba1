#pragma once

#include <picard/rational.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace picard {

inline Integer sigma_chi(long long m) {
    if (m < 1) throw std::domain_error("sigma_chi: require m >= 1");
    Integer s = 0;
    for (long long d = 1; d <= m; ++d)
        if (m % d == 0) s += chi_minus4(d);
    return s;
}

inline Integer sigma1(long long m) {
    if (m < 1) throw std::domain_error("sigma1: require m >= 1");
    Integer s = 0;
    for (long long d = 1; d <= m; ++d)
        if (m % d == 0) s += d;
    return s;
}

// sum over d | m of (a chi(m/d) + b chi(d)) d^2 for the character mod 4
inline Integer twisted_sum(long long m, long long a, long long b) {
    if (m < 1) throw std::domain_error("twisted_sum: require m >= 1");
    Integer s = 0;
    for (long long d = 1; d <= m; ++d)
        if (m % d == 0) s += Integer(a * chi_minus4(m / d) + b * chi_minus4(d)) * d * d;
    return s;
}

namespace detail {

inline long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square_ll(long long n) {
    if (n < 0) return false;
    long long r = isqrt_ll(n);
    return r * r == n;
}

// all integer pairs (t, h) with t^2 + h^2 = m, in lexicographic order
inline std::vector<std::pair<long long, long long>> circle_solutions(long long m) {
    std::vector<std::pair<long long, long long>> out;
    long long bound = isqrt_ll(m);
    for (long long t = -bound; t <= bound; ++t) {
        long long rem = m - t * t;
        if (!is_square_ll(rem)) continue;
        long long h = isqrt_ll(rem);
        if (h == 0)
            out.emplace_back(t, 0);
        else {
            out.emplace_back(t, -h);
            out.emplace_back(t, h);
        }
    }
    return out;
}

}  // namespace detail

struct WeylVector {
    Rational rho_e3;
    Rational rho_e4;
    GaussianRational rho_v0;

    friend bool operator==(const WeylVector& a, const WeylVector& b) {
        return a.rho_e3 == b.rho_e3 && a.rho_e4 == b.rho_e4 && a.rho_v0 == b.rho_v0;
    }
};

inline WeylVector weyl_vector(long long m) {
    if (m < 1) throw std::domain_error("weyl_vector: require m >= 1");
    Integer ts = twisted_sum(m, 16, 1);
    Integer sc = sigma_chi(m);

    Integer conv = 0;
    for (long long k = 1; k < m; ++k) conv += sigma_chi(k) * sigma1(m - k);

    WeylVector w;
    w.rho_e3 = -Rational(ts) / 6 - Rational(sc) / 24;
    w.rho_e4 = Rational(sc - 6 * sigma1(m) - 24 * conv + ts) / 6;

    Rational tsum(0);
    for (auto [t, h] : detail::circle_solutions(m))
        if (t > 0 && h >= 0) tsum += t;
    w.rho_v0 = GaussianRational(-tsum);
    return w;
}

// lambda_1 e_3 - lambda_2 e_4 + (lambda_3 + i lambda_4)/2
struct KVector {
    long long lambda1 = 0, lambda2 = 0, lambda3 = 0, lambda4 = 0;

    Rational q() const {
        return Rational(-lambda1 * lambda2) + Rational(lambda3 * lambda3 + lambda4 * lambda4, 4);
    }
    friend KVector operator-(const KVector& v) {
        return {-v.lambda1, -v.lambda2, -v.lambda3, -v.lambda4};
    }
    friend bool operator==(const KVector& a, const KVector& b) {
        return a.lambda1 == b.lambda1 && a.lambda2 == b.lambda2 && a.lambda3 == b.lambda3 &&
               a.lambda4 == b.lambda4;
    }
};

// coordinates of y_1 e_3 + e_4 + (y_3 + i y_4)
struct ChamberPoint {
    Rational y1, y3, y4;
};

inline bool in_positive_cone(const KVector& v, long long m) {
    (void)m;
    if (v.lambda2 != 0) return v.lambda2 > 0;
    if (v.lambda1 != 0) return v.lambda1 > 0;
    if (v.lambda3 != 0) return v.lambda3 > 0;
    return v.lambda4 > 0;
}

inline bool in_chamber(long long m, const ChamberPoint& p) {
    if (m < 1) throw std::domain_error("in_chamber: require m >= 1");
    if (!(p.y1 + p.y3 * p.y3 + p.y4 * p.y4 < 0))
        throw std::domain_error("in_chamber: point lies outside the negative-norm domain");

    // y1 < r^2 + s^2 - m + 2 r y3 + 2 s y4 for all integers r, s; the right side is
    // separable and convex, so its minimum sits at the integers nearest (-y3, -y4)
    Integer rf = rat_floor(-p.y3), sf = rat_floor(-p.y4);
    for (int dr = 0; dr <= 1; ++dr)
        for (int ds = 0; ds <= 1; ++ds) {
            Rational r(rf + dr), s(sf + ds);
            if (!(p.y1 < r * r + s * s - m + 2 * r * p.y3 + 2 * s * p.y4)) return false;
        }

    for (auto [t, h] : detail::circle_solutions(m)) {
        if (!(1 + 2 * t * p.y3 + 2 * h * p.y4 > 0)) return false;
        if (t > 0 && !(t * p.y3 + h * p.y4 > 0)) return false;
    }

    if (detail::is_square_ll(m) && !(p.y4 > 0)) return false;
    return true;
}

struct HeegnerComponent {
    long long r1 = 0, s1 = 0, r2 = 0, s2 = 0, r3 = 0, s3 = 0;

    // the two real linear equations cutting out the component in (tau, sigma)
    std::string equation_re() const {
        return std::to_string(r1) + " + 2*" + std::to_string(r2) + "*Re(sigma) + 2*" +
               std::to_string(s2) + "*Im(sigma) + " + std::to_string(s3) + "*Re(tau) - " +
               std::to_string(r3) + "*Im(tau) = 0";
    }
    std::string equation_im() const {
        return std::to_string(s1) + " + 2*" + std::to_string(r2) + "*Im(sigma) - 2*" +
               std::to_string(s2) + "*Re(sigma) + " + std::to_string(s3) + "*Im(tau) + " +
               std::to_string(r3) + "*Re(tau) = 0";
    }

    friend bool operator==(const HeegnerComponent& a, const HeegnerComponent& b) {
        return a.r1 == b.r1 && a.s1 == b.s1 && a.r2 == b.r2 && a.s2 == b.s2 && a.r3 == b.r3 &&
               a.s3 == b.s3;
    }
};

// all (r1, s1, r2, s2, r3, s3) in the height-H box with r1 r3 + s1 s3 + r2^2 + s2^2 = m
inline std::vector<HeegnerComponent> heegner_solutions(long long m, long long H) {
    if (m < 1) throw std::domain_error("heegner_solutions: require m >= 1");
    if (H < 0) throw std::domain_error("heegner_solutions: require H >= 0");
    std::vector<HeegnerComponent> out;
    for (long long r1 = -H; r1 <= H; ++r1)
        for (long long s1 = -H; s1 <= H; ++s1)
            for (long long r2 = -H; r2 <= H; ++r2)
                for (long long s2 = -H; s2 <= H; ++s2) {
                    long long base = r2 * r2 + s2 * s2;
                    for (long long r3 = -H; r3 <= H; ++r3)
                        for (long long s3 = -H; s3 <= H; ++s3)
                            if (r1 * r3 + s1 * s3 + base == m)
                                out.push_back({r1, s1, r2, s2, r3, s3});
                }
    return out;
}

}  // namespace picard
