#pragma once

#include <picard/fjseries.hpp>
#include <picard/lift.hpp>
#include <picard/weyl.hpp>

#include <optional>
#include <stdexcept>

namespace picard {

namespace detail {

// factor exponents are lift coefficients, which outgrow machine words quickly
inline Integer to_integer_exponent(const CycNum& c, const char* where) {
    if (!c.is_rational() || den(c.as_rational()) != 1)
        throw std::logic_error(std::string(where) + ": factor exponent is not a rational integer");
    return num(c.as_rational());
}

// largest integer strictly below the bound
inline long long last_int_below(const Rational& bound) {
    Integer f = rat_floor(bound);
    if (Rational(f) == bound) f -= 1;
    return to_ll(f);
}

}  // namespace detail

// leading factor: the single monomial q^(-rho_e4) t^(rho_e3) e(sigma conj(rho))
inline FJSeries factor_a1(const WeylVector& w) {
    return FJSeries::monomial(CycNum(1), FJMonomial{-w.rho_e4, w.rho_e3, w.rho_v0.conj()});
}

// 1 - e(-i sigma sqrt(m)) when m is a perfect square, else 1
inline FJSeries factor_a2(long long m) {
    if (m < 1) throw std::domain_error("factor_a2: require m >= 1");
    if (!detail::is_square_ll(m)) return FJSeries::one();
    long long s = detail::isqrt_ll(m);
    return FJSeries::one() -
           FJSeries::monomial(CycNum(1), FJMonomial{Rational(0), Rational(0),
                                                    GaussianRational(Rational(0), Rational(-s))});
}

// product over k3, k4 > 0 with k3^2 + k4^2 = m of [1 - e(sigma(k3 + i k4))][1 - e(sigma(k3 - i k4))]
inline FJSeries factor_a3(long long m) {
    if (m < 1) throw std::domain_error("factor_a3: require m >= 1");
    FJSeries r = FJSeries::one();
    for (auto [k3, k4] : detail::circle_solutions(m)) {
        if (k3 <= 0 || k4 <= 0) continue;
        for (long long sign : {1, -1}) {
            FJMonomial mono{Rational(0), Rational(0),
                            GaussianRational(Rational(k3), Rational(sign * k4))};
            r *= FJSeries::one() - FJSeries::monomial(CycNum(1), mono);
        }
    }
    return r;
}

// the q^0 layer sourced from the lift's pole and constant coefficients:
// over every integer solution n3^2 + n4^2 = m and n2 >= 1, the factor
// [1 - t^(n2) e(sigma(n3 - i n4))]^(c(-m,phi_0)), times (1 - t^(n2))^(c(0,phi_0))
inline FJSeries factor_a4(long long m, const VVForm& lift, const Rational& prec_t) {
    if (m < 1) throw std::domain_error("factor_a4: require m >= 1");
    if (!(prec_t > 0)) throw std::domain_error("factor_a4: require prec_t > 0");
    Integer pole = detail::to_integer_exponent(vv_coeff(lift, Rational(-m), DiscClass::zero),
                                               "factor_a4 pole");
    Integer c00 = detail::to_integer_exponent(vv_coeff(lift, Rational(0), DiscClass::zero),
                                              "factor_a4 constant");
    FJSeries r = FJSeries::one().truncated(std::nullopt, prec_t);
    for (long long n2 = 1; n2 <= detail::last_int_below(prec_t); ++n2) {
        for (auto [n3, n4] : detail::circle_solutions(m)) {
            FJMonomial mono{Rational(0), Rational(n2), GaussianRational(Rational(n3), Rational(-n4))};
            r *= fj_one_minus_monomial_pow(mono, pole, std::nullopt, prec_t);
        }
        r *= fj_one_minus_monomial_pow(FJMonomial{Rational(0), Rational(n2), GaussianRational()},
                                       c00, std::nullopt, prec_t);
    }
    return r;
}

// the strictly-positive-q layer: factors [1 - q^(n1) t^(n2) e(sigma(n3 - i n4)/2)]
// with exponent c(n1 n2 - (n3^2+n4^2)/4, phi_mu), mu = (n3 mod 2) + (n4 mod 2) i.
// An index contributes only if its coefficient argument is at least -m, which
// bounds n2 from below; n1 >= prec_q or n2 >= prec_t leave the box entirely,
// which bounds n1, n2 from above and hence n3^2 + n4^2 < 4(m + n1 prec_t).
inline FJSeries factor_a5(long long m, const VVForm& lift, const Rational& prec_q,
                          const Rational& prec_t) {
    if (m < 1) throw std::domain_error("factor_a5: require m >= 1");
    if (!(prec_q > 0) || !(prec_t > 0)) throw std::domain_error("factor_a5: require positive box");
    FJSeries r = FJSeries::one().truncated(prec_q, prec_t);
    for (long long n1 = 1; n1 <= detail::last_int_below(prec_q); ++n1) {
        Rational sbound = 4 * (m + n1 * prec_t);
        long long s_max = detail::last_int_below(sbound);
        long long cbound = detail::isqrt_ll(s_max);
        for (long long n3 = -cbound; n3 <= cbound; ++n3)
            for (long long n4 = -cbound; n4 <= cbound; ++n4) {
                long long s = n3 * n3 + n4 * n4;
                if (s > s_max) continue;
                DiscClass mu = n3 % 2 == 0 ? (n4 % 2 == 0 ? DiscClass::zero : DiscClass::im)
                                           : (n4 % 2 == 0 ? DiscClass::one : DiscClass::one_plus_i);
                Rational soff(s, 4);
                long long n2_lo = to_ll(rat_ceil((soff - m) / n1));
                for (long long n2 = n2_lo; n2 <= detail::last_int_below(prec_t); ++n2) {
                    CycNum c = vv_coeff(lift, n1 * n2 - soff, mu);
                    if (c.is_zero()) continue;
                    Integer e = detail::to_integer_exponent(c, "factor_a5");
                    FJMonomial mono{Rational(n1), Rational(n2),
                                    GaussianRational(Rational(n3, 2), Rational(-n4, 2))};
                    r *= fj_one_minus_monomial_pow(mono, e, prec_q, prec_t);
                }
            }
    }
    return r;
}

namespace detail {

// The four layers that carry the minimal q-exponent -rho_e4.  The remaining
// layer is 1 + O(q), so this is exactly the block of the full product at that
// q-exponent, and it keeps the whole requested t-box: assembling the fifth
// layer narrows the joint box whenever factors with negative t-exponent at
// positive q are present.
inline FJSeries base_stratum_from_lift(long long m, const VVForm& lift, const WeylVector& w,
                                       const Rational& prec_t) {
    Integer pole =
        to_integer_exponent(vv_coeff(lift, Rational(-m), DiscClass::zero), "borcherds pole");
    if (pole < 0) throw std::domain_error("borcherds_product: negative pole coefficient");
    FJSeries psi = factor_a1(w);
    psi *= factor_a2(m).pow(static_cast<long>(to_ll(pole)));
    psi *= factor_a3(m).pow(static_cast<long>(to_ll(pole)));
    psi *= factor_a4(m, lift, prec_t);
    return psi;
}

// assemble the five factors from an arbitrary lift and Weyl vector; the pole
// coefficient c(-m, phi_0) becomes the exponent on the purely-w factors
inline FJSeries borcherds_product_from_lift(long long m, const VVForm& lift, const WeylVector& w,
                                            const Rational& prec_q, const Rational& prec_t) {
    return base_stratum_from_lift(m, lift, w, prec_t) * factor_a5(m, lift, prec_q, prec_t);
}

inline Rational lift_precision_for(const Rational& prec_q, const Rational& prec_t) {
    long long n1 = std::max<long long>(last_int_below(prec_q), 1);
    long long n2 = std::max<long long>(last_int_below(prec_t), 1);
    return Rational(n1 * n2 + 1);
}

}  // namespace detail

inline FJSeries borcherds_product(long long m, const Rational& prec_q, const Rational& prec_t) {
    if (m < 1) throw std::domain_error("borcherds_product: require m >= 1");
    if (!(prec_q > 0) || !(prec_t > 0))
        throw std::domain_error("borcherds_product: require positive box");
    Rational lp = detail::lift_precision_for(prec_q, prec_t);
    BasisElement F = canonical_basis_inf(1, m, lp);
    VVForm lift = gamma0_lift(F, lp);
    return detail::borcherds_product_from_lift(m, lift, weyl_vector(m), prec_q, prec_t);
}

// terms of borcherds_product at its single lowest q-exponent -rho_e4, as a
// series in t and w over the full requested t-box
inline FJSeries product_base_stratum(long long m, const Rational& prec_t) {
    if (m < 1) throw std::domain_error("product_base_stratum: require m >= 1");
    if (!(prec_t > 0)) throw std::domain_error("product_base_stratum: require prec_t > 0");
    BasisElement F = canonical_basis_inf(1, m, Rational(1));
    VVForm lift = gamma0_lift(F, Rational(1));
    return detail::base_stratum_from_lift(m, lift, weyl_vector(m), prec_t);
}

// half the constant term of the lift, by the divisor sum; the two printed
// forms of the sum are evaluated independently and must agree
inline Integer product_weight(long long m) {
    if (m < 1) throw std::domain_error("product_weight: require m >= 1");
    Integer ts = twisted_sum(m, 64, 4);
    Integer split = 0;
    for (long long d = 1; d <= m; ++d)
        if (m % d == 0) split += Integer(32 * chi_minus4(m / d) + 2 * chi_minus4(d)) * d * d;
    if (ts != 2 * split) throw std::logic_error("product_weight: divisor-sum forms disagree");
    return split;
}

// t^(rho_e3) * prod_{k >= 1} (1 - t^k)^(c(0,phi_0)) truncated in t
inline FJSeries boundary_limit(long long m, const Rational& prec_t) {
    if (m < 1) throw std::domain_error("boundary_limit: require m >= 1");
    if (!(prec_t > 0)) throw std::domain_error("boundary_limit: require prec_t > 0");
    Integer c00 = twisted_sum(m, 64, 4);
    FJSeries r = FJSeries::one().truncated(std::nullopt, prec_t);
    for (long long k = 1; k <= detail::last_int_below(prec_t); ++k)
        r *= fj_one_minus_monomial_pow(FJMonomial{Rational(0), Rational(k), GaussianRational()},
                                       c00, std::nullopt, prec_t);
    return r * FJSeries::monomial(CycNum(1),
                                  FJMonomial{Rational(0), weyl_vector(m).rho_e3, GaussianRational()});
}

}  // namespace picard
