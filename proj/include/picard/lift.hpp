#pragma once

#include <picard/basis.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace picard {

// classes of Z[i]/2Z[i], ordered 0, 1, i, 1+i
enum class DiscClass { zero, one, im, one_plus_i };

inline constexpr std::array<DiscClass, 4> all_disc_classes() {
    return {DiscClass::zero, DiscClass::one, DiscClass::im, DiscClass::one_plus_i};
}

inline size_t disc_index(DiscClass mu) { return static_cast<size_t>(mu); }

inline Rational disc_q(DiscClass mu) {
    switch (mu) {
        case DiscClass::zero: return Rational(0);
        case DiscClass::one:
        case DiscClass::im: return Rational(1, 4);
        case DiscClass::one_plus_i: return Rational(1, 2);
    }
    throw std::invalid_argument("disc_q: unknown class");
}

inline std::string disc_name(DiscClass mu) {
    switch (mu) {
        case DiscClass::zero: return "0";
        case DiscClass::one: return "1";
        case DiscClass::im: return "i";
        case DiscClass::one_plus_i: return "1+i";
    }
    throw std::invalid_argument("disc_name: unknown class");
}

inline DiscClass disc_from_name(const std::string& s) {
    for (DiscClass mu : all_disc_classes())
        if (disc_name(mu) == s) return mu;
    throw std::invalid_argument("disc_from_name: unknown class '" + s + "'");
}

struct VVForm {
    std::array<QSeries, 4> comps;
    const QSeries& at(DiscClass mu) const { return comps[disc_index(mu)]; }
    QSeries& at(DiscClass mu) { return comps[disc_index(mu)]; }
};

// partition a series on the quarter-integer grid by exponent class mod 1:
// integral part, half-integral part, and the 3/4 class
inline std::tuple<QSeries, QSeries, QSeries> split_components(const QSeries& s) {
    if (4 % s.ram() != 0)
        throw std::invalid_argument("split_components: series must live on the quarter-integer grid");
    std::array<std::vector<std::pair<Rational, CycNum>>, 4> buckets;
    for (const auto& [k, c] : s.raw()) {
        Rational e = s.exp_of_key(k);
        Integer r4 = num(e * 4);
        long long j = static_cast<long long>(((r4 % 4) + 4) % 4);
        buckets[static_cast<size_t>(j)].emplace_back(e, c);
    }
    auto mk = [&](int j) { return QSeries::from_terms(buckets[static_cast<size_t>(j)], s.prec_opt()); };
    return {mk(0), mk(2), mk(3)};
}

// vector-valued form attached to a scalar form with poles only at infinity:
// (-2i F0 + F) phi_0 - 2i F3 phi_1 - 2i F3 phi_i + (-2i F2 - F_half) phi_{1+i}
inline VVForm gamma0_lift(const BasisElement& F, const Rational& prec) {
    if (F.k % 2 == 0) throw std::domain_error("gamma0_lift: the lift against phi_0 requires odd k");
    if (F.cusp != Cusp::inf)
        throw std::invalid_argument("gamma0_lift: input must have poles only at infinity");
    QSeries FS = slash_basis_element(F, SL2Matrix::S(), prec);
    QSeries Fhalf = slash_basis_element(F, SL2Matrix::delta(), prec);
    QSeries Fown = basis_element_expansion(F, prec);
    auto [F0, F2, F3] = split_components(FS);
    CycNum m2i = CycNum(-2) * CycNum::i();
    VVForm v;
    v.at(DiscClass::zero) = F0 * m2i + Fown;
    v.at(DiscClass::one) = F3 * m2i;
    v.at(DiscClass::im) = F3 * m2i;
    v.at(DiscClass::one_plus_i) = F2 * m2i - Fhalf;
    return v;
}

inline CycNum vv_coeff(const VVForm& v, const Rational& n, DiscClass mu) {
    return v.at(mu).coeff(n);
}

// c(0, phi_0) from the principal part alone; principal maps n >= 1 to c(-n).
// For k = 1 the closed divisor-sum form is evaluated as well and must agree.
inline CycNum constant_term_formula(long long k, const std::map<long long, CycNum>& principal,
                                    std::optional<CycNum> c0 = std::nullopt) {
    if (k < 1 || k % 2 == 0) throw std::domain_error("constant_term_formula: require odd k >= 1");
    long long h = (k + 1) / 2;
    for (const auto& [n, c] : principal) {
        if (c.is_zero()) continue;
        if (n < h)
            throw std::invalid_argument(
                "constant_term_formula: principal part reaches into the regular range");
    }

    CycNum c0_eff;
    if (c0) {
        c0_eff = *c0;
    } else if (k == 1) {
        // the constant term is itself determined by the principal part
        c0_eff = CycNum(0);
        for (const auto& [n, c] : principal) {
            Integer s = 0;
            for (long long d = 1; d <= n; ++d)
                if (n % d == 0) s += Integer(4 * chi_minus4(d)) * d * d;
            c0_eff += c * CycNum(Rational(s));
        }
    } else {
        throw std::invalid_argument("constant_term_formula: c(0) of the scalar form required for k > 1");
    }

    CycNum sum(0);
    for (const auto& [n, c] : principal) {
        if (c.is_zero()) continue;
        CycNum p0 = canonical_basis_inf(k, n - h + 1, Rational(1)).poly.coeff(0);
        sum += c * p0;
    }
    CycNum value = -(CycNum(8) * CycNum::i()).pow(static_cast<long>(k + 1)) * sum + c0_eff;

    if (k == 1) {
        CycNum direct(0);
        for (const auto& [n, c] : principal) {
            Integer s = 0;
            for (long long d = 1; d <= n; ++d)
                if (n % d == 0) s += Integer(64 * chi_minus4(n / d) + 4 * chi_minus4(d)) * d * d;
            direct += c * CycNum(Rational(s));
        }
        if (!(direct == value))
            throw std::logic_error("constant_term_formula: closed form and divisor sum disagree");
    }
    return value;
}

// action of the generators on the 4-dimensional group algebra, basis (0, 1, i, 1+i)
inline std::array<std::array<CycNum, 4>, 4> weil_rep(const SL2Matrix& g) {
    std::array<std::array<CycNum, 4>, 4> r{};
    if (g == SL2Matrix::T()) {
        for (DiscClass mu : all_disc_classes())
            r[disc_index(mu)][disc_index(mu)] = CycNum::root_of_unity(-disc_q(mu));
        return r;
    }
    if (g == SL2Matrix::S()) {
        CycNum pref = CycNum::i() * CycNum(Rational(1, 2));
        auto re = [](DiscClass d) { return d == DiscClass::one || d == DiscClass::one_plus_i ? 1 : 0; };
        auto im = [](DiscClass d) { return d == DiscClass::im || d == DiscClass::one_plus_i ? 1 : 0; };
        for (DiscClass mu : all_disc_classes())
            for (DiscClass beta : all_disc_classes()) {
                // bilinear form (mu, beta) = Q(mu + beta) - Q(mu) - Q(beta) mod 1;
                // classes add like Z[i]/2: componentwise mod 2
                long long x = (re(mu) + re(beta)) % 2, y = (im(mu) + im(beta)) % 2;
                Rational qsum = Rational(x * x + y * y, 4);
                Rational form = qsum - disc_q(mu) - disc_q(beta);
                r[disc_index(mu)][disc_index(beta)] = pref * CycNum::root_of_unity(form);
            }
        return r;
    }
    throw std::invalid_argument("weil_rep: only the generators T and S are represented");
}

}  // namespace picard
