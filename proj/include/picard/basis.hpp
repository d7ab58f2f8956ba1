#pragma once

#include <picard/eta.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace picard {

class MonicPoly {
  public:
    explicit MonicPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty() || !(c_.back() == CycNum(1)))
            throw std::invalid_argument("MonicPoly: leading coefficient must be exactly 1");
    }
    static MonicPoly one() { return MonicPoly({CycNum(1)}); }

    size_t degree() const { return c_.size() - 1; }
    const CycNum& coeff(size_t j) const { return c_.at(j); }
    const std::vector<CycNum>& coeffs() const { return c_; }

    QSeries eval(const QSeries& x) const {
        QSeries res = QSeries::one() * c_.back();
        for (size_t j = c_.size() - 1; j-- > 0;) res = res * x + QSeries::one() * c_[j];
        return res;
    }

    std::string str() const {
        std::string out;
        for (size_t j = c_.size(); j-- > 0;) {
            if (c_[j].is_zero() && c_.size() > 1) continue;
            if (!out.empty()) out += " + ";
            std::string cs = c_[j].str();
            if (j == 0) {
                out += cs;
            } else {
                std::string xs = j == 1 ? "x" : "x^" + std::to_string(j);
                out += cs == "1" ? xs : "(" + cs + ")*" + xs;
            }
        }
        return out;
    }

    bool operator==(const MonicPoly& o) const { return c_ == o.c_; }

  private:
    std::vector<CycNum> c_;  // ascending powers
};

enum class Cusp { inf, zero, half };

inline std::string cusp_name(Cusp c) {
    switch (c) {
        case Cusp::inf: return "inf";
        case Cusp::zero: return "0";
        case Cusp::half: return "half";
    }
    throw std::invalid_argument("cusp_name: unknown cusp");
}

struct BasisElement {
    long long k;
    long long m;
    Cusp cusp;
    MonicPoly poly;
    QSeries expansion;
};

namespace detail {

struct CuspFrame {
    EtaQuotient G;                  // prefactor of the basis family
    EtaQuotient gen;                // variable of the monic polynomials
    Rational u;                     // exponent step of the frame view
    Rational h;                     // degree-j element has view order -(h+j)*u
    std::optional<SL2Matrix> mat;   // view = slash by mat; own expansion if absent
    long long wt;                   // slash weight
};

inline CuspFrame make_frame(Cusp cusp, long long k) {
    bool odd = k % 2 != 0;
    Rational h = odd ? Rational(k + 1, 2) : Rational(k, 2);
    switch (cusp) {
        case Cusp::inf: {
            EtaQuotient G = odd ? generator_quotient(Generator::theta2) *
                                      generator_quotient(Generator::theta1).pow(-(k + 1) / 2)
                                : generator_quotient(Generator::theta1).pow(-k / 2);
            return {G, generator_quotient(Generator::phi_inf), Rational(1), h, std::nullopt, -k};
        }
        case Cusp::zero: {
            EtaQuotient G = odd ? generator_quotient(Generator::theta2) *
                                      generator_quotient(Generator::theta3).pow(-(k + 1) / 2)
                                : generator_quotient(Generator::theta3).pow(-k / 2);
            return {G, generator_quotient(Generator::phi0), Rational(1, 4), h, SL2Matrix::S(), -k};
        }
        case Cusp::half:
            return {generator_quotient(Generator::theta2).pow(-k),
                    generator_quotient(Generator::phi_half), Rational(1), Rational(k, 2),
                    SL2Matrix::delta(), -k};
    }
    throw std::invalid_argument("make_frame: unknown cusp");
}

inline QSeries frame_view(const CuspFrame& fr, const EtaQuotient& f, const Rational& prec) {
    return fr.mat ? slash_eta_quotient(f, fr.wt, *fr.mat, prec) : f.expansion(prec);
}

// One elimination pass at fixed working precision. The polynomial recursion is
// P_j = x P_{j-1} - sum over occupied slots of (slot coefficient / slot leading) P_t.
inline std::pair<MonicPoly, QSeries> eliminate(const CuspFrame& fr, long long deg,
                                               const Rational& view_prec) {
    std::vector<QSeries> E;
    std::vector<std::vector<CycNum>> P;
    std::vector<CycNum> lead;

    QSeries E0 = frame_view(fr, fr.G, view_prec);
    if (E0.ord() != -fr.h * fr.u) throw std::logic_error("basis: prefactor view has unexpected order");
    E.push_back(E0);
    P.push_back({CycNum(1)});
    lead.push_back(E0.leading_coeff());

    QSeries Vg = frame_view(fr, fr.gen, view_prec + (fr.h + Rational(deg) + 1) * fr.u);
    if (Vg.ord() != -fr.u) throw std::logic_error("basis: generator view has unexpected order");

    for (long long j = 1; j <= deg; ++j) {
        QSeries Eraw = E.back() * Vg;
        std::vector<CycNum> praw(static_cast<size_t>(j) + 1, CycNum(0));
        for (size_t t = 0; t < P.back().size(); ++t) praw[t + 1] = P.back()[t];
        for (long long t = j - 1; t >= 0; --t) {
            CycNum d = Eraw.coeff(-(fr.h + Rational(t)) * fr.u);
            if (d.is_zero()) continue;
            CycNum lam = d / lead[static_cast<size_t>(t)];
            Eraw -= E[static_cast<size_t>(t)] * lam;
            const auto& pt = P[static_cast<size_t>(t)];
            for (size_t s = 0; s < pt.size(); ++s) praw[s] -= lam * pt[s];
        }
        if (Eraw.ord() != -(fr.h + Rational(j)) * fr.u)
            throw std::logic_error("basis: eliminated view has unexpected order");
        E.push_back(Eraw);
        P.push_back(praw);
        lead.push_back(Eraw.leading_coeff());
    }

    // gap check: nothing between the principal exponent and the regular region
    const QSeries& fin = E.back();
    Rational lo = -(fr.h + Rational(deg)) * fr.u, hi = (Rational(1) - fr.h) * fr.u;
    for (const auto& [key, c] : fin.raw()) {
        Rational e = fin.exp_of_key(key);
        if (e > lo && e < hi && !c.is_zero())
            throw std::logic_error("basis: gap region not annihilated");
    }
    return {MonicPoly(P.back()), fin};
}

inline QSeries own_expansion(const CuspFrame& fr, const MonicPoly& poly, const Rational& prec) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        Rational margin = Rational(2 + 6 * attempt) + fr.h + Rational(static_cast<long long>(poly.degree()));
        QSeries gexp = fr.gen.expansion(prec + margin);
        QSeries res = fr.G.expansion(prec + margin) * poly.eval(gexp);
        if (res.prec() >= prec) return res.truncated(prec);
    }
    throw std::logic_error("basis: could not reach requested expansion precision");
}

inline BasisElement build_basis_element(Cusp cusp, long long k, long long m, const Rational& prec) {
    if (k < 1) throw std::domain_error("basis: require k >= 1");
    if (prec <= 0) throw std::domain_error("basis: require prec > 0");
    long long deg = cusp == Cusp::inf ? m - 1 : m;
    if (deg < 0)
        throw std::domain_error(cusp == Cusp::inf ? "basis: require m >= 1 at cusp inf"
                                                  : "basis: require m >= 0");
    CuspFrame fr = make_frame(cusp, k);

    Rational view_target = fr.mat ? (Rational(2) - fr.h) * fr.u : prec;
    Rational view_prec = view_target + (Rational(m) + Rational(k + 1, 2) + 2) * fr.u;
    for (int attempt = 0;; ++attempt) {
        try {
            auto [poly, view] = eliminate(fr, deg, view_prec);
            QSeries exp = fr.mat ? own_expansion(fr, poly, prec) : view.truncated(prec);
            if (!exp.is_zero() && fr.mat && exp.ord() < 0)
                throw std::logic_error("basis: expansion not holomorphic at infinity");
            return {k, m, cusp, poly, exp};
        } catch (const precision_error&) {
            if (attempt >= 2) throw;
            view_prec += Rational(4) * fr.u * Rational(attempt + 2);
        }
    }
}

}  // namespace detail

inline BasisElement canonical_basis_inf(long long k, long long m, const Rational& prec) {
    return detail::build_basis_element(Cusp::inf, k, m, prec);
}

inline BasisElement canonical_basis_cusp0(long long k, long long m, const Rational& prec) {
    return detail::build_basis_element(Cusp::zero, k, m, prec);
}

inline BasisElement canonical_basis_half(long long k, long long m, const Rational& prec) {
    return detail::build_basis_element(Cusp::half, k, m, prec);
}

inline BasisElement canonical_basis(Cusp cusp, long long k, long long m, const Rational& prec) {
    return detail::build_basis_element(cusp, k, m, prec);
}

// recompute the stored expansion to a different precision
inline QSeries basis_element_expansion(const BasisElement& el, const Rational& prec) {
    return detail::own_expansion(detail::make_frame(el.cusp, el.k), el.poly, prec);
}

// slash of G * poly(gen) by an arbitrary matrix, expanded termwise in the polynomial
inline QSeries slash_basis_element(const BasisElement& el, const SL2Matrix& g, const Rational& prec) {
    detail::CuspFrame fr = detail::make_frame(el.cusp, el.k);
    QSeries res = QSeries::from_terms({}, prec);
    for (size_t j = 0; j < el.poly.coeffs().size(); ++j) {
        const CycNum& c = el.poly.coeff(j);
        if (c.is_zero()) continue;
        res += slash_eta_quotient(fr.G * fr.gen.pow(static_cast<long long>(j)), fr.wt, g, prec) * c;
    }
    return res;
}

// value at 0 of the degree-m polynomial attached to weight -1: a twisted divisor sum
inline Integer p1m_at_zero(long long m) {
    if (m < 0) throw std::domain_error("p1m_at_zero: require m >= 0");
    long long n = m + 1;
    Integer s = 0;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) s += Integer(chi_minus4(n / d)) * d * d;
    return s;
}

enum class EisensteinVariant { quotient_twist, divisor_twist };

inline QSeries eisenstein_g(EisensteinVariant v, const Rational& prec) {
    if (prec <= 0) throw std::domain_error("eisenstein_g: prec must be positive");
    std::vector<std::pair<Rational, CycNum>> ts;
    if (v == EisensteinVariant::divisor_twist) ts.emplace_back(Rational(0), CycNum(1));
    for (long long n = 1; Rational(n) < prec; ++n) {
        Integer s = 0;
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0)
                s += Integer(chi_minus4(v == EisensteinVariant::quotient_twist ? n / d : d)) * d * d;
        if (v == EisensteinVariant::divisor_twist) s *= 4;
        ts.emplace_back(Rational(n), CycNum(Rational(s)));
    }
    return QSeries::from_terms(ts, prec);
}

}  // namespace picard
