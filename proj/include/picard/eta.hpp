#pragma once

#include <picard/cyclotomic.hpp>
#include <picard/qseries.hpp>

#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace picard {

struct SL2Matrix {
    long long a, b, c, d;

    SL2Matrix(long long a_, long long b_, long long c_, long long d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a * d - b * c != 1) throw std::invalid_argument("SL2Matrix: determinant must be 1");
    }

    static SL2Matrix identity() { return {1, 0, 0, 1}; }
    static SL2Matrix T() { return {1, 1, 0, 1}; }
    static SL2Matrix S() { return {0, -1, 1, 0}; }
    static SL2Matrix delta() { return {1, 0, 2, 1}; }

    SL2Matrix operator*(const SL2Matrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    SL2Matrix inverse() const { return {d, -b, -c, a}; }
    SL2Matrix operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const SL2Matrix& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

    std::string str() const {
        return "[" + std::to_string(a) + " " + std::to_string(b) + "; " + std::to_string(c) + " " +
               std::to_string(d) + "]";
    }
};

inline Rational dedekind_sum(long long h, long long k) {
    if (k <= 0) throw std::domain_error("dedekind_sum: k must be positive");
    Rational s(0);
    long long hr = h % k;
    for (long long n = 1; n < k; ++n) {
        long long hn = (hr * n) % k;
        if (hn < 0) hn += k;
        if (hn == 0) continue;
        s += (Rational(n, k) - Rational(1, 2)) * (Rational(hn, k) - Rational(1, 2));
    }
    return s;
}

// phi with eta(g tau) = e(phi) * (c tau + d)^{1/2} * eta(tau), principal branch.
inline Rational eta_multiplier_exponent(const SL2Matrix& g) {
    if (g.c < 0) return eta_multiplier_exponent(-g) + Rational(1, 4);
    if (g.c == 0) {
        if (g.d == 1) return Rational(g.b, 24);
        return -Rational(g.b, 24) - Rational(1, 4);
    }
    return Rational(g.a + g.d, 24 * g.c) - dedekind_sum(g.d, g.c) / 2 - Rational(1, 8);
}

namespace detail {

// x*a + y*b = gcd(a,b) >= 0
inline std::pair<long long, long long> ext_gcd(long long a, long long b, long long& g) {
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    g = a;
    return {x0, y0};
}

inline long long floor_div_ll(long long n, long long d) {
    long long q = n / d, r = n % d;
    return (r != 0 && ((r < 0) != (d < 0))) ? q - 1 : q;
}

struct LevelDecomp {
    SL2Matrix gp;  // (m 0; 0 1) g = gp * (ap bp; 0 dp)
    long long ap, bp, dp;
};

inline LevelDecomp decompose_level(long long m, const SL2Matrix& g) {
    long long ma = m * g.a, mb = m * g.b, c = g.c, d = g.d;
    long long gg;
    (void)ext_gcd(ma, c, gg);
    long long r0 = -c / gg, s0 = ma / gg;
    long long unit;
    auto [x, y] = ext_gcd(s0, r0, unit);
    if (unit != 1) throw std::logic_error("decompose_level: bottom row not coprime");
    long long p = x, q = -y;
    long long ap = p * ma + q * c, bp = p * mb + q * d, dp = r0 * mb + s0 * d;
    SL2Matrix gp(s0, -q, -r0, p);
    if (dp < 0) {
        ap = -ap;
        bp = -bp;
        dp = -dp;
        gp = -gp;
    }
    long long k = floor_div_ll(bp, dp);
    bp -= k * dp;
    gp = SL2Matrix(gp.a, gp.a * k + gp.b, gp.c, gp.c * k + gp.d);
    if (gp.a * ap != ma || gp.a * bp + gp.b * dp != mb || gp.c * ap != c || gp.c * bp + gp.d * dp != d)
        throw std::logic_error("decompose_level: reconstruction failed");
    return {gp, ap, bp, dp};
}

// exact sqrt of a positive integer whose squarefree part divides 6
inline CycNum sqrt_positive(long long n) {
    if (n <= 0) throw std::domain_error("sqrt_positive: need n > 0");
    long long s = 1;
    for (long long p = 2; p * p <= n; ++p)
        while (n % (p * p) == 0) {
            n /= p * p;
            s *= p;
        }
    CycNum r{Rational(s)};
    switch (n) {
        case 1: return r;
        case 2: return r * CycNum::sqrt2();
        case 3: return r * CycNum::sqrt3();
        case 6: return r * CycNum::sqrt2() * CycNum::sqrt3();
        default: throw std::domain_error("sqrt_positive: squarefree part outside {1,2,3,6}");
    }
}

// prod_{n>=1, n*step < rel_prec} (1 - e(n*twist) q^{n*step}), truncated at rel_prec
inline QSeries euler_factor(const Rational& step, const Rational& twist, const Rational& rel_prec) {
    QSeries p = QSeries::one().truncated(rel_prec);
    for (long long n = 1; Rational(n) * step < rel_prec; ++n) {
        CycNum root = twist.is_zero() ? CycNum(1) : CycNum::root_of_unity(Rational(n) * twist);
        p *= QSeries::from_terms({{Rational(0), CycNum(1)}, {Rational(n) * step, -root}});
    }
    return p;
}

}  // namespace detail

class EtaQuotient {
  public:
    EtaQuotient() = default;
    EtaQuotient(std::initializer_list<std::pair<const long long, long long>> il)
        : EtaQuotient(std::map<long long, long long>(il)) {}
    explicit EtaQuotient(std::map<long long, long long> powers) : powers_(std::move(powers)) {
        for (auto it = powers_.begin(); it != powers_.end();) {
            if (it->first <= 0) throw std::invalid_argument("EtaQuotient: levels must be positive");
            it = it->second == 0 ? powers_.erase(it) : std::next(it);
        }
    }

    // "eta(1)^8*eta(4)^-8": levels positive integers, exponents integers (default 1)
    static EtaQuotient parse(const std::string& text) {
        std::map<long long, long long> pw;
        size_t i = 0;
        auto skip = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        auto integer = [&](bool allow_sign) {
            skip();
            size_t start = i;
            if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            size_t digits = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == digits) throw std::invalid_argument("EtaQuotient::parse: expected integer in '" + text + "'");
            return std::stoll(text.substr(start, i - start));
        };
        auto expect = [&](char ch) {
            skip();
            if (i >= text.size() || text[i] != ch)
                throw std::invalid_argument(std::string("EtaQuotient::parse: expected '") + ch + "' in '" + text + "'");
            ++i;
        };
        skip();
        if (i == text.size()) throw std::invalid_argument("EtaQuotient::parse: empty literal");
        while (true) {
            skip();
            if (text.compare(i, 3, "eta") != 0)
                throw std::invalid_argument("EtaQuotient::parse: expected 'eta' in '" + text + "'");
            i += 3;
            expect('(');
            long long level = integer(false);
            expect(')');
            long long e = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = integer(true);
            }
            if (level <= 0) throw std::invalid_argument("EtaQuotient::parse: level must be positive");
            pw[level] += e;
            skip();
            if (i == text.size()) break;
            expect('*');
        }
        return EtaQuotient(std::move(pw));
    }

    const std::map<long long, long long>& powers() const { return powers_; }
    bool empty() const { return powers_.empty(); }

    Rational weight() const {
        long long s = 0;
        for (const auto& [m, r] : powers_) s += r;
        return Rational(s, 2);
    }

    Rational order_at_inf() const {
        Rational o(0);
        for (const auto& [m, r] : powers_) o += Rational(r * m, 24);
        return o;
    }

    EtaQuotient operator*(const EtaQuotient& o) const {
        std::map<long long, long long> pw = powers_;
        for (const auto& [m, r] : o.powers_) pw[m] += r;
        return EtaQuotient(std::move(pw));
    }

    EtaQuotient pow(long long n) const {
        std::map<long long, long long> pw;
        if (n != 0)
            for (const auto& [m, r] : powers_) pw[m] = r * n;
        return EtaQuotient(std::move(pw));
    }

    QSeries expansion(const Rational& prec) const {
        Rational rel = prec - order_at_inf();
        if (rel <= 0) return QSeries::from_terms({}, prec);
        QSeries res = QSeries::one();
        for (const auto& [m, r] : powers_) {
            QSeries part = detail::euler_factor(Rational(m), Rational(0), rel).pow(r) *
                           QSeries::monomial(CycNum(1), Rational(r * m, 24));
            res = res * part;
        }
        return res.truncated(prec);
    }

    std::string str() const {
        if (powers_.empty()) return "1";
        std::string out;
        for (const auto& [m, r] : powers_) {
            if (!out.empty()) out += "*";
            out += "eta(" + std::to_string(m) + ")";
            if (r != 1) out += "^" + std::to_string(r);
        }
        return out;
    }

    bool operator==(const EtaQuotient& o) const { return powers_ == o.powers_; }

  private:
    std::map<long long, long long> powers_;
};

inline QSeries eta_expansion(const Rational& prec) {
    return EtaQuotient({{1, 1}}).expansion(prec);
}

enum class ThetaKind { theta00, theta01, theta10 };

inline QSeries theta_series(ThetaKind kind, const Rational& prec) {
    if (prec <= 0) throw std::domain_error("theta_series: prec must be positive");
    std::vector<std::pair<Rational, CycNum>> ts;
    switch (kind) {
        case ThetaKind::theta00:
        case ThetaKind::theta01: {
            ts.emplace_back(Rational(0), CycNum(1));
            bool alt = kind == ThetaKind::theta01;
            for (long long n = 1; Rational(n * n) < prec; ++n)
                ts.emplace_back(Rational(n * n), CycNum(alt && n % 2 != 0 ? -2 : 2));
            break;
        }
        case ThetaKind::theta10:
            for (long long n = 0; Rational((2 * n + 1) * (2 * n + 1), 4) < prec; ++n)
                ts.emplace_back(Rational((2 * n + 1) * (2 * n + 1), 4), CycNum(2));
            break;
    }
    return QSeries::from_terms(ts, prec);
}

enum class Generator { theta1, theta2, phi_inf, theta3, phi0, phi_half };

inline EtaQuotient generator_quotient(Generator g) {
    switch (g) {
        case Generator::theta1: return EtaQuotient({{4, 8}, {2, -4}});
        case Generator::theta2: return EtaQuotient({{2, 10}, {1, -4}, {4, -4}});
        case Generator::phi_inf: return EtaQuotient({{1, 8}, {4, -8}});
        case Generator::theta3: return EtaQuotient({{1, 8}, {2, -4}});
        case Generator::phi0: return EtaQuotient({{4, 8}, {1, -8}});
        case Generator::phi_half: return EtaQuotient({{1, 8}, {4, 16}, {2, -24}});
    }
    throw std::invalid_argument("generator_quotient: unknown generator");
}

inline std::string generator_name(Generator g) {
    switch (g) {
        case Generator::theta1: return "theta1";
        case Generator::theta2: return "theta2";
        case Generator::phi_inf: return "phi_inf";
        case Generator::theta3: return "theta3";
        case Generator::phi0: return "phi0";
        case Generator::phi_half: return "phi_half";
    }
    throw std::invalid_argument("generator_name: unknown generator");
}

inline Generator generator_from_name(const std::string& name) {
    for (Generator g : {Generator::theta1, Generator::theta2, Generator::phi_inf, Generator::theta3,
                        Generator::phi0, Generator::phi_half})
        if (generator_name(g) == name) return g;
    throw std::invalid_argument("generator_from_name: unknown generator '" + name + "'");
}

inline QSeries generator(Generator g, const Rational& prec) {
    return generator_quotient(g).expansion(prec);
}

// Expansion of f|_weight g. Per level m, (m 0; 0 1) g = g' (a' b'; 0 d');
// the eta multipliers e(phi(g')) and the shifts e(b'/(24 d')) aggregate to a
// 24th root of unity, the d'^{-r/2} factors to an exact algebraic scalar, and
// the (c tau + d)^{1/2} powers cancel against the weight.
inline QSeries slash_eta_quotient(const EtaQuotient& f, long long weight, const SL2Matrix& g,
                                  const Rational& prec) {
    (void)weight;
    if (f.empty()) throw std::invalid_argument("slash_eta_quotient: empty eta quotient");
    long long rsum = 0;
    for (const auto& [m, r] : f.powers()) rsum += r;
    if (rsum % 2 != 0)
        throw std::domain_error("slash_eta_quotient: aggregate weight is half-integral, scalar automorphy factor cannot cancel");

    struct Piece {
        long long r, ap, bp, dp;
    };
    std::vector<Piece> pieces;
    Rational mult_exp(0), total_ord(0);
    CycNum scal(1);
    for (const auto& [m, r] : f.powers()) {
        detail::LevelDecomp dec = detail::decompose_level(m, g);
        mult_exp += Rational(r) * (eta_multiplier_exponent(dec.gp) + Rational(dec.bp, 24 * dec.dp));
        total_ord += Rational(r * dec.ap, 24 * dec.dp);
        scal = scal * detail::sqrt_positive(dec.dp).pow(-r);
        pieces.push_back({r, dec.ap, dec.bp, dec.dp});
    }
    CycNum scalar = CycNum::root_of_unity(mult_exp) * scal;

    Rational rel = prec - total_ord;
    if (rel <= 0) return QSeries::from_terms({}, prec);
    QSeries res = QSeries::one();
    for (const Piece& p : pieces) {
        QSeries base = detail::euler_factor(Rational(p.ap, p.dp), Rational(p.bp, p.dp), rel) *
                       QSeries::monomial(CycNum(1), Rational(p.ap, 24 * p.dp));
        res = res * base.pow(p.r);
    }
    return (res * scalar).truncated(prec);
}

}  // namespace picard
