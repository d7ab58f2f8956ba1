#pragma once

#include <array>
#include <complex>
#include <vector>

#include "rational.hpp"

namespace picard {

// Element of Q(zeta_24) in the power basis 1, z, z^2, ..., z^7 where
// z = e^{2 pi i / 24}, reduced modulo Phi_24(x) = x^8 - x^4 + 1,
// i.e. z^8 = z^4 - 1.  Coordinates are exact rationals.
class CycNum {
  public:
    CycNum() { c_.fill(Rational(0)); }
    /*implicit*/ CycNum(const Rational& r) {
        c_.fill(Rational(0));
        c_[0] = r;
    }
    /*implicit*/ CycNum(long long n) : CycNum(Rational(n)) {}
    /*implicit*/ CycNum(long n) : CycNum(Rational(n)) {}
    /*implicit*/ CycNum(int n) : CycNum(Rational(n)) {}

    static CycNum from_coords(std::array<Rational, 8> c) {
        CycNum x;
        x.c_ = std::move(c);
        return x;
    }

    const std::array<Rational, 8>& coords() const { return c_; }

    // z^k for any integer k (k mod 24)
    static const CycNum& zeta_pow(long k) {
        static const std::array<CycNum, 24> table = make_zeta_table();
        long r = k % 24;
        if (r < 0) r += 24;
        return table[static_cast<size_t>(r)];
    }

    // e(r) = exp(2 pi i r); requires 24 r integral
    static CycNum root_of_unity(const Rational& r) {
        Rational t = r * 24;
        if (!is_integer(t)) throw std::domain_error("root_of_unity: 24r not an integer: " + r.str());
        Integer k = num(t) % 24;
        return zeta_pow(static_cast<long>(k));
    }

    static CycNum i() { return zeta_pow(6); }
    // sqrt(2) = z_8 + z_8^{-1} = z^3 + z^21
    static CycNum sqrt2() { return zeta_pow(3) + zeta_pow(21); }
    // sqrt(3) = z_12 + z_12^{-1} = z^2 + z^22
    static CycNum sqrt3() { return zeta_pow(2) + zeta_pow(22); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t j = 1; j < 8; ++j)
            if (c_[j] != 0) return false;
        return true;
    }
    // lies in Q(i) = Q + Q*z^6
    bool is_gaussian() const {
        for (size_t j = 1; j < 8; ++j)
            if (j != 6 && c_[j] != 0) return false;
        return true;
    }
    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("CycNum: not rational: " + str());
        return c_[0];
    }
    GaussianRational as_gaussian() const {
        if (!is_gaussian()) throw std::domain_error("CycNum: not in Q(i): " + str());
        return {c_[0], c_[6]};
    }
    static CycNum from_gaussian(const GaussianRational& g) {
        CycNum x(g.re);
        x.c_[6] = g.im;
        return x;
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        CycNum r;
        for (size_t j = 0; j < 8; ++j) r.c_[j] = a.c_[j] + b.c_[j];
        return r;
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        CycNum r;
        for (size_t j = 0; j < 8; ++j) r.c_[j] = a.c_[j] - b.c_[j];
        return r;
    }
    friend CycNum operator-(const CycNum& a) {
        CycNum r;
        for (size_t j = 0; j < 8; ++j) r.c_[j] = -a.c_[j];
        return r;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        std::array<Rational, 15> acc;
        acc.fill(Rational(0));
        for (size_t ia = 0; ia < 8; ++ia) {
            if (a.c_[ia] == 0) continue;
            for (size_t ib = 0; ib < 8; ++ib) {
                if (b.c_[ib] == 0) continue;
                acc[ia + ib] += a.c_[ia] * b.c_[ib];
            }
        }
        // x^t = x^{t-4} - x^{t-8} for t >= 8
        for (size_t t = 14; t >= 8; --t) {
            if (acc[t] == 0) continue;
            acc[t - 4] += acc[t];
            acc[t - 8] -= acc[t];
            acc[t] = 0;
        }
        CycNum r;
        for (size_t j = 0; j < 8; ++j) r.c_[j] = acc[j];
        return r;
    }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // complex conjugation: z -> z^{-1}
    CycNum conj() const {
        CycNum r(c_[0]);
        for (long j = 1; j < 8; ++j) {
            if (c_[static_cast<size_t>(j)] == 0) continue;
            CycNum t = zeta_pow(24 - j);
            for (size_t s = 0; s < 8; ++s) r.c_[s] += c_[static_cast<size_t>(j)] * t.c_[s];
        }
        return r;
    }

    // multiplicative inverse via extended Euclid in Q[x] mod Phi_24
    CycNum inv() const {
        if (is_zero()) throw std::domain_error("CycNum: division by zero");
        if (is_rational()) {
            CycNum r;
            r.c_[0] = Rational(1) / c_[0];
            return r;
        }
        // r0 = Phi_24, r1 = this; maintain t-coefficients with r = t * this mod Phi
        std::vector<Rational> r0 = {1, 0, 0, 0, -1, 0, 0, 0, 1};  // x^8 - x^4 + 1, low->high
        std::vector<Rational> r1(c_.begin(), c_.end());
        trim(r1);
        std::vector<Rational> t0 = {}, t1 = {1};
        while (r1.size() > 1) {
            auto [q, rem] = poly_divmod(r0, r1);
            std::vector<Rational> t2 = poly_sub(t0, poly_mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r1.empty()) throw std::domain_error("CycNum: inverse failed (zero remainder)");
        // r1 is a nonzero constant: t1 * this == r1[0] mod Phi
        CycNum out;
        for (size_t j = 0; j < t1.size() && j < 8; ++j) out.c_[j] = t1[j] / r1[0];
        return out;
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

    CycNum pow(long n) const {
        if (n < 0) return inv().pow(-n);
        CycNum base = *this, acc(Rational(1));
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (is_rational()) return rat_str(c_[0]);
        if (is_gaussian()) return as_gaussian().str();
        std::string s;
        for (size_t j = 0; j < 8; ++j) {
            if (c_[j] == 0) continue;
            if (!s.empty() && c_[j] > 0) s += "+";
            if (j == 0) {
                s += rat_str(c_[j]);
                continue;
            }
            if (c_[j] == -1) s += "-";
            else if (c_[j] != 1) s += rat_str(c_[j]) + "*";
            s += "z";
            if (j > 1) s += "^" + std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }

    // debug/display only; never feeds exact computation
    std::complex<double> approx() const {
        std::complex<double> acc = 0;
        for (size_t j = 0; j < 8; ++j) {
            if (c_[j] == 0) continue;
            double v = static_cast<double>(num(c_[j])) / static_cast<double>(den(c_[j]));
            double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(j) / 24.0;
            acc += v * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

  private:
    std::array<Rational, 8> c_;

    static std::array<CycNum, 24> make_zeta_table() {
        std::array<CycNum, 24> t;
        t[0] = CycNum(Rational(1));
        CycNum z;
        z.c_[1] = 1;
        for (size_t k = 1; k < 24; ++k) t[k] = t[k - 1] * z;
        return t;
    }

    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }
    static std::vector<Rational> poly_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r = a;
        if (r.size() < b.size()) r.resize(b.size(), Rational(0));
        for (size_t j = 0; j < b.size(); ++j) r[j] -= b[j];
        trim(r);
        return r;
    }
    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                               const std::vector<Rational>& b) {
        std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
        while (a.size() >= b.size()) {
            Rational f = a.back() / b.back();
            size_t shift = a.size() - b.size();
            q[shift] += f;
            for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
            trim(a);  // top coefficient vanished exactly
        }
        trim(q);
        return {q, a};
    }
};

}  // namespace picard
