#pragma once

#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"

namespace picard {

// Truncated Laurent/Puiseux series in q with CycNum coefficients.
//
// Exponents live on the grid (1/ram) * Z and are stored as scaled integers
// (key = exponent * ram).  `prec` is an exact rational upper bound: stored
// terms satisfy exponent < prec, and reading a coefficient at an exponent
// >= prec is an error, never a silent zero.  A series without a precision
// bound (prec = +infinity) is exact; the canonical zero series is exact.
//
// Precision propagation:
//   add: prec = min(a.prec, b.prec)
//   mul: prec = min(a.prec + ord(b), b.prec + ord(a))
//   inv: prec = a.prec - 2 ord(a)
class QSeries {
  public:
    QSeries() : ram_(1) {}

    static QSeries zero() { return QSeries(); }
    static QSeries one() { return monomial(CycNum(1), Rational(0)); }

    static QSeries monomial(const CycNum& c, const Rational& e) {
        QSeries s;
        s.ram_ = static_cast<long long>(den(e));
        if (!c.is_zero()) s.terms_[static_cast<long long>(num(e))] = c;
        s.normalize_ram();
        return s;
    }
    static QSeries monomial(const CycNum& c, const Rational& e, const Rational& prec) {
        QSeries s = monomial(c, e);
        return s.truncated(prec);
    }

    static QSeries from_terms(const std::vector<std::pair<Rational, CycNum>>& ts,
                              std::optional<Rational> prec = std::nullopt) {
        long long r = 1;
        for (const auto& [e, c] : ts) r = lcm_ll(r, to_ll(den(e)));
        QSeries s;
        s.ram_ = r;
        s.prec_ = std::move(prec);
        for (const auto& [e, c] : ts) {
            if (c.is_zero()) continue;
            Rational k = e * r;
            s.terms_[to_ll(num(k))] = c;
        }
        s.drop_out_of_prec();
        s.normalize_ram();
        return s;
    }

    long long ram() const { return ram_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool finite_prec() const { return prec_.has_value(); }
    const Rational& prec() const {
        if (!prec_) throw std::logic_error("QSeries: series is exact (infinite precision)");
        return *prec_;
    }
    std::optional<Rational> prec_opt() const { return prec_; }

    Rational ord() const {
        if (terms_.empty()) throw std::domain_error("QSeries: ord of zero series");
        return Rational(terms_.begin()->first, ram_);
    }
    CycNum leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("QSeries: leading coeff of zero series");
        return terms_.begin()->second;
    }

    const std::map<long long, CycNum>& raw() const { return terms_; }
    Rational exp_of_key(long long k) const { return Rational(k, ram_); }

    CycNum coeff(const Rational& e) const {
        if (prec_ && e >= *prec_)
            throw precision_error("QSeries: coefficient at q^(" + e.str() + ") beyond precision O(q^(" +
                                  prec_->str() + "))");
        Rational k = e * ram_;
        if (!is_integer(k)) return CycNum(0);
        auto it = terms_.find(to_ll(num(k)));
        return it == terms_.end() ? CycNum(0) : it->second;
    }

    QSeries truncated(const Rational& new_prec) const {
        QSeries s = *this;
        if (!s.prec_ || new_prec < *s.prec_) s.prec_ = new_prec;
        s.drop_out_of_prec();
        return s;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        auto [x, y] = aligned(a, b);
        QSeries r;
        r.ram_ = x.ram_;
        r.prec_ = min_prec(x.prec_, y.prec_);
        r.terms_ = std::move(x.terms_);
        for (const auto& [k, c] : y.terms_) {
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_[k] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.drop_out_of_prec();
        r.normalize_ram();
        return r;
    }

    friend QSeries operator-(const QSeries& a) {
        QSeries r = a;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        auto [x, y] = aligned(a, b);
        QSeries r;
        r.ram_ = x.ram_;
        // effective order of an empty truncated series is its precision
        std::optional<Rational> oa = x.eff_ord(), ob = y.eff_ord();
        std::optional<Rational> pa, pb;
        if (x.prec_ && ob) pa = *x.prec_ + *ob;
        if (y.prec_ && oa) pb = *y.prec_ + *oa;
        r.prec_ = min_prec(pa, pb);
        if (x.terms_.empty() || y.terms_.empty()) {
            r.normalize_ram();
            return r;
        }
        long long bound = r.scaled_bound();
        long long ymin = y.terms_.begin()->first;
        for (const auto& [ka, ca] : x.terms_) {
            if (ka + ymin >= bound) break;  // sorted: no further products fit
            for (const auto& [kb, cb] : y.terms_) {
                long long k = ka + kb;
                if (k >= bound) break;
                CycNum p = ca * cb;
                if (p.is_zero()) continue;
                auto it = r.terms_.find(k);
                if (it == r.terms_.end()) r.terms_[k] = p;
                else {
                    it->second += p;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        r.normalize_ram();
        return r;
    }

    friend QSeries operator*(const CycNum& c, const QSeries& a) {
        QSeries r = a;
        if (c.is_zero()) {
            r.terms_.clear();
            return r;
        }
        for (auto& [k, v] : r.terms_) v = c * v;
        return r;
    }
    friend QSeries operator*(const QSeries& a, const CycNum& c) { return c * a; }

    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    // multiplicative inverse; leading term must be invertible.  For an exact
    // series an inverse exists only for monomials; otherwise truncate first.
    QSeries inv() const {
        if (terms_.empty()) throw std::domain_error("QSeries: inverse of zero series");
        long long k0 = terms_.begin()->first;
        CycNum c0inv = terms_.begin()->second.inv();
        if (terms_.size() == 1 && !prec_) return monomial(c0inv, Rational(-k0, ram_));
        if (!prec_)
            throw precision_error("QSeries: inverse of exact multi-term series needs a truncation");
        // normalize to u = 1 + (higher order), solve v*u = 1 term by term
        std::map<long long, CycNum> u;  // keys relative to k0, key 0 excluded
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            u[it->first - k0] = c0inv * it->second;
        Rational relp = *prec_ - Rational(2 * k0, ram_);  // result precision
        Rational vrel = *prec_ - Rational(k0, ram_);      // v known below this
        long long vbound = scaled_from(vrel, ram_);
        std::map<long long, CycNum> v;
        v[0] = CycNum(1);
        for (long long t = 1; t < vbound; ++t) {
            CycNum s(0);
            for (const auto& [ku, cu] : u) {
                if (ku > t) break;
                auto it = v.find(t - ku);
                if (it != v.end()) s += cu * it->second;
            }
            if (!s.is_zero()) v[t] = -s;
        }
        QSeries r;
        r.ram_ = ram_;
        r.prec_ = relp;
        for (const auto& [t, c] : v) {
            CycNum w = c0inv * c;
            if (!w.is_zero()) r.terms_[t - k0] = w;
        }
        r.drop_out_of_prec();
        r.normalize_ram();
        return r;
    }

    QSeries pow(long n) const {
        if (n == 0) return one();
        if (n < 0) return inv().pow(-n);
        QSeries base = *this, acc = one();
        unsigned long m = static_cast<unsigned long>(n);
        while (m) {
            if (m & 1) acc = acc * base;
            if (m >>= 1) base = base * base;
        }
        return acc;
    }

    // substitute q -> q^m for a positive rational m (exponent rescale)
    QSeries rescale(const Rational& m) const {
        if (m <= 0) throw std::domain_error("QSeries: rescale factor must be positive");
        QSeries r;
        long long p = to_ll(num(m)), q = to_ll(den(m));
        r.ram_ = ram_ * q;
        for (const auto& [k, c] : terms_) r.terms_[k * p] = c;
        if (prec_) r.prec_ = *prec_ * m;
        r.normalize_ram();
        return r;
    }

    // (1 - c q^e)^n, e > 0, n any integer, truncated below prec
    static QSeries one_minus_monomial_pow(const Rational& e, const CycNum& c, long n, const Rational& prec) {
        if (e <= 0) throw std::domain_error("one_minus_monomial_pow: exponent must be positive");
        QSeries r;
        r.ram_ = to_ll(den(e));
        r.prec_ = prec;
        CycNum term(1);
        Rational ke(0);
        for (long k = 0;; ++k) {
            if (ke >= prec) break;
            if (!term.is_zero()) {
                Rational kr = ke * r.ram_;
                r.terms_[to_ll(num(kr))] = term;
            }
            if (n >= 0 && k == n) break;
            // C(n,k+1)(-c)^{k+1} = C(n,k)(-c)^k * (-c) * (n-k)/(k+1)
            term = term * (-c) * CycNum(Rational(n - k, k + 1));
            ke += e;
        }
        r.normalize_ram();
        return r;
    }

    std::string str() const {
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            Rational e(k, ram_);
            std::string cs = c.str();
            if (cs.find('+') != std::string::npos || (cs.find('-') != std::string::npos && cs.rfind('-') > 0))
                cs = "(" + cs + ")";
            if (e == 0) s += cs;
            else if (cs == "1") s += "q^(" + e.str() + ")";
            else s += cs + "*q^(" + e.str() + ")";
        }
        if (s.empty()) s = "0";
        if (prec_) s += " + O(q^(" + prec_->str() + "))";
        return s;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        QSeries x = a, y = b;
        x.normalize_ram();
        y.normalize_ram();
        return x.ram_ == y.ram_ && x.terms_ == y.terms_ && x.prec_ == y.prec_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // termwise equality below the smaller precision (ignores precision labels)
    static bool agree_on_overlap(const QSeries& a, const QSeries& b) {
        auto [x, y] = aligned(a, b);
        std::optional<Rational> p = min_prec(x.prec_, y.prec_);
        long long bound = p ? scaled_from(*p, x.ram_) : std::numeric_limits<long long>::max();
        auto ia = x.terms_.begin(), ib = y.terms_.begin();
        while (ia != x.terms_.end() && ia->first < bound && ib != y.terms_.end() && ib->first < bound) {
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
            ++ia, ++ib;
        }
        if (ia != x.terms_.end() && ia->first < bound) return false;
        if (ib != y.terms_.end() && ib->first < bound) return false;
        return true;
    }

  private:
    long long ram_;
    std::map<long long, CycNum> terms_;
    std::optional<Rational> prec_;

    static long long to_ll(const Integer& v) {
        if (v > std::numeric_limits<long long>::max() / 4 || v < std::numeric_limits<long long>::min() / 4)
            throw std::overflow_error("QSeries: exponent out of range");
        return static_cast<long long>(v);
    }

    static std::optional<Rational> min_prec(const std::optional<Rational>& a, const std::optional<Rational>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    std::optional<Rational> eff_ord() const {
        if (!terms_.empty()) return Rational(terms_.begin()->first, ram_);
        if (prec_) return *prec_;
        return std::nullopt;  // exact zero: order +infinity
    }

    // smallest integer B with: key allowed iff key < B  (i.e. key/ram < prec)
    static long long scaled_from(const Rational& prec, long long ram) {
        Rational t = prec * ram;
        Integer c = -floor_div(-num(t), den(t));  // ceil
        if (c > std::numeric_limits<long long>::max() / 4) return std::numeric_limits<long long>::max() / 2;
        if (c < std::numeric_limits<long long>::min() / 4) return std::numeric_limits<long long>::min() / 2;
        return static_cast<long long>(c);
    }
    long long scaled_bound() const {
        return prec_ ? scaled_from(*prec_, ram_) : std::numeric_limits<long long>::max() / 2;
    }

    void drop_out_of_prec() {
        if (!prec_) return;
        long long b = scaled_bound();
        terms_.erase(terms_.lower_bound(b), terms_.end());
    }

    void normalize_ram() {
        if (ram_ == 1) return;
        long long g = ram_;
        for (const auto& [k, c] : terms_) {
            g = gcd_ll(g, k);
            if (g == 1) return;
        }
        if (g <= 1) return;  // prec is an exact rational, unconstrained by the grid
        std::map<long long, CycNum> nt;
        for (const auto& [k, c] : terms_) nt[k / g] = c;
        terms_ = std::move(nt);
        ram_ /= g;
    }

    static std::pair<QSeries, QSeries> aligned(const QSeries& a, const QSeries& b) {
        if (a.ram_ == b.ram_) return {a, b};
        long long l = lcm_ll(a.ram_, b.ram_);
        return {a.rebased(l), b.rebased(l)};
    }
    QSeries rebased(long long new_ram) const {
        QSeries r;
        r.ram_ = new_ram;
        long long f = new_ram / ram_;
        for (const auto& [k, c] : terms_) r.terms_[k * f] = c;
        r.prec_ = prec_;
        return r;
    }
};

}  // namespace picard
