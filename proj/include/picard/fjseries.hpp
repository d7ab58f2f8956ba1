#pragma once

#include <picard/cyclotomic.hpp>

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace picard {

// exponent triple of a term q^(qexp) t^(texp) e(sigma * wexp)
struct FJMonomial {
    Rational qexp, texp;
    GaussianRational wexp;

    friend bool operator==(const FJMonomial& a, const FJMonomial& b) {
        return a.qexp == b.qexp && a.texp == b.texp && a.wexp == b.wexp;
    }
    friend bool operator!=(const FJMonomial& a, const FJMonomial& b) { return !(a == b); }
    friend bool operator<(const FJMonomial& a, const FJMonomial& b) {
        if (a.qexp != b.qexp) return a.qexp < b.qexp;
        if (a.texp != b.texp) return a.texp < b.texp;
        return a.wexp < b.wexp;
    }
    friend FJMonomial operator+(const FJMonomial& a, const FJMonomial& b) {
        return {a.qexp + b.qexp, a.texp + b.texp, a.wexp + b.wexp};
    }
};

// Trivariate formal series: finitely many FJMonomial terms with CycNum
// coefficients, truncated independently in the q and t directions.  A term is
// representable iff qexp < prec_q and texp < prec_t (missing bound = exact in
// that direction); the w direction is never truncated.  Precision propagates
// per axis like QSeries: prec(ab) = min(a.prec + ord(b), b.prec + ord(a)).
class FJSeries {
  public:
    FJSeries() = default;

    static FJSeries zero() { return FJSeries(); }
    static FJSeries one() { return constant(CycNum(1)); }
    static FJSeries constant(const CycNum& c) { return monomial(c, FJMonomial{}); }

    static FJSeries monomial(const CycNum& c, const FJMonomial& m,
                             std::optional<Rational> prec_q = std::nullopt,
                             std::optional<Rational> prec_t = std::nullopt) {
        FJSeries s;
        s.prec_q_ = std::move(prec_q);
        s.prec_t_ = std::move(prec_t);
        if (!c.is_zero() && s.in_box(m)) s.terms_[m] = c;
        return s;
    }

    static FJSeries from_terms(const std::vector<std::pair<FJMonomial, CycNum>>& ts,
                               std::optional<Rational> prec_q = std::nullopt,
                               std::optional<Rational> prec_t = std::nullopt) {
        FJSeries s;
        s.prec_q_ = std::move(prec_q);
        s.prec_t_ = std::move(prec_t);
        for (const auto& [m, c] : ts) {
            if (c.is_zero() || !s.in_box(m)) continue;
            auto it = s.terms_.find(m);
            if (it == s.terms_.end()) s.terms_[m] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) s.terms_.erase(it);
            }
        }
        return s;
    }

    const std::map<FJMonomial, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::optional<Rational>& prec_q_opt() const { return prec_q_; }
    const std::optional<Rational>& prec_t_opt() const { return prec_t_; }

    CycNum coeff(const FJMonomial& m) const {
        if ((prec_q_ && m.qexp >= *prec_q_) || (prec_t_ && m.texp >= *prec_t_))
            throw precision_error("FJSeries: coefficient beyond the truncation box");
        auto it = terms_.find(m);
        return it == terms_.end() ? CycNum(0) : it->second;
    }

    FJSeries truncated(const std::optional<Rational>& pq, const std::optional<Rational>& pt) const {
        FJSeries s = *this;
        s.prec_q_ = min_prec(s.prec_q_, pq);
        s.prec_t_ = min_prec(s.prec_t_, pt);
        s.drop_out_of_box();
        return s;
    }

    // terms with the given exact q-exponent, as a series in t and w
    FJSeries q_slice(const Rational& q) const {
        if (prec_q_ && q >= *prec_q_)
            throw precision_error("FJSeries: q-slice beyond the truncation box");
        FJSeries s;
        s.prec_t_ = prec_t_;
        for (const auto& [m, c] : terms_)
            if (m.qexp == q) s.terms_[m] = c;
        return s;
    }

    // terms with the given q-exponent and w-exponent, as a pure t-series
    FJSeries block(const Rational& q, const GaussianRational& w) const {
        FJSeries s = q_slice(q);
        for (auto it = s.terms_.begin(); it != s.terms_.end();)
            it = it->first.wexp == w ? std::next(it) : s.terms_.erase(it);
        return s;
    }

    friend FJSeries operator+(const FJSeries& a, const FJSeries& b) {
        FJSeries r;
        r.prec_q_ = min_prec(a.prec_q_, b.prec_q_);
        r.prec_t_ = min_prec(a.prec_t_, b.prec_t_);
        for (const auto& [m, c] : a.terms_)
            if (r.in_box(m)) r.terms_[m] = c;
        for (const auto& [m, c] : b.terms_) {
            if (!r.in_box(m)) continue;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_[m] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend FJSeries operator-(const FJSeries& a) {
        FJSeries r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend FJSeries operator-(const FJSeries& a, const FJSeries& b) { return a + (-b); }

    friend FJSeries operator*(const FJSeries& a, const FJSeries& b) {
        FJSeries r;
        std::optional<Rational> oaq = a.eff_ord_q(), obq = b.eff_ord_q();
        std::optional<Rational> oat = a.eff_ord_t(), obt = b.eff_ord_t();
        std::optional<Rational> pa, pb;
        if (a.prec_q_ && obq) pa = *a.prec_q_ + *obq;
        if (b.prec_q_ && oaq) pb = *b.prec_q_ + *oaq;
        r.prec_q_ = min_prec(pa, pb);
        pa.reset();
        pb.reset();
        if (a.prec_t_ && obt) pa = *a.prec_t_ + *obt;
        if (b.prec_t_ && oat) pb = *b.prec_t_ + *oat;
        r.prec_t_ = min_prec(pa, pb);

        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                // both maps are sorted by qexp first
                if (r.prec_q_ && ma.qexp + mb.qexp >= *r.prec_q_) break;
                FJMonomial m = ma + mb;
                if (!r.in_box(m)) continue;
                CycNum p = ca * cb;
                if (p.is_zero()) continue;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) r.terms_[m] = p;
                else {
                    it->second += p;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }

    friend FJSeries operator*(const CycNum& c, const FJSeries& a) {
        FJSeries r = a;
        if (c.is_zero()) {
            r.terms_.clear();
            return r;
        }
        for (auto& [m, v] : r.terms_) v = c * v;
        return r;
    }
    friend FJSeries operator*(const FJSeries& a, const CycNum& c) { return c * a; }

    FJSeries& operator+=(const FJSeries& o) { return *this = *this + o; }
    FJSeries& operator-=(const FJSeries& o) { return *this = *this - o; }
    FJSeries& operator*=(const FJSeries& o) { return *this = *this * o; }

    FJSeries pow(long n) const {
        if (n < 0) throw std::domain_error("FJSeries: negative power");
        FJSeries base = *this, acc = one().truncated(prec_q_, prec_t_);
        unsigned long m = static_cast<unsigned long>(n);
        while (m) {
            if (m & 1) acc = acc * base;
            if (m >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const FJSeries& a, const FJSeries& b) {
        return a.terms_ == b.terms_ && a.prec_q_ == b.prec_q_ && a.prec_t_ == b.prec_t_;
    }
    friend bool operator!=(const FJSeries& a, const FJSeries& b) { return !(a == b); }

    // termwise equality on the intersection of the truncation boxes
    static bool agree_on_overlap(const FJSeries& a, const FJSeries& b) {
        std::optional<Rational> pq = min_prec(a.prec_q_, b.prec_q_);
        std::optional<Rational> pt = min_prec(a.prec_t_, b.prec_t_);
        auto within = [&](const FJMonomial& m) {
            return (!pq || m.qexp < *pq) && (!pt || m.texp < *pt);
        };
        for (const auto& [m, c] : a.terms_)
            if (within(m) && !(b.coeff(m) == c)) return false;
        for (const auto& [m, c] : b.terms_)
            if (within(m) && !(a.coeff(m) == c)) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.str();
            if (cs.find('+') != std::string::npos ||
                (cs.find('-') != std::string::npos && cs.rfind('-') > 0))
                cs = "(" + cs + ")";
            s += cs;
            if (m.qexp != 0) s += "*q^(" + m.qexp.str() + ")";
            if (m.texp != 0) s += "*t^(" + m.texp.str() + ")";
            if (!m.wexp.is_zero()) s += "*w^(" + m.wexp.re.str() + "," + m.wexp.im.str() + ")";
        }
        if (s.empty()) s = "0";
        if (prec_q_) s += " + O(q^(" + prec_q_->str() + "))";
        if (prec_t_) s += " + O(t^(" + prec_t_->str() + "))";
        return s;
    }

  private:
    std::map<FJMonomial, CycNum> terms_;
    std::optional<Rational> prec_q_, prec_t_;

    bool in_box(const FJMonomial& m) const {
        return (!prec_q_ || m.qexp < *prec_q_) && (!prec_t_ || m.texp < *prec_t_);
    }
    void drop_out_of_box() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = in_box(it->first) ? std::next(it) : terms_.erase(it);
    }
    static std::optional<Rational> min_prec(const std::optional<Rational>& a,
                                            const std::optional<Rational>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    // visible order per axis; empty series fall back to their own bound
    std::optional<Rational> eff_ord_q() const {
        if (terms_.empty()) return prec_q_;
        return terms_.begin()->first.qexp;
    }
    std::optional<Rational> eff_ord_t() const {
        if (terms_.empty()) return prec_t_;
        std::optional<Rational> o;
        for (const auto& [m, c] : terms_)
            if (!o || m.texp < *o) o = m.texp;
        return o;
    }
};

inline FJSeries fj_mul(const FJSeries& a, const FJSeries& b) { return a * b; }

// (1 - q^(m.qexp) t^(m.texp) e(sigma m.wexp))^n truncated to the given box;
// for n < 0 the expansion is infinite and some positive exponent must meet a
// finite bound so the tail provably leaves the box
inline FJSeries fj_one_minus_monomial_pow(const FJMonomial& m, const Integer& n,
                                          std::optional<Rational> prec_q = std::nullopt,
                                          std::optional<Rational> prec_t = std::nullopt) {
    bool q_stops = m.qexp > 0 && prec_q.has_value();
    bool t_stops = m.texp > 0 && prec_t.has_value();
    if (n < 0 && !q_stops && !t_stops)
        throw std::domain_error("fj_one_minus_monomial_pow: infinite expansion cannot be truncated");

    std::vector<std::pair<FJMonomial, CycNum>> ts;
    CycNum coeff(1);
    FJMonomial acc{};
    for (long long k = 0;; ++k) {
        if (q_stops && acc.qexp >= *prec_q) break;
        if (t_stops && !q_stops && acc.texp >= *prec_t) break;
        ts.emplace_back(acc, coeff);
        if (n >= 0 && k == n) break;
        coeff = coeff * CycNum(-1) * CycNum(Rational(Integer(n - k), Integer(k + 1)));
        acc = acc + m;
    }
    return FJSeries::from_terms(ts, std::move(prec_q), std::move(prec_t));
}

}  // namespace picard
