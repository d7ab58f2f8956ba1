#pragma once

#include <picard/basis.hpp>
#include <picard/fjseries.hpp>
#include <picard/lift.hpp>
#include <picard/weyl.hpp>

#include <json.hpp>

namespace picard {

// JSON views of every domain type.  nlohmann::json keeps object keys sorted,
// so identical inputs serialize to identical bytes.
using Json = nlohmann::json;

inline Json json_of(const Rational& r) { return r.str(); }

inline Json json_of(const GaussianRational& g) { return Json::array({g.re.str(), g.im.str()}); }

inline Json json_of(const CycNum& c) {
    Json a = Json::array();
    for (const auto& x : c.coords()) a.push_back(x.str());
    return a;
}

inline Json json_of(const QSeries& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.raw())
        terms.push_back({{"exp", Rational(e, s.ram()).str()}, {"coeff", json_of(c)}});
    Json j{{"ram", s.ram()}, {"terms", std::move(terms)}};
    j["prec"] = s.finite_prec() ? Json(s.prec().str()) : Json(nullptr);
    return j;
}

inline Json json_of(const FJSeries& s) {
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms())
        terms.push_back({{"q", m.qexp.str()},
                         {"t", m.texp.str()},
                         {"w", json_of(m.wexp)},
                         {"coeff", json_of(c)}});
    Json j{{"terms", std::move(terms)}};
    j["prec_q"] = s.prec_q_opt() ? Json(s.prec_q_opt()->str()) : Json(nullptr);
    j["prec_t"] = s.prec_t_opt() ? Json(s.prec_t_opt()->str()) : Json(nullptr);
    return j;
}

inline Json json_of(const MonicPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(json_of(c));
    return a;
}

inline Json json_of(const BasisElement& el) {
    return Json{{"k", el.k},
                {"m", el.m},
                {"cusp", cusp_name(el.cusp)},
                {"poly", json_of(el.poly)},
                {"expansion", json_of(el.expansion)}};
}

inline Json json_of(const VVForm& v) {
    Json comps;
    for (DiscClass mu : all_disc_classes()) comps[disc_name(mu)] = json_of(v.at(mu));
    return comps;
}

inline Json json_of(const WeylVector& w) {
    return Json{{"rho_e3", w.rho_e3.str()},
                {"rho_e4", w.rho_e4.str()},
                {"rho_v0", json_of(w.rho_v0)}};
}

inline Json json_of(const HeegnerComponent& h) {
    return Json{{"tuple", Json::array({h.r1, h.s1, h.r2, h.s2, h.r3, h.s3})},
                {"equation_re", h.equation_re()},
                {"equation_im", h.equation_im()}};
}

}  // namespace picard
