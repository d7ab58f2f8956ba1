#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picard/lift.hpp>

using namespace picard;

namespace {

QSeries negative_part(const QSeries& s) {
    std::vector<std::pair<Rational, CycNum>> ts;
    for (const auto& [k, c] : s.raw()) {
        Rational e = s.exp_of_key(k);
        if (e < 0) ts.emplace_back(e, c);
    }
    return QSeries::from_terms(ts, s.prec_opt());
}

}  // namespace

TEST_CASE("disc classes: order, quadratic values, names") {
    auto cls = all_disc_classes();
    CHECK(cls.size() == 4);
    CHECK(disc_q(DiscClass::zero) == Rational(0));
    CHECK(disc_q(DiscClass::one) == Rational(1, 4));
    CHECK(disc_q(DiscClass::im) == Rational(1, 4));
    CHECK(disc_q(DiscClass::one_plus_i) == Rational(1, 2));
    for (DiscClass mu : cls) CHECK(disc_from_name(disc_name(mu)) == mu);
    CHECK_THROWS_AS(disc_from_name("2"), std::invalid_argument);
}

TEST_CASE("split_components: integer-exponent series goes entirely to the first part") {
    QSeries s = QSeries::from_terms({{Rational(-1), CycNum(3)}, {Rational(2), CycNum::i()}}, Rational(5));
    auto [f0, f2, f3] = split_components(s);
    CHECK(f0 == s);
    CHECK(f2.is_zero());
    CHECK(f3.is_zero());
    CHECK(f2.prec() == Rational(5));
}

TEST_CASE("split_components: rejects series off the quarter-integer grid") {
    QSeries s = QSeries::monomial(CycNum(1), Rational(1, 8), Rational(2));
    CHECK_THROWS_AS(split_components(s), std::invalid_argument);
}

TEST_CASE("split_components: slashed weight -1 form splits into the printed pieces") {
    BasisElement F = canonical_basis_inf(1, 1, Rational(2));
    QSeries FS = slash_basis_element(F, SL2Matrix::S(), Rational(2));
    auto [f0, f2, f3] = split_components(FS);

    CycNum s32i = CycNum(32) * CycNum::i();
    CHECK(f0.coeff(Rational(0)) == s32i);
    CHECK(f0.coeff(Rational(1)) == s32i * CycNum(1356));
    CHECK(f3.coeff(Rational(3, 4)) == s32i * CycNum(352));
    CHECK(f3.coeff(Rational(7, 4)) == s32i * CycNum(40512));
    CHECK(f2.coeff(Rational(1, 2)) == s32i * CycNum(76));
    CHECK(f2.coeff(Rational(3, 2)) == s32i * CycNum(14176));

    for (const auto& [k, c] : f0.raw()) CHECK(mod_one(f0.exp_of_key(k)) == Rational(0));
    for (const auto& [k, c] : f2.raw()) CHECK(mod_one(f2.exp_of_key(k)) == Rational(1, 2));
    for (const auto& [k, c] : f3.raw()) CHECK(mod_one(f3.exp_of_key(k)) == Rational(3, 4));

    // what the split drops is exactly the exponent class 1/4
    QSeries rest = FS - f0 - f2 - f3;
    CHECK(rest.coeff(Rational(1, 4)) == s32i * CycNum(12));
    CHECK(rest.coeff(Rational(5, 4)) == s32i * CycNum(4600));
    for (const auto& [k, c] : rest.raw())
        if (!c.is_zero()) CHECK(mod_one(rest.exp_of_key(k)) == Rational(1, 4));
}

TEST_CASE("gamma0_lift: printed coefficients of the weight -1 pole-one lift") {
    BasisElement F = canonical_basis_inf(1, 1, Rational(2));
    VVForm v = gamma0_lift(F, Rational(2));

    CHECK(vv_coeff(v, Rational(-1), DiscClass::zero) == CycNum(1));
    CHECK(vv_coeff(v, Rational(0), DiscClass::zero) == CycNum(68));

    QSeries own = basis_element_expansion(F, Rational(2));
    CHECK(vv_coeff(v, Rational(1), DiscClass::zero) ==
          CycNum(2 * 32 * 1356) + own.coeff(Rational(1)));

    CHECK(vv_coeff(v, Rational(-1, 4), DiscClass::one) == CycNum(0));
    CHECK(v.at(DiscClass::one) == v.at(DiscClass::im));
}

TEST_CASE("gamma0_lift: support congruences and principal part") {
    for (long long k : {1LL, 3LL})
        for (long long m = 1; m <= 3; ++m) {
            BasisElement F = canonical_basis_inf(k, m, Rational(2));
            VVForm v = gamma0_lift(F, Rational(2));

            for (DiscClass mu : all_disc_classes()) {
                const QSeries& comp = v.at(mu);
                for (const auto& [key, c] : comp.raw()) {
                    if (c.is_zero()) continue;
                    CHECK(mod_one(comp.exp_of_key(key) + disc_q(mu)) == Rational(0));
                }
                if (mu != DiscClass::zero) CHECK((comp.is_zero() || comp.ord() > 0));
            }

            // poles live on phi_0 alone and agree with the scalar form's own poles
            QSeries own = basis_element_expansion(F, Rational(2));
            CHECK(negative_part(v.at(DiscClass::zero)) == negative_part(own));
            if (k == 1) {
                QSeries pole = QSeries::monomial(CycNum(1), Rational(-m), Rational(2));
                CHECK(negative_part(v.at(DiscClass::zero)) == pole);
            }
        }
}

TEST_CASE("gamma0_lift: components satisfy the slash identities") {
    for (long long m : {1LL, 2LL}) {
        BasisElement F = canonical_basis_inf(1, m, Rational(3));
        Rational prec(3);
        VVForm v = gamma0_lift(F, prec);
        QSeries FS = slash_basis_element(F, SL2Matrix::S(), prec);
        QSeries Fd = slash_basis_element(F, SL2Matrix::delta(), prec);
        QSeries own = basis_element_expansion(F, prec);
        CycNum m2i = CycNum(-2) * CycNum::i();

        for (long long n = -m; n < 3; ++n) {
            Rational r(n);
            CHECK(vv_coeff(v, r, DiscClass::zero) == m2i * FS.coeff(r) + own.coeff(r));
            CHECK(vv_coeff(v, r + Rational(3, 4), DiscClass::one) ==
                  m2i * FS.coeff(r + Rational(3, 4)));
            CHECK(vv_coeff(v, r + Rational(3, 4), DiscClass::im) ==
                  m2i * FS.coeff(r + Rational(3, 4)));
            CHECK(vv_coeff(v, r + Rational(1, 2), DiscClass::one_plus_i) ==
                  m2i * FS.coeff(r + Rational(1, 2)) - Fd.coeff(r + Rational(1, 2)));
        }
    }
}

TEST_CASE("gamma0_lift: coefficients of weight -1 lifts are rational integers") {
    BasisElement F = canonical_basis_inf(1, 2, Rational(2));
    VVForm v = gamma0_lift(F, Rational(2));
    for (DiscClass mu : all_disc_classes())
        for (const auto& [key, c] : v.at(mu).raw()) {
            REQUIRE(c.is_rational());
            CHECK(den(c.as_rational()) == 1);
        }
}

TEST_CASE("gamma0_lift: rejections") {
    CHECK_THROWS_AS(gamma0_lift(canonical_basis_inf(2, 1, Rational(1)), Rational(1)),
                    std::domain_error);
    CHECK_THROWS_AS(gamma0_lift(canonical_basis_cusp0(1, 0, Rational(1)), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("constant_term_formula: divisor-sum goldens at weight -1") {
    CHECK(constant_term_formula(1, {{1, CycNum(1)}}) == CycNum(68));
    CHECK(constant_term_formula(1, {{2, CycNum(1)}}) == CycNum(260));
    CHECK(constant_term_formula(1, {{3, CycNum(1)}}) == CycNum(480));
    CHECK(constant_term_formula(1, {{1, CycNum(1)}, {2, CycNum(1)}}) == CycNum(328));
    CHECK(constant_term_formula(1, {}) == CycNum(0));
    CHECK(constant_term_formula(1, {{5, CycNum(0)}}) == CycNum(0));
}

TEST_CASE("constant_term_formula: rejections and the k > 1 contract") {
    CHECK_THROWS_AS(constant_term_formula(2, {{1, CycNum(1)}}), std::domain_error);
    CHECK_THROWS_AS(constant_term_formula(0, {}), std::domain_error);
    CHECK_THROWS_AS(constant_term_formula(-3, {}), std::domain_error);
    CHECK_THROWS_AS(constant_term_formula(3, {{2, CycNum(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(constant_term_formula(3, {{1, CycNum(1)}}, CycNum(0)), std::invalid_argument);
    // -(8i)^4 P_{3,0}(0) = -4096 on a bare double pole
    CHECK(constant_term_formula(3, {{2, CycNum(1)}}, CycNum(0)) == CycNum(-4096));
}

TEST_CASE("constant term from the series matches the closed formula") {
    for (long long m = 1; m <= 8; ++m) {
        BasisElement F = canonical_basis_inf(1, m, Rational(1));
        VVForm v = gamma0_lift(F, Rational(1));
        CHECK(vv_coeff(v, Rational(0), DiscClass::zero) ==
              constant_term_formula(1, {{m, CycNum(1)}}));
    }
    for (long long m = 1; m <= 4; ++m) {
        BasisElement F = canonical_basis_inf(3, m, Rational(1));
        VVForm v = gamma0_lift(F, Rational(1));
        QSeries own = basis_element_expansion(F, Rational(1));
        CHECK(vv_coeff(v, Rational(0), DiscClass::zero) ==
              constant_term_formula(3, {{m + 1, CycNum(1)}}, own.coeff(Rational(0))));
    }
}

TEST_CASE("weil_rep: generator matrices") {
    auto T = weil_rep(SL2Matrix::T());
    CycNum mi = -CycNum::i();
    CHECK(T[0][0] == CycNum(1));
    CHECK(T[1][1] == mi);
    CHECK(T[2][2] == mi);
    CHECK(T[3][3] == CycNum(-1));
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c)
            if (r != c) CHECK(T[r][c].is_zero());

    auto S = weil_rep(SL2Matrix::S());
    CycNum half_i = CycNum::i() * CycNum(Rational(1, 2));
    int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) CHECK(S[r][c] == half_i * CycNum(sign[r][c]));

    // S squares to the central element, acting as -1
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) {
            CycNum acc(0);
            for (size_t t = 0; t < 4; ++t) acc += S[r][t] * S[t][c];
            CHECK(acc == (r == c ? CycNum(-1) : CycNum(0)));
        }

    CHECK_THROWS_AS(weil_rep(SL2Matrix::delta()), std::invalid_argument);
    CHECK_THROWS_AS(weil_rep(SL2Matrix::identity()), std::invalid_argument);
}
