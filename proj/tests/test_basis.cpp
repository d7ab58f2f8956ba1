#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picard/basis.hpp>

using picard::BasisElement;
using picard::Cusp;
using picard::CycNum;
using picard::EisensteinVariant;
using picard::EtaQuotient;
using picard::Generator;
using picard::MonicPoly;
using picard::QSeries;
using picard::Rational;
using picard::SL2Matrix;

namespace {
// no nonzero exponents strictly between lo and hi
void check_gap(const QSeries& s, const Rational& lo, const Rational& hi) {
    for (const auto& [k, c] : s.raw()) {
        Rational e = s.exp_of_key(k);
        CHECK_FALSE((e > lo && e < hi));
    }
}
}  // namespace

TEST_CASE("monic polynomial type") {
    CHECK_THROWS_AS(MonicPoly({CycNum(2)}), std::invalid_argument);
    CHECK_THROWS_AS(MonicPoly({}), std::invalid_argument);
    MonicPoly p({CycNum(-3), CycNum(1)});
    CHECK(p.degree() == 1);
    QSeries q = QSeries::monomial(CycNum(1), Rational(1), Rational(4));
    QSeries v = p.eval(q);
    CHECK(v.coeff(Rational(0)) == CycNum(-3));
    CHECK(v.coeff(Rational(1)) == CycNum(1));
}

TEST_CASE("weight -1 index 1 element is theta2/theta1") {
    BasisElement b = picard::canonical_basis_inf(1, 1, Rational(8));
    CHECK(b.poly.degree() == 0);
    QSeries direct = (picard::generator_quotient(Generator::theta2) *
                      picard::generator_quotient(Generator::theta1).pow(-1))
                         .expansion(Rational(8));
    CHECK(QSeries::agree_on_overlap(b.expansion, direct));
    CHECK(b.expansion.ord() == -1);
    CHECK(b.expansion.prec() == 8);
}

TEST_CASE("weight -1 family has single-power principal parts") {
    for (long long m = 1; m <= 8; ++m) {
        BasisElement b = picard::canonical_basis_inf(1, m, Rational(3));
        CHECK(b.expansion.ord() == -m);
        CHECK(b.expansion.leading_coeff() == CycNum(1));
        check_gap(b.expansion, Rational(-m), Rational(0));
    }
}

TEST_CASE("triangular shape across weights") {
    for (long long k = 1; k <= 5; ++k) {
        Rational h = k % 2 != 0 ? Rational(k + 1, 2) : Rational(k, 2);
        for (long long m = 1; m <= 10; ++m) {
            BasisElement b = picard::canonical_basis_inf(k, m, Rational(2));
            CHECK(b.expansion.ord() == -h - m + 1);
            CHECK(b.expansion.leading_coeff() == CycNum(1));
            CHECK(b.poly.degree() == static_cast<size_t>(m - 1));
            check_gap(b.expansion, -h - m + 1, -h + 1);
        }
    }
}

TEST_CASE("recomputation at different precisions agrees") {
    BasisElement lo = picard::canonical_basis_inf(3, 4, Rational(4));
    BasisElement hi = picard::canonical_basis_inf(3, 4, Rational(12));
    CHECK(QSeries::agree_on_overlap(lo.expansion, hi.expansion));
    CHECK(lo.poly == hi.poly);
}

TEST_CASE("odd-weight elements vanish at the irregular cusp") {
    for (long long k : {1, 3}) {
        for (long long m = 1; m <= 3; ++m) {
            BasisElement b = picard::canonical_basis_inf(k, m, Rational(2));
            QSeries s = picard::slash_basis_element(b, SL2Matrix::delta(), Rational(2));
            if (!s.is_zero()) CHECK(s.ord() > 0);
        }
    }
}

TEST_CASE("cusp-0 family") {
    BasisElement b0 = picard::canonical_basis_cusp0(1, 0, Rational(8));
    QSeries direct = (picard::generator_quotient(Generator::theta2) *
                      picard::generator_quotient(Generator::theta3).pow(-1))
                         .expansion(Rational(8));
    CHECK(QSeries::agree_on_overlap(b0.expansion, direct));

    for (long long k = 1; k <= 3; ++k) {
        Rational h = k % 2 != 0 ? Rational(k + 1, 2) : Rational(k, 2);
        for (long long m = 0; m <= 4; ++m) {
            BasisElement b = picard::canonical_basis_cusp0(k, m, Rational(3));
            if (!b.expansion.is_zero()) CHECK(b.expansion.ord() >= 0);
            QSeries view = picard::slash_basis_element(b, SL2Matrix::S(), Rational(1));
            CHECK(view.ord() == (-h - m) / 4);
            check_gap(view, (-h - m) / 4, (Rational(1) - h) / 4);
        }
    }
    // leading view coefficient of the weight -1 seed: i/8, then /256 per index step
    QSeries v0 = picard::slash_basis_element(picard::canonical_basis_cusp0(1, 0, Rational(2)),
                                             SL2Matrix::S(), Rational(1));
    CHECK(v0.leading_coeff() == CycNum::i() * CycNum(Rational(1, 8)));
    QSeries v1 = picard::slash_basis_element(picard::canonical_basis_cusp0(1, 1, Rational(2)),
                                             SL2Matrix::S(), Rational(1));
    CHECK(v1.leading_coeff() == CycNum::i() * CycNum(Rational(1, 2048)));
}

TEST_CASE("cusp-1/2 family") {
    BasisElement b0 = picard::canonical_basis_half(1, 0, Rational(8));
    QSeries direct = picard::generator_quotient(Generator::theta2).pow(-1).expansion(Rational(8));
    CHECK(QSeries::agree_on_overlap(b0.expansion, direct));

    for (long long k = 1; k <= 3; ++k) {
        for (long long m = 0; m <= 4; ++m) {
            BasisElement b = picard::canonical_basis_half(k, m, Rational(3));
            if (!b.expansion.is_zero()) CHECK(b.expansion.ord() >= 0);
            QSeries view = picard::slash_basis_element(b, SL2Matrix::delta(), Rational(1));
            CHECK(view.ord() == Rational(-k, 2) - m);
            check_gap(view, Rational(-k, 2) - m, Rational(-k, 2) + 1);
        }
    }
}

TEST_CASE("index guards") {
    CHECK_THROWS_AS(picard::canonical_basis_inf(1, 0, Rational(4)), std::domain_error);
    CHECK_THROWS_AS(picard::canonical_basis_inf(0, 1, Rational(4)), std::domain_error);
    CHECK_THROWS_AS(picard::canonical_basis_cusp0(1, -1, Rational(4)), std::domain_error);
    CHECK_THROWS_AS(picard::canonical_basis_half(1, 0, Rational(0)), std::domain_error);
}

TEST_CASE("polynomial constant terms are twisted divisor sums") {
    CHECK(picard::p1m_at_zero(0) == 1);
    CHECK(picard::p1m_at_zero(1) == 4);
    CHECK(picard::p1m_at_zero(3) == 16);
    for (long long m = 0; m <= 10; ++m) {
        BasisElement b = picard::canonical_basis_inf(1, m + 1, Rational(2));
        CHECK(b.poly.coeff(0) == CycNum(Rational(picard::p1m_at_zero(m))));
    }
}

TEST_CASE("eisenstein expansions") {
    QSeries g = picard::eisenstein_g(EisensteinVariant::quotient_twist, Rational(8));
    CHECK(g.coeff(Rational(1)) == CycNum(1));
    CHECK(g.coeff(Rational(2)) == CycNum(4));
    CHECK(g.coeff(Rational(3)) == CycNum(8));
    CHECK(g.coeff(Rational(4)) == CycNum(16));
    CHECK(g.coeff(Rational(5)) == CycNum(26));
    QSeries g1 = picard::eisenstein_g(EisensteinVariant::divisor_twist, Rational(8));
    CHECK(g1.coeff(Rational(0)) == CycNum(1));
    CHECK(g1.coeff(Rational(1)) == CycNum(4));
    CHECK(g1.coeff(Rational(2)) == CycNum(4));
    CHECK(g1.coeff(Rational(3)) == CycNum(-32));
    CHECK(g1.coeff(Rational(5)) == CycNum(104));
}

TEST_CASE("depth combinations pair against the Eisenstein series") {
    // combination with principal part q^(-m-1) + a(-1) q^(-1): a(-1) = -g(m+1)
    Rational P(2);
    QSeries g = picard::eisenstein_g(EisensteinVariant::quotient_twist, Rational(12));
    EtaQuotient seed = picard::generator_quotient(Generator::theta2) *
                       picard::generator_quotient(Generator::theta1).pow(-1);
    EtaQuotient phi = picard::generator_quotient(Generator::phi_inf);
    for (long long m = 2; m <= 8; ++m) {
        std::vector<QSeries> f;  // f[l] = seed * phi^(l+1), order -(l+2)
        for (long long l = 0; l < m; ++l)
            f.push_back((seed * phi.pow(l + 1)).expansion(P));
        QSeries h = f[static_cast<size_t>(m - 1)];
        for (long long e = -m; e <= -2; ++e) {
            CycNum d = h.coeff(Rational(e));
            if (!d.is_zero()) h -= f[static_cast<size_t>(-e - 2)] * d;
        }
        CHECK(h.ord() == -m - 1);
        check_gap(h, Rational(-m - 1), Rational(-1));
        CHECK(h.coeff(Rational(-1)) == -g.coeff(Rational(m + 1)));
    }
}
