#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kronq/bases.hpp"
#include "kronq/json_io.hpp"

#include <set>

using namespace kronq;

namespace {
TorusElem X(long c1, long c2) { return TorusElem::basis({c1, c2}); }
}  // namespace

TEST_CASE("chebyshev elements") {
    const TorusElem z = xdelta();
    CHECK(cheb_elem(ChebKind::First, 0) == TorusElem{1});
    CHECK(cheb_elem(ChebKind::Second, 0) == TorusElem{1});
    CHECK(cheb_elem(ChebKind::Power, 0) == TorusElem{1});
    CHECK(cheb_elem(ChebKind::First, 1) == z);
    CHECK(cheb_elem(ChebKind::First, 2) == z * z - TorusElem{2});
    CHECK(cheb_elem(ChebKind::Second, 2) == z * z - TorusElem{1});
    CHECK(cheb_elem(ChebKind::First, 1) * cheb_elem(ChebKind::First, 1) ==
          cheb_elem(ChebKind::First, 2) + TorusElem{2});
    for (long n = 2; n <= 8; ++n)
        CHECK(cheb_elem(ChebKind::First, n) ==
              cheb_elem(ChebKind::Second, n) - cheb_elem(ChebKind::Second, n - 2));
}

TEST_CASE("label canonicalization") {
    CHECK(BasisLabel::monomial(4, 0, 2) == BasisLabel::monomial(5, 2, 0));
    CHECK(BasisLabel::monomial(4, 0, 0) == BasisLabel::unit());
    CHECK_THROWS_AS(BasisLabel::diagonal(0), std::domain_error);
    CHECK_THROWS_AS(BasisLabel::monomial(0, -1, 2), std::domain_error);
}

TEST_CASE("minimal exponents of labels") {
    CHECK(min_exp_label(BasisLabel::unit()) == ExpVec{0, 0});
    CHECK(min_exp_label(BasisLabel::diagonal(3)) == ExpVec{-3, -3});
    CHECK(min_exp_label(BasisLabel::monomial(0, 2, 3)) == ExpVec{3, -2});
    CHECK(min_exp_label(BasisLabel::monomial(2, 2, 3)) == ExpVec{-3, 2});
    CHECK(min_exp_label(BasisLabel::monomial(1, 2, 3)) == ExpVec{2, 3});
    // The computed minimum of every realized basis element matches the table.
    for (Family fam : {Family::B, Family::S, Family::D}) {
        for (long n = 1; n <= 5; ++n) {
            const TorusElem e = realize_label(BasisLabel::diagonal(n), fam, false);
            CHECK(e.min_support() == ExpVec{-n, -n});
            const auto mins = minimal_terms(e);
            REQUIRE(mins.size() == 1);
            CHECK(mins[0].first == ExpVec{-n, -n});
        }
    }
    for (long m = -4; m <= 4; ++m)
        for (long a = 1; a <= 3; ++a)
            for (long b = 0; a + b <= 3; ++b) {
                const BasisLabel l = BasisLabel::monomial(m, a, b);
                const TorusElem e = realize_label(l, Family::B, false);
                CHECK(e.min_support() == min_exp_label(l));
            }
}

TEST_CASE("label_of_min_exp inverts the table") {
    CHECK(label_of_min_exp({0, -1}) == BasisLabel::monomial(0, 1, 0));
    CHECK(label_of_min_exp({-3, -3}) == BasisLabel::diagonal(3));
    CHECK(label_of_min_exp({-1, -2}) == BasisLabel::monomial(-1, 1, 0));
    CHECK(label_of_min_exp({0, 0}) == BasisLabel::unit());
    // The minima sweep out all of Z^2; (1,-1) belongs to X_0 X_1.
    CHECK(label_of_min_exp({1, -1}) == BasisLabel::monomial(0, 1, 1));
    for (long m = -5; m <= 5; ++m)
        for (long a = 1; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                const BasisLabel l = BasisLabel::monomial(m, a, b);
                CHECK(label_of_min_exp(min_exp_label(l)) == l);
            }
}

TEST_CASE("distinct labels have distinct minima") {
    std::set<std::pair<long, long>> seen;
    long count = 0;
    auto visit = [&](const BasisLabel& l) {
        const ExpVec e = min_exp_label(l);
        CHECK(seen.emplace(e.c1, e.c2).second);
        ++count;
    };
    visit(BasisLabel::unit());
    for (long n = 1; n <= 6; ++n) visit(BasisLabel::diagonal(n));
    for (long m = -4; m <= 4; ++m)
        for (long a = 1; a <= 4; ++a)
            for (long b = 0; a + b <= 4; ++b) visit(BasisLabel::monomial(m, a, b));
    CHECK(count == seen.size());
}

TEST_CASE("realize worked examples") {
    BasisExpansion mono11;
    mono11.primed = true;
    mono11.terms[BasisLabel::monomial(1, 1, 1)] = LaurentQ{1};
    CHECK(realize(mono11) == X(1, 1));

    BasisExpansion x0;
    x0.terms[BasisLabel::monomial(0, 1, 0)] = LaurentQ{1};
    CHECK(realize(x0) == X(2, -1) + X(0, -1));

    BasisExpansion diag1;
    diag1.family = Family::B;
    diag1.terms[BasisLabel::diagonal(1)] = LaurentQ{1};
    CHECK(realize(diag1) == xdelta());
}

TEST_CASE("expansion worked examples") {
    // X_0 X_3 = q X_1 X_2 + q^{-1/2} X_delta
    const BasisExpansion e1 = expand_in_basis(xvar(0) * xvar(3), Family::B, false);
    REQUIRE(e1.terms.size() == 2);
    CHECK(e1.terms.at(BasisLabel::monomial(1, 1, 1)) == LaurentQ::v_pow(2));
    CHECK(e1.terms.at(BasisLabel::diagonal(1)) == LaurentQ::v_pow(-1));

    // X_0 X_2 = q X_1^2 + 1
    const BasisExpansion e2 = expand_in_basis(xvar(0) * xvar(2), Family::B, false);
    REQUIRE(e2.terms.size() == 2);
    CHECK(e2.terms.at(BasisLabel::monomial(1, 2, 0)) == LaurentQ::v_pow(2));
    CHECK(e2.terms.at(BasisLabel::unit()) == LaurentQ{1});

    // X_1 z_2 = q X_3 + q^{-1} X_{-1}
    const BasisExpansion e3 =
        expand_in_basis(xvar(1) * cheb_elem(ChebKind::First, 2), Family::B, false);
    REQUIRE(e3.terms.size() == 2);
    CHECK(e3.terms.at(BasisLabel::monomial(3, 1, 0)) == LaurentQ::v_pow(2));
    CHECK(e3.terms.at(BasisLabel::monomial(-1, 1, 0)) == LaurentQ::v_pow(-2));
}

TEST_CASE("family conversion is unitriangular") {
    // z_n = s_n - s_{n-2}
    for (long n = 2; n <= 8; ++n) {
        const BasisExpansion e =
            expand_in_basis(cheb_elem(ChebKind::First, n), Family::S, false);
        REQUIRE(e.terms.size() == 2);
        CHECK(e.terms.at(BasisLabel::diagonal(n)) == LaurentQ{1});
        const BasisLabel lower =
            n == 2 ? BasisLabel::unit() : BasisLabel::diagonal(n - 2);
        CHECK(e.terms.at(lower) == -LaurentQ{1});
    }
    // z^n in the other families: leading coefficient 1, lower diagonal tail
    for (Family fam : {Family::B, Family::S}) {
        for (long n = 1; n <= 6; ++n) {
            const BasisExpansion e =
                expand_in_basis(cheb_elem(ChebKind::Power, n), fam, false);
            CHECK(e.terms.at(BasisLabel::diagonal(n)) == LaurentQ{1});
            for (const auto& [l, c] : e.terms) {
                const bool diag_or_unit = l.kind != BasisLabel::Kind::Monomial;
                CHECK(diag_or_unit);
                if (l.kind == BasisLabel::Kind::Diagonal) CHECK(l.n <= n);
            }
        }
    }
}

TEST_CASE("shift expansion") {
    BasisExpansion e;
    e.terms[BasisLabel::monomial(0, 1, 2)] = LaurentQ{1};
    const BasisExpansion s = shift_expansion(e, 1);
    CHECK(s.terms.count(BasisLabel::monomial(1, 1, 2)) == 1);

    BasisExpansion d;
    d.terms[BasisLabel::diagonal(4)] = LaurentQ::v_pow(3);
    CHECK(shift_expansion(d, 5) == d);
    CHECK(shift_expansion(e, 0) == e);
}

TEST_CASE("laurent expansion in a chosen cluster") {
    BasisExpansion x3;
    x3.terms[BasisLabel::monomial(3, 1, 0)] = LaurentQ{1};
    CHECK(laurent_in_cluster(x3, 3) == X(1, 0));

    BasisExpansion x1;
    x1.terms[BasisLabel::monomial(1, 1, 0)] = LaurentQ{1};
    CHECK(laurent_in_cluster(x1, 2) == X(2, -1) + X(0, -1));

    BasisExpansion z1;
    z1.terms[BasisLabel::diagonal(1)] = LaurentQ{1};
    for (long m = -3; m <= 4; ++m) CHECK(laurent_in_cluster(z1, m) == xdelta());
}

TEST_CASE("positivity check") {
    BasisExpansion z3;
    z3.terms[BasisLabel::diagonal(3)] = LaurentQ{1};
    CHECK(is_positive(z3, -5, 6));

    BasisExpansion x0sq;
    x0sq.terms[BasisLabel::monomial(0, 2, 0)] = LaurentQ{1};
    CHECK(is_positive(x0sq, -3, 4));

    // X_1 - X_2 in its own cluster carries a negative coefficient
    BasisExpansion diff;
    diff.terms[BasisLabel::monomial(1, 1, 0)] = LaurentQ{1};
    diff.terms[BasisLabel::monomial(2, 1, 0)] = -LaurentQ{1};
    const auto witness = positivity_witness(diff, 1, 1);
    REQUIRE(witness.has_value());
    CHECK(witness->m == 1);
    CHECK(witness->coefficient == -LaurentQ{1});

    CHECK_THROWS_AS(positivity_witness(BasisExpansion{}, 0, 1), std::domain_error);
}

TEST_CASE("non-members are rejected") {
    for (Family fam : {Family::B, Family::S, Family::D})
        CHECK_THROWS_AS(expand_in_basis(X(-1, 0), fam, false), NotInAlgebra);
    // A bare basis monomial whose exponent is no label minimum.
    CHECK_THROWS_AS(expand_in_basis(X(1, -1), Family::B, false), NotInAlgebra);
}

TEST_CASE("primed monomials differ from unprimed by the twist") {
    const TorusElem plain = realize_label(BasisLabel::monomial(2, 2, 1), Family::B, false);
    const TorusElem primed = realize_label(BasisLabel::monomial(2, 2, 1), Family::B, true);
    CHECK(primed == plain.scaled(LaurentQ::v_pow(-2)));
    CHECK(primed.bar() == primed);
}

TEST_CASE("expansion json round trip") {
    BasisExpansion e;
    e.family = Family::S;
    e.primed = true;
    e.terms[BasisLabel::monomial(-2, 1, 1)] = LaurentQ::v_pow(-3) + LaurentQ{2};
    e.terms[BasisLabel::diagonal(2)] = -LaurentQ{5};
    e.terms[BasisLabel::unit()] = LaurentQ::v_pow(1);
    const auto j = expansion_to_json(e);
    CHECK(expansion_from_json(j) == e);
    CHECK(expansion_to_json(expansion_from_json(j)).dump() == j.dump());
}
