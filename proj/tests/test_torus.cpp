#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kronq/cluster.hpp"
#include "kronq/json_io.hpp"
#include "kronq/torus.hpp"

#include <random>

using namespace kronq;

namespace {

TorusElem X(long c1, long c2) { return TorusElem::basis({c1, c2}); }

TorusElem random_elem(std::mt19937& rng, int max_terms = 6, long max_exp = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> exp(-max_exp, max_exp);
    std::uniform_int_distribution<long> cexp(-3, 3);
    std::uniform_int_distribution<long> val(-9, 9);
    TorusElem r;
    for (int i = 0, n = nterms(rng); i < n; ++i) {
        LaurentQ c = LaurentQ::term(cexp(rng), val(rng));
        r += TorusElem::term({exp(rng), exp(rng)}, c);
    }
    return r;
}

}  // namespace

TEST_CASE("multiplication rule") {
    // X^e X^f = v^{Lambda(e,f)} X^{e+f}, so X_1 X_2 picks up q^{1/2}.
    CHECK(X(1, 0) * X(0, 1) == TorusElem::term({1, 1}, LaurentQ::v_pow(1)));
    CHECK(X(0, 1) * X(1, 0) == TorusElem::term({1, 1}, LaurentQ::v_pow(-1)));
    CHECK(X(2, 2) * X(-1, -1) == X(1, 1));
    CHECK(X(0, 0) * X(3, -2) == X(3, -2));
}

TEST_CASE("q-commutation on a grid") {
    for (long e1 = -3; e1 <= 3; ++e1)
        for (long e2 = -3; e2 <= 3; ++e2)
            for (long f1 = -3; f1 <= 3; ++f1)
                for (long f2 = -3; f2 <= 3; ++f2) {
                    const TorusElem xe = X(e1, e2), xf = X(f1, f2);
                    const long lam = lambda_form({e1, e2}, {f1, f2});
                    CHECK(xe * xf == (xf * xe).scaled(LaurentQ::v_pow(2 * lam)));
                }
}

TEST_CASE("associativity and distributivity on random triples") {
    std::mt19937 rng(23);
    for (int i = 0; i < 120; ++i) {
        const TorusElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("bar is an involutive anti-automorphism") {
    CHECK(TorusElem::term({1, 1}, LaurentQ::v_pow(1)).bar() ==
          TorusElem::term({1, 1}, LaurentQ::v_pow(-1)));
    CHECK(xdelta().bar() == xdelta());
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        const TorusElem a = random_elem(rng), b = random_elem(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == b.bar() * a.bar());
    }
}

TEST_CASE("right division examples") {
    // c * X^(0,1) = q X^(2,0) + 1
    const TorusElem a = TorusElem::term({2, 0}, LaurentQ::v_pow(2)) + TorusElem{1};
    CHECK(right_divide(a, X(0, 1)) == X(2, -1) + X(0, -1));

    const TorusElem b = X(1, 0) + TorusElem::term({0, 1}, LaurentQ::v_pow(3));
    CHECK(right_divide(b, b) == TorusElem{1});
}

TEST_CASE("division failure is detected") {
    // No exact quotient exists: the graded-lex window for candidate
    // exponents, [min(a)-min(b), max(a)-max(b)], is already empty.
    const TorusElem a = X(1, 0) + X(0, 1);
    const TorusElem b = X(1, 0) + TorusElem{1};
    const ExpVec lo = a.min_support() - b.min_support();
    const ExpVec hi = a.max_support() - b.max_support();
    CHECK(hi < lo);
    CHECK_THROWS_AS(right_divide(a, b), NotDivisible);
    CHECK_THROWS_AS(left_divide(a, b), NotDivisible);
    CHECK_THROWS_AS(right_divide(a, TorusElem{}), std::domain_error);
}

TEST_CASE("division round trips") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 120) {
        const TorusElem c = random_elem(rng, 4, 4);
        const TorusElem b = random_elem(rng, 4, 4);
        if (b.is_zero() || c.is_zero()) continue;
        ++done;
        CHECK(right_divide(c * b, b) == c);
        CHECK(left_divide(b * c, b) == c);
    }
}

TEST_CASE("minimal terms") {
    const auto mins_xm1 = minimal_terms(xvar(-1));
    REQUIRE(mins_xm1.size() == 1);
    CHECK(mins_xm1[0].first == ExpVec{-1, -2});
    CHECK(mins_xm1[0].second == LaurentQ{1});

    const auto both = minimal_terms(X(1, 0) + X(0, 1));
    CHECK(both.size() == 2);

    const auto delta = minimal_terms(xdelta());
    REQUIRE(delta.size() == 1);
    CHECK(delta[0].first == ExpVec{-1, -1});
    CHECK(delta[0].second == LaurentQ{1});

    CHECK_THROWS_AS(minimal_terms(TorusElem{}), std::domain_error);
}

TEST_CASE("json round trip") {
    std::mt19937 rng(37);
    for (int i = 0; i < 50; ++i) {
        const TorusElem a = random_elem(rng);
        const auto j = torus_to_json(a);
        CHECK(torus_from_json(j) == a);
        CHECK(torus_to_json(torus_from_json(j)).dump() == j.dump());
    }
}
