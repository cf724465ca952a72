#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kronq/bases.hpp"
#include "kronq/quiver.hpp"

using namespace kronq;

TEST_CASE("module constructions") {
    const KroneckerRep m2 = kronecker_module(ModuleKind::Preprojective, 2, RegularPoint::at(0), 2);
    CHECK(m2.v1 == 1);
    CHECK(m2.v2 == 2);
    CHECK(m2.a == std::vector<int>{1, 0});  // e1 -> (1,0)
    CHECK(m2.b == std::vector<int>{0, 1});  // e1 -> (0,1)

    const KroneckerRep r1 = kronecker_module(ModuleKind::Regular, 1, RegularPoint::at(1), 3);
    CHECK(r1.v1 == 1);
    CHECK(r1.v2 == 1);
    CHECK(r1.a == std::vector<int>{1});
    CHECK(r1.b == std::vector<int>{1});

    const KroneckerRep n2 = kronecker_module(ModuleKind::Preinjective, 2, RegularPoint::at(0), 2);
    CHECK(n2.v1 == 2);
    CHECK(n2.v2 == 1);

    CHECK_THROWS_AS(kronecker_module(ModuleKind::Regular, 1, RegularPoint::at(0), 4),
                    std::domain_error);
    CHECK_THROWS_AS(kronecker_module(ModuleKind::Regular, 0, RegularPoint::at(0), 2),
                    std::domain_error);
}

TEST_CASE("subrepresentation counts by brute force") {
    const KroneckerRep r2 = kronecker_module(ModuleKind::Regular, 2, RegularPoint::at(1), 2);
    CHECK(subrep_count(r2, 0, 1) == 3);
    CHECK(subrep_count(r2, 1, 1) == 1);
    CHECK(subrep_count(r2, 2, 2) == 1);
    CHECK(subrep_count(r2, 0, 0) == 1);
    CHECK(subrep_count(r2, 1, 0) == 0);
    CHECK(subrep_count(r2, 5, 1) == 0);
}

TEST_CASE("interpolated counting polynomials") {
    CHECK(gr_poly(ModuleKind::Regular, 2, {0, 1}, {2, 3, 5}) ==
          CountPoly::w_pow(1) + CountPoly{1});
    CHECK(gr_poly(ModuleKind::Preprojective, 2, {0, 1}, {2, 3, 5}) ==
          CountPoly::w_pow(1) + CountPoly{1});
    CHECK(gr_poly(ModuleKind::Regular, 1, {1, 1}, {2, 3}) == CountPoly{1});
    CHECK_THROWS_AS(gr_poly(ModuleKind::Regular, 3, {1, 2}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(gr_poly(ModuleKind::Regular, 2, {0, 1}, {2, 4, 5}), std::domain_error);
}

TEST_CASE("closed-form regular counts") {
    CHECK(szanto_count(2, 0, 1) == CountPoly::w_pow(1) + CountPoly{1});
    CHECK(szanto_count(2, 1, 1) == CountPoly{1});
    CHECK(szanto_count(1, 1, 0) == CountPoly{});
    CHECK(szanto_count(3, 4, 1) == CountPoly{});
}

TEST_CASE("closed-form counts match brute force for every point") {
    for (long n = 1; n <= 3; ++n)
        for (const RegularPoint pt :
             {RegularPoint::at(0), RegularPoint::at(1), RegularPoint::infinity()})
            for (int p : {2, 3, 5, 7})
                for (long a = 0; a <= n; ++a)
                    for (long b = 0; b <= n; ++b) {
                        const KroneckerRep rep = kronecker_module(ModuleKind::Regular, n, pt, p);
                        CHECK(mpz_class(subrep_count(rep, a, b)) ==
                              szanto_count(n, a, b).eval(p));
                    }
}

TEST_CASE("whole-module and empty counts are 1") {
    for (auto kind : {ModuleKind::Preprojective, ModuleKind::Preinjective, ModuleKind::Regular})
        for (long n = 1; n <= 3; ++n) {
            const KroneckerRep rep = kronecker_module(kind, n, RegularPoint::at(1), 3);
            CHECK(subrep_count(rep, rep.v1, rep.v2) == 1);
            CHECK(subrep_count(rep, 0, 0) == 1);
        }
}

TEST_CASE("d exponent") {
    CHECK(d_exponent({0, 0}, {4, 7}) == 0);
    CHECK(d_exponent({1, 1}, {1, 1}) == 0);
    CHECK(d_exponent({1, 1}, {1, 2}) == -2);
}

TEST_CASE("cluster character worked examples") {
    // Regular of quasi-length 1: submodule dimensions (0,0), (0,1), (1,1).
    std::map<std::pair<long, long>, CountPoly> counts;
    counts[{0, 0}] = CountPoly{1};
    counts[{0, 1}] = CountPoly{1};
    counts[{1, 1}] = CountPoly{1};
    CHECK(cc_element({1, 1}, counts) == xdelta());

    CHECK(cc_from_counting(0, {2, 3, 5}) == xvar(0));
    CHECK(cc_from_counting(3, {2, 3, 5}) == xvar(3));
}

TEST_CASE("cluster character equals the recurrence variables") {
    const std::vector<int> primes{2, 3, 5, 7, 11};
    for (long m : {-2L, -1L, 0L, 3L, 4L, 5L}) CHECK(cc_from_counting(m, primes) == xvar(m));
}

TEST_CASE("regular characters give the second-kind series") {
    for (long n = 1; n <= 8; ++n) {
        std::map<std::pair<long, long>, CountPoly> counts;
        for (long a = 0; a <= n; ++a)
            for (long b = 0; b <= n; ++b) counts[{a, b}] = szanto_count(n, a, b);
        CHECK(cc_element({n, n}, counts) == cheb_elem(ChebKind::Second, n));
    }
}

TEST_CASE("enumeration size guard") {
    const KroneckerRep big = kronecker_module(ModuleKind::Regular, 9, RegularPoint::at(1), 11);
    CHECK_THROWS_AS(subrep_count(big, 4, 4), EnumerationTooLarge);
}
