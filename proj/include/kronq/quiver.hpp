#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kronq/laurent.hpp"
#include "kronq/torus.hpp"

namespace kronq {

enum class ModuleKind { Preprojective, Preinjective, Regular };

/// Point on the projective line picking out a regular module: a residue
/// lambda >= 0 (reduced mod p) or the point at infinity.
struct RegularPoint {
    long value = 1;
    bool infinite = false;

    static RegularPoint at(long v) { return {v, false}; }
    static RegularPoint infinity() { return {0, true}; }
};

/// Representation of the two-arrow quiver over a prime field: a pair of
/// v2 x v1 matrices acting on F_p^{v1} -> F_p^{v2}.
struct KroneckerRep {
    long v1 = 0;
    long v2 = 0;
    int p = 2;
    // Row-major, entries reduced mod p.
    std::vector<int> a;
    std::vector<int> b;

    int a_at(long r, long c) const { return a[static_cast<std::size_t>(r * v1 + c)]; }
    int b_at(long r, long c) const { return b[static_cast<std::size_t>(r * v1 + c)]; }
};

struct EnumerationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InterpolationMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coordinate models of the indecomposables: the preprojective with
/// dimension vector (n-1, n) embeds onto the first resp. last n-1
/// coordinates; the preinjective (n, n-1) projects as (I|0) and (0|I); the
/// regular (n, n) at a finite point is (I, J_n(lambda)) and at infinity
/// (J_n(0), I).
KroneckerRep kronecker_module(ModuleKind kind, long n, RegularPoint lambda, int p);

/// Number of subrepresentation pairs (U1, U2) with the given dimension
/// vector, by exhaustive enumeration of row-echelon subspace
/// representatives. Out-of-range e returns 0. Refuses when the candidate
/// pair count exceeds 10^7.
unsigned long subrep_count(const KroneckerRep& rep, long e1, long e2);

/// Counting polynomial in the field cardinality w, interpolated from
/// brute-force counts over the given primes. Uses the variety dimension
/// e1(v1-e1) + e2(v2-e2) - 2 e1 (v2-e2) as the degree bound; surplus primes
/// are consistency checks.
CountPoly gr_poly(ModuleKind kind, long n, std::pair<long, long> e,
                  const std::vector<int>& primes, RegularPoint lambda = RegularPoint::at(1));

/// Closed-form count |Gr_(a,b)| of the regular module of quasi-length n:
/// (n-a choose n-b)_w (b choose a)_w, zero outside the dimension box.
CountPoly szanto_count(long n, long a, long b);

/// d_e^V = 2 e1 (v1-e1) - 2 (2 e1 - e2)(v2-e2).
long d_exponent(std::pair<long, long> e, std::pair<long, long> v);

/// Cluster character: sum over e of v^{-d_e^V} |Gr_e| X^{(-v1+2v2-2e2, 2e1-v2)}
/// with the counting polynomials substituted at w = q^2.
TorusElem cc_element(std::pair<long, long> v, const std::map<std::pair<long, long>, CountPoly>& counts);

/// Full pipeline for the module attached to the m-th cluster variable
/// (m outside {1,2}): brute-force counts over the primes, interpolate each
/// cell, assemble the cluster character.
TorusElem cc_from_counting(long m, const std::vector<int>& primes);

bool is_prime(long p);

}  // namespace kronq
