#pragma once

#include <array>
#include <vector>

#include "kronq/torus.hpp"

namespace kronq {

/// 2x2 integer matrix, row-major.
struct Mat2 {
    long e11 = 0, e12 = 0, e21 = 0, e22 = 0;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    Mat2 transpose() const { return {e11, e21, e12, e22}; }
    Mat2 operator-() const { return {-e11, -e12, -e21, -e22}; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }
    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.e11 == b.e11 && a.e12 == b.e12 && a.e21 == b.e21 && a.e22 == b.e22;
    }
    long at(int r, int c) const {
        if (r == 1) return c == 1 ? e11 : e12;
        return c == 1 ? e21 : e22;
    }
    std::array<long, 2> column(int c) const {
        return c == 1 ? std::array<long, 2>{e11, e21} : std::array<long, 2>{e12, e22};
    }
};

struct Incompatible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checks Btilde^T * Lambda = diag(d1, d2) with positive entries; returns the
/// diagonal or throws Incompatible. Lambda must be skew-symmetric.
std::array<long, 2> check_compatible(const Mat2& lambda, const Mat2& btilde);

/// Column-k elimination matrix of the exchange matrix: identity off column k,
/// -1 at (k,k), max(0, -b_{ik}) at (i,k) for i != k. Involutive.
Mat2 e_matrix(const Mat2& btilde, int k);

/// Quantum seed: the compatible pair together with the current cluster
/// variables realized inside the ambient torus. Immutable; mutation returns
/// a fresh seed.
struct QuantumSeed {
    Mat2 lambda;
    Mat2 btilde;
    std::array<TorusElem, 2> vars;
    std::vector<int> history;

    friend bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
        return a.lambda == b.lambda && a.btilde == b.btilde && a.vars == b.vars;
    }
};

/// The initial seed of the Kronecker exchange pattern:
/// Lambda = ((0,1),(-1,0)), Btilde = ((0,2),(-2,0)), vars (X_1, X_2).
QuantumSeed initial_seed();

/// One-step mutation. Direction 1 walks the variable strip downward (the
/// first mutation from the initial seed produces X_0), direction 2 walks
/// upward (produces X_3); internally direction d mutates slot 3-d of the
/// exchange-matrix data. Involutive: mutate(mutate(s, d), d) == s.
QuantumSeed mutate(const QuantumSeed& seed, int direction);

/// Applies the directions in order and returns each newly created variable.
std::vector<TorusElem> mutation_walk(const QuantumSeed& seed, const std::vector<int>& directions);

}  // namespace kronq
