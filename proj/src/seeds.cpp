#include "kronq/seeds.hpp"

#include <algorithm>

namespace kronq {

std::array<long, 2> check_compatible(const Mat2& lambda, const Mat2& btilde) {
    if (lambda.e11 != 0 || lambda.e22 != 0 || lambda.e12 != -lambda.e21)
        throw std::invalid_argument("check_compatible: lambda is not skew-symmetric");
    const Mat2 prod = btilde.transpose() * lambda;
    if (prod.e12 != 0 || prod.e21 != 0)
        throw Incompatible("check_compatible: product is not diagonal");
    if (prod.e11 <= 0 || prod.e22 <= 0)
        throw Incompatible("check_compatible: diagonal entries are not positive");
    return {prod.e11, prod.e22};
}

Mat2 e_matrix(const Mat2& btilde, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("e_matrix: direction must be 1 or 2");
    Mat2 e = Mat2::identity();
    if (k == 1) {
        e.e11 = -1;
        e.e21 = std::max(0L, -btilde.e21);
    } else {
        e.e22 = -1;
        e.e12 = std::max(0L, -btilde.e12);
    }
    return e;
}

QuantumSeed initial_seed() {
    QuantumSeed s;
    s.lambda = {0, 1, -1, 0};
    s.btilde = {0, 2, -2, 0};
    s.vars = {TorusElem::basis({1, 0}), TorusElem::basis({0, 1})};
    return s;
}

namespace {

// Skew form of the current frame on Z^2: Lambda_M(c, d) = lambda_12 (c1 d2 - c2 d1).
long frame_form(const Mat2& lambda, const std::array<long, 2>& c, const std::array<long, 2>& d) {
    return lambda.e12 * (c[0] * d[1] - c[1] * d[0]);
}

// Fomin-Zelevinsky matrix mutation; in rank 2 without coefficients this is a
// sign flip, which the caller asserts.
Mat2 mutate_btilde(const Mat2& b, int k) {
    auto entry = [&](int i, int j) {
        if (i == k || j == k) return -b.at(i, j);
        const long bik = b.at(i, k), bkj = b.at(k, j);
        return b.at(i, j) + (bik > 0 ? bik * std::max(0L, bkj) : -(-bik) * std::max(0L, -bkj));
    };
    return {entry(1, 1), entry(1, 2), entry(2, 1), entry(2, 2)};
}

}  // namespace

QuantumSeed mutate(const QuantumSeed& seed, int direction) {
    if (direction != 1 && direction != 2)
        throw std::invalid_argument("mutate: direction must be 1 or 2");
    const int k = 3 - direction;  // slot carrying the exchanged variable
    check_compatible(seed.lambda, seed.btilde);

    const Mat2 e = e_matrix(seed.btilde, k);
    const std::array<long, 2> g = e.column(k);
    const std::array<long, 2> bk = seed.btilde.column(k);
    const std::array<long, 2> ek{k == 1 ? 1L : 0L, k == 2 ? 1L : 0L};

    // New variable Y at slot k satisfies
    //   Y * X_k = v^{L(g, e_k)} M(g + e_k) + v^{L(g + b^k, e_k)} M(g + b^k + e_k),
    // and both frame monomials on the right have slot-k exponent zero, hence
    // are plain powers of the other variable. Divide exactly in the torus.
    const std::array<long, 2> c1{g[0] + ek[0], g[1] + ek[1]};
    const std::array<long, 2> c2{g[0] + bk[0] + ek[0], g[1] + bk[1] + ek[1]};
    const int other = 3 - k;
    const long pow1 = k == 1 ? c1[1] : c1[0];
    const long pow2 = k == 1 ? c2[1] : c2[0];
    if ((k == 1 ? c1[0] : c1[1]) != 0 || (k == 1 ? c2[0] : c2[1]) != 0 || pow1 < 0 || pow2 < 0)
        throw std::logic_error("mutate: exchange monomials are not slot-free");
    TorusElem rhs =
        pow(seed.vars[other - 1], pow1).scaled(LaurentQ::v_pow(frame_form(seed.lambda, g, ek)));
    rhs += pow(seed.vars[other - 1], pow2)
               .scaled(LaurentQ::v_pow(frame_form(seed.lambda, {g[0] + bk[0], g[1] + bk[1]}, ek)));
    const TorusElem fresh = right_divide(rhs, seed.vars[k - 1]);

    QuantumSeed out;
    out.btilde = mutate_btilde(seed.btilde, k);
    if (!(out.btilde == -seed.btilde))
        throw std::logic_error("mutate: rank-2 matrix mutation must be a sign flip");
    out.lambda = e.transpose() * seed.lambda * e;
    out.vars = seed.vars;
    out.vars[k - 1] = fresh;
    out.history = seed.history;
    out.history.push_back(direction);
    check_compatible(out.lambda, out.btilde);
    return out;
}

std::vector<TorusElem> mutation_walk(const QuantumSeed& seed, const std::vector<int>& directions) {
    std::vector<TorusElem> produced;
    QuantumSeed cur = seed;
    for (int d : directions) {
        QuantumSeed next = mutate(cur, d);
        produced.push_back(next.vars[static_cast<std::size_t>(3 - d - 1)]);
        cur = std::move(next);
    }
    return produced;
}

}  // namespace kronq
