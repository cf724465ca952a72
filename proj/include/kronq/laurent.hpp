#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace kronq {

/// Laurent polynomial in v = q^{1/2} with arbitrary-precision integer
/// coefficients. Stored sparsely in canonical form: no zero coefficient is
/// ever kept. The map key is the v-exponent, so q^k sits at exponent 2k.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long value);
    LaurentQ(mpz_class value);

    static LaurentQ v_pow(long exp);                  // v^exp
    static LaurentQ term(long exp, mpz_class coeff);  // coeff * v^exp

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, mpz_class>& terms() const { return terms_; }
    long min_exp() const;  // undefined on zero; throws
    long max_exp() const;
    const mpz_class* coeff(long exp) const;  // nullptr if absent

    LaurentQ& operator+=(const LaurentQ& rhs);
    LaurentQ& operator-=(const LaurentQ& rhs);
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { a += b; return a; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { a -= b; return a; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    LaurentQ operator-() const;
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }

    /// Bar involution: v -> v^{-1}.
    LaurentQ bar() const;

    /// Multiplication by v^k as an exponent translation.
    LaurentQ shifted(long k) const;

    /// Specialization at v = 1 (sum of all coefficients).
    mpz_class eval_one() const;

    /// True when every coefficient is nonnegative.
    bool nonneg_coeffs() const;

    std::string str() const;

private:
    void insert(long exp, const mpz_class& c);
    std::map<long, mpz_class> terms_;
};

/// Exact division in Z[v^{±1}]: returns c with c*b == a, or nullopt when no
/// such Laurent polynomial exists. Throws std::domain_error for b == 0.
std::optional<LaurentQ> divide_exact(const LaurentQ& a, const LaurentQ& b);

/// Balanced q-binomial [n k] with the base q realized as v^t, computed by the
/// Pascal-type recurrence [i j] = v^{-tj}[i-1 j] + v^{t(i-j)}[i-1 j-1].
/// Zero for k < 0 and for 0 <= n < k; extended to negative n through
/// [n k] = (-1)^k [k-n-1 k]. Palindromic in v for n >= 0 and equal to the
/// ordinary binomial coefficient at v = 1.
LaurentQ bracket_binomial(long n, long k, int t);

/// Integer polynomial in the formal field-cardinality variable w.
/// Canonical form: no zero coefficients, all exponents nonnegative.
class CountPoly {
public:
    CountPoly() = default;
    CountPoly(long value);
    CountPoly(mpz_class value);

    static CountPoly w_pow(long exp);
    static CountPoly term(long exp, mpz_class coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, mpz_class>& terms() const { return terms_; }
    long degree() const;  // -1 for the zero polynomial

    CountPoly& operator+=(const CountPoly& rhs);
    friend CountPoly operator+(CountPoly a, const CountPoly& b) { a += b; return a; }
    friend CountPoly operator*(const CountPoly& a, const CountPoly& b);
    friend bool operator==(const CountPoly& a, const CountPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CountPoly& a, const CountPoly& b) { return !(a == b); }

    mpz_class eval(const mpz_class& w) const;

    std::string str() const;

private:
    void insert(long exp, const mpz_class& c);
    std::map<long, mpz_class> terms_;
};

/// Gaussian binomial (n r) in w. Conventions: 1 for r = 0 and any n,
/// 0 for r < 0, 0 for 0 <= n < r. Negative n with positive r is not a
/// polynomial in w and is rejected with std::domain_error.
CountPoly gauss_binomial(long n, long r);

/// Substitute w -> q^2, i.e. w-degree d becomes v-exponent 4d.
LaurentQ subst_w(const CountPoly& p);

}  // namespace kronq
