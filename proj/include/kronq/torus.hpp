#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "kronq/laurent.hpp"

namespace kronq {

/// Exponent vector in the rank-2 lattice.
struct ExpVec {
    long c1 = 0;
    long c2 = 0;

    friend ExpVec operator+(ExpVec a, ExpVec b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
    friend ExpVec operator-(ExpVec a, ExpVec b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
    friend ExpVec operator*(long s, ExpVec a) { return {s * a.c1, s * a.c2}; }
    ExpVec operator-() const { return {-c1, -c2}; }
    friend bool operator==(ExpVec a, ExpVec b) { return a.c1 == b.c1 && a.c2 == b.c2; }
    friend bool operator!=(ExpVec a, ExpVec b) { return !(a == b); }
};

/// Graded-lex total order: compare (c1+c2, c1) lexicographically. Extends the
/// componentwise partial order and is translation-compatible.
inline bool operator<(ExpVec a, ExpVec b) {
    const long da = a.c1 + a.c2, db = b.c1 + b.c2;
    if (da != db) return da < db;
    return a.c1 < b.c1;
}

/// Componentwise partial order.
inline bool dominates(ExpVec a, ExpVec b) { return b.c1 <= a.c1 && b.c2 <= a.c2; }

/// Skew form Lambda(e, f) = e1 f2 - e2 f1 on exponent vectors.
inline long lambda_form(ExpVec e, ExpVec f) { return e.c1 * f.c2 - e.c2 * f.c1; }

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of the based quantum torus, stored as a finitely supported map
/// from exponent vectors to nonzero Laurent coefficients. Coefficients are
/// taken with respect to the normalized monomials X^(c), so the bar
/// involution acts coefficientwise. Values are immutable in spirit: every
/// operation returns a fresh element.
class TorusElem {
public:
    TorusElem() = default;
    TorusElem(long value);
    TorusElem(const LaurentQ& value);  // value * X^(0,0)

    static TorusElem basis(ExpVec e);  // X^(e)
    static TorusElem term(ExpVec e, LaurentQ coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<ExpVec, LaurentQ>& terms() const { return terms_; }
    const LaurentQ* coeff(ExpVec e) const;

    ExpVec min_support() const;  // graded-lex least; throws on zero
    ExpVec max_support() const;

    TorusElem& operator+=(const TorusElem& rhs);
    TorusElem& operator-=(const TorusElem& rhs);
    friend TorusElem operator+(TorusElem a, const TorusElem& b) { a += b; return a; }
    friend TorusElem operator-(TorusElem a, const TorusElem& b) { a -= b; return a; }
    TorusElem operator-() const;
    friend bool operator==(const TorusElem& a, const TorusElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TorusElem& a, const TorusElem& b) { return !(a == b); }

    /// X^(e) X^(f) = v^{Lambda(e,f)} X^(e+f), extended bilinearly.
    friend TorusElem operator*(const TorusElem& a, const TorusElem& b);

    /// Central scalar multiple.
    TorusElem scaled(const LaurentQ& s) const;

    /// Bar involution: coefficientwise v -> v^{-1}. Anti-automorphism of the
    /// product.
    TorusElem bar() const;

    std::string str() const;

private:
    void insert(ExpVec e, const LaurentQ& c);
    std::map<ExpVec, LaurentQ> terms_;
};

TorusElem pow(const TorusElem& a, long n);

/// All support points minimal under the componentwise partial order, with
/// their coefficients. Requires a != 0.
std::vector<std::pair<ExpVec, LaurentQ>> minimal_terms(const TorusElem& a);

/// Solves c * b == a exactly; throws NotDivisible when a is not a right
/// multiple of b. Works by eliminating the graded-lex maximal term of the
/// residual; fails when the residual minimum falls below
/// min(a) - max(b) + min(b) or the iteration cap (default
/// 10*|supp(a)|*(1+|supp(b)|)) is exceeded.
TorusElem right_divide(const TorusElem& a, const TorusElem& b, std::size_t iter_cap = 0);

/// Solves b * c == a exactly; same failure contract as right_divide.
TorusElem left_divide(const TorusElem& a, const TorusElem& b, std::size_t iter_cap = 0);

}  // namespace kronq
