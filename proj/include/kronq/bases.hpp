#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "kronq/cluster.hpp"
#include "kronq/torus.hpp"

namespace kronq {

enum class Family { B, S, D };
enum class ChebKind { First, Second, Power };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

/// Chebyshev-type element evaluated at z = X^(-1,1)+X^(1,-1)+X^(-1,-1):
/// First -> z_n (F_n(z)), Second -> s_n (S_n(z)), Power -> z^n. n = 0 gives 1
/// for every kind. Memoized.
TorusElem cheb_elem(ChebKind kind, long n);

/// Label of a basis element: the unit, a diagonal element z_n/s_n/z^n
/// (n >= 1), or a cluster monomial X_m^a X_{m+1}^b in canonical form
/// (a >= 1, b >= 0; a monomial with a = 0 is stored as (m+1, b, 0)).
struct BasisLabel {
    enum class Kind { Unit, Diagonal, Monomial };

    static BasisLabel unit();
    static BasisLabel diagonal(long n);
    static BasisLabel monomial(long m, long a, long b);

    Kind kind = Kind::Unit;
    long m = 0, a = 0, b = 0;  // Monomial
    long n = 0;                // Diagonal

    friend bool operator==(const BasisLabel& x, const BasisLabel& y) {
        return x.kind == y.kind && x.m == y.m && x.a == y.a && x.b == y.b && x.n == y.n;
    }
    friend bool operator<(const BasisLabel& x, const BasisLabel& y) {
        auto key = [](const BasisLabel& l) {
            return std::tuple(static_cast<int>(l.kind), l.n, l.m, l.a, l.b);
        };
        return key(x) < key(y);
    }

    std::string str() const;
};

/// Finitely supported coefficient map over basis labels, tagged with the
/// family and the primed normalization (primed monomials carry q^{-ab/2}).
struct BasisExpansion {
    Family family = Family::B;
    bool primed = false;
    std::map<BasisLabel, LaurentQ> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const BasisExpansion& x, const BasisExpansion& y) {
        return x.family == y.family && x.primed == y.primed && x.terms == y.terms;
    }

    std::string str() const;
};

/// Exponent of the componentwise-least term of the basis element:
/// unit -> (0,0), diagonal n -> (-n,-n), monomial -> a*min(X_m)+b*min(X_{m+1}).
ExpVec min_exp_label(const BasisLabel& l);

/// Inverse of min_exp_label; nullopt when c is not the minimal exponent of
/// any basis element.
std::optional<BasisLabel> label_of_min_exp(ExpVec c);

/// The torus element named by a single label in the given family.
TorusElem realize_label(const BasisLabel& l, Family family, bool primed);

/// Sum of coefficient * basis element over the expansion.
TorusElem realize(const BasisExpansion& e);

struct NotInAlgebra : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact expansion of a torus element in the chosen basis by greedy
/// elimination of the graded-lex minimal term. Throws NotInAlgebra when the
/// input is not a Z[q^{±1/2}]-combination of basis elements.
BasisExpansion expand_in_basis(const TorusElem& a, Family family, bool primed);

/// Index shift X_m -> X_{m+t} on monomial labels; diagonal labels and the
/// unit are fixed.
BasisExpansion shift_expansion(const BasisExpansion& e, long t);

/// Coefficient array of realize(e) with respect to the cluster
/// (X_m, X_{m+1}), computed through the shift automorphism.
TorusElem laurent_in_cluster(const BasisExpansion& e, long m);

struct PositivityWitness {
    long m = 0;
    ExpVec exponent;
    LaurentQ coefficient;
};

/// nullopt when every coefficient of laurent_in_cluster(e, m) lies in
/// N[q^{±1/2}] for every m in [m_lo, m_hi]; otherwise the first offender.
std::optional<PositivityWitness> positivity_witness(const BasisExpansion& e, long m_lo, long m_hi);

inline bool is_positive(const BasisExpansion& e, long m_lo, long m_hi) {
    return !positivity_witness(e, m_lo, m_hi).has_value();
}

}  // namespace kronq
