#include "kronq/bases.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

namespace kronq {

std::string family_name(Family f) {
    switch (f) {
        case Family::B: return "B";
        case Family::S: return "S";
        case Family::D: return "D";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "B") return Family::B;
    if (s == "S") return Family::S;
    if (s == "D") return Family::D;
    return std::nullopt;
}

namespace {

struct ChebCache {
    std::map<std::pair<int, long>, TorusElem> table;
    std::mutex mu;
};

ChebCache& cheb_cache() {
    static ChebCache c;
    return c;
}

TorusElem cheb_compute(ChebKind kind, long n) {
    const TorusElem& z = xdelta();
    switch (kind) {
        case ChebKind::Power:
            return pow(z, n);
        case ChebKind::Second: {
            // S_0 = 1, S_1 = z, S_{n+1} = S_n z - S_{n-1}
            TorusElem prev{1};
            if (n == 0) return prev;
            TorusElem cur = z;
            for (long i = 2; i <= n; ++i) {
                TorusElem next = cur * z - prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case ChebKind::First: {
            // F_0 = 1, F_1 = z, F_2 = z^2 - 2, F_{n+1} = F_n z - F_{n-1}
            if (n == 0) return TorusElem{1};
            if (n == 1) return z;
            TorusElem prev = z;
            TorusElem cur = z * z - TorusElem{2};
            for (long i = 3; i <= n; ++i) {
                TorusElem next = cur * z - prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
    }
    throw std::logic_error("cheb_compute: bad kind");
}

}  // namespace

TorusElem cheb_elem(ChebKind kind, long n) {
    if (n < 0) throw std::domain_error("cheb_elem: negative index");
    auto& c = cheb_cache();
    const auto key = std::pair(static_cast<int>(kind), n);
    std::lock_guard<std::mutex> lock(c.mu);
    if (auto it = c.table.find(key); it != c.table.end()) return it->second;
    auto [it, ok] = c.table.emplace(key, cheb_compute(kind, n));
    return it->second;
}

BasisLabel BasisLabel::unit() { return BasisLabel{}; }

BasisLabel BasisLabel::diagonal(long n) {
    if (n < 1) throw std::domain_error("BasisLabel::diagonal: index must be >= 1");
    BasisLabel l;
    l.kind = Kind::Diagonal;
    l.n = n;
    return l;
}

BasisLabel BasisLabel::monomial(long m, long a, long b) {
    if (a < 0 || b < 0) throw std::domain_error("BasisLabel::monomial: negative exponent");
    if (a == 0 && b == 0) return unit();
    if (a == 0) return monomial(m + 1, b, 0);
    BasisLabel l;
    l.kind = Kind::Monomial;
    l.m = m;
    l.a = a;
    l.b = b;
    return l;
}

std::string BasisLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Unit:
            os << "1";
            break;
        case Kind::Diagonal:
            os << "diag(" << n << ")";
            break;
        case Kind::Monomial:
            os << "X[" << m << "]^" << a;
            if (b > 0) os << "*X[" << m + 1 << "]^" << b;
            break;
    }
    return os.str();
}

std::string BasisExpansion::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << l.str();
    }
    return os.str();
}

ExpVec min_exp_label(const BasisLabel& l) {
    switch (l.kind) {
        case BasisLabel::Kind::Unit:
            return {0, 0};
        case BasisLabel::Kind::Diagonal:
            return {-l.n, -l.n};
        case BasisLabel::Kind::Monomial:
            return l.a * min_exp_xvar(l.m) + l.b * min_exp_xvar(l.m + 1);
    }
    throw std::logic_error("min_exp_label: bad kind");
}

std::optional<BasisLabel> label_of_min_exp(ExpVec c) {
    if (c == ExpVec{0, 0}) return BasisLabel::unit();
    if (c.c1 == c.c2 && c.c1 < 0) return BasisLabel::diagonal(-c.c1);
    // Solve c = a*d_m + b*d_{m+1} over consecutive minimal-exponent pairs;
    // the pairs are unimodular, so each m admits at most one integer solution.
    const long window = std::abs(c.c1) + std::abs(c.c2) + 3;
    for (long m = -window; m <= window; ++m) {
        const ExpVec d = min_exp_xvar(m);
        const ExpVec e = min_exp_xvar(m + 1);
        const long det = d.c1 * e.c2 - d.c2 * e.c1;
        if (det != 1 && det != -1) throw std::logic_error("label_of_min_exp: non-unimodular pair");
        const long a = (c.c1 * e.c2 - c.c2 * e.c1) / det;
        const long b = (d.c1 * c.c2 - d.c2 * c.c1) / det;
        if (a >= 1 && b >= 0 && a * d + b * e == c) return BasisLabel::monomial(m, a, b);
    }
    return std::nullopt;
}

namespace {

// Positivity scans realize the same shifted monomials across many clusters;
// memoize the unprimed products.
const TorusElem& monomial_elem(long m, long a, long b) {
    static std::map<std::tuple<long, long, long>, TorusElem> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.try_emplace({m, a, b});
    if (fresh) it->second = pow(xvar(m), a) * pow(xvar(m + 1), b);
    return it->second;
}

}  // namespace

TorusElem realize_label(const BasisLabel& l, Family family, bool primed) {
    switch (l.kind) {
        case BasisLabel::Kind::Unit:
            return TorusElem{1};
        case BasisLabel::Kind::Diagonal:
            switch (family) {
                case Family::B: return cheb_elem(ChebKind::First, l.n);
                case Family::S: return cheb_elem(ChebKind::Second, l.n);
                case Family::D: return cheb_elem(ChebKind::Power, l.n);
            }
            throw std::logic_error("realize_label: bad family");
        case BasisLabel::Kind::Monomial: {
            const TorusElem& r = monomial_elem(l.m, l.a, l.b);
            return primed ? r.scaled(LaurentQ::v_pow(-l.a * l.b)) : r;
        }
    }
    throw std::logic_error("realize_label: bad kind");
}

TorusElem realize(const BasisExpansion& e) {
    TorusElem r;
    for (const auto& [l, c] : e.terms) r += realize_label(l, e.family, e.primed).scaled(c);
    return r;
}

BasisExpansion expand_in_basis(const TorusElem& a, Family family, bool primed) {
    BasisExpansion out;
    out.family = family;
    out.primed = primed;
    if (a.is_zero()) return out;
    // Within one family the graded-lex maxima of basis elements are pairwise
    // distinct, so the top term of a genuine combination never cancels and
    // every label minimum lies at or below the input's maximum. A greedy
    // minimum past that point signals a non-member.
    const ExpVec ceiling = a.max_support();
    constexpr std::size_t kMaxSteps = 100000;
    TorusElem rem = a;
    std::optional<ExpVec> prev;
    std::size_t steps = 0;
    while (!rem.is_zero()) {
        if (++steps > kMaxSteps) throw NotInAlgebra("expand_in_basis: expansion too large");
        const ExpVec mu = rem.min_support();
        if (prev && !(*prev < mu))
            throw NotInAlgebra("expand_in_basis: minimal term failed to increase");
        if (ceiling < mu)
            throw NotInAlgebra("expand_in_basis: minimal exponent exceeds the leading term");
        auto label = label_of_min_exp(mu);
        if (!label)
            throw NotInAlgebra("expand_in_basis: minimal exponent is not a basis minimum");
        const TorusElem base = realize_label(*label, family, primed);
        const ExpVec bmu = base.min_support();
        if (bmu != mu)
            throw std::logic_error("expand_in_basis: basis minimal exponent mismatch");
        auto f = divide_exact(*rem.coeff(mu), *base.coeff(bmu));
        if (!f)
            throw NotInAlgebra("expand_in_basis: coefficient not divisible by the basis unit");
        out.terms.emplace(*label, *f);
        rem -= base.scaled(*f);
        prev = mu;
    }
    return out;
}

BasisExpansion shift_expansion(const BasisExpansion& e, long t) {
    BasisExpansion out;
    out.family = e.family;
    out.primed = e.primed;
    for (const auto& [l, c] : e.terms) {
        BasisLabel shifted = l;
        if (l.kind == BasisLabel::Kind::Monomial) shifted = BasisLabel::monomial(l.m + t, l.a, l.b);
        out.terms.emplace(shifted, c);
    }
    return out;
}

TorusElem laurent_in_cluster(const BasisExpansion& e, long m) {
    return realize(shift_expansion(e, 1 - m));
}

std::optional<PositivityWitness> positivity_witness(const BasisExpansion& e, long m_lo,
                                                    long m_hi) {
    if (e.is_zero()) throw std::domain_error("positivity_witness: zero element");
    for (long m = m_lo; m <= m_hi; ++m) {
        const TorusElem laurent = laurent_in_cluster(e, m);
        for (const auto& [exp, c] : laurent.terms())
            if (!c.nonneg_coeffs()) return PositivityWitness{m, exp, c};
    }
    return std::nullopt;
}

}  // namespace kronq
