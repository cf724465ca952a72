#include "kronq/torus.hpp"

#include <sstream>

namespace kronq {

TorusElem::TorusElem(long value) : TorusElem(LaurentQ(value)) {}

TorusElem::TorusElem(const LaurentQ& value) {
    if (!value.is_zero()) terms_.emplace(ExpVec{0, 0}, value);
}

TorusElem TorusElem::basis(ExpVec e) { return term(e, LaurentQ{1}); }

TorusElem TorusElem::term(ExpVec e, LaurentQ coeff) {
    TorusElem r;
    if (!coeff.is_zero()) r.terms_.emplace(e, std::move(coeff));
    return r;
}

const LaurentQ* TorusElem::coeff(ExpVec e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

ExpVec TorusElem::min_support() const {
    if (terms_.empty()) throw std::domain_error("TorusElem::min_support on zero");
    return terms_.begin()->first;
}

ExpVec TorusElem::max_support() const {
    if (terms_.empty()) throw std::domain_error("TorusElem::max_support on zero");
    return terms_.rbegin()->first;
}

void TorusElem::insert(ExpVec e, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElem& TorusElem::operator+=(const TorusElem& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert(e, c);
    return *this;
}

TorusElem& TorusElem::operator-=(const TorusElem& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert(e, -c);
    return *this;
}

TorusElem TorusElem::operator-() const {
    TorusElem r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TorusElem operator*(const TorusElem& a, const TorusElem& b) {
    TorusElem r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.insert(ea + eb, (ca * cb).shifted(lambda_form(ea, eb)));
    return r;
}

TorusElem TorusElem::scaled(const LaurentQ& s) const {
    TorusElem r;
    for (const auto& [e, c] : terms_) r.insert(e, c * s);
    return r;
}

TorusElem TorusElem::bar() const {
    TorusElem r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.bar());
    return r;
}

std::string TorusElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool origin = (e == ExpVec{0, 0});
        const bool single = c.terms().size() == 1;
        const bool unit = (c == LaurentQ{1});
        if (origin) {
            os << c.str();
            continue;
        }
        if (unit) {
            // bare monomial
        } else if (single) {
            os << c.str() << "*";
        } else {
            os << "(" << c.str() << ")*";
        }
        os << "X^(" << e.c1 << "," << e.c2 << ")";
    }
    return os.str();
}

TorusElem pow(const TorusElem& a, long n) {
    if (n < 0) throw std::domain_error("pow: negative exponent");
    TorusElem r{1};
    for (long i = 0; i < n; ++i) r = r * a;
    return r;
}

std::vector<std::pair<ExpVec, LaurentQ>> minimal_terms(const TorusElem& a) {
    if (a.is_zero()) throw std::domain_error("minimal_terms on zero");
    std::vector<std::pair<ExpVec, LaurentQ>> out;
    for (const auto& [e, c] : a.terms()) {
        bool minimal = true;
        for (const auto& [f, d] : a.terms()) {
            if (f != e && dominates(e, f)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.emplace_back(e, c);
    }
    return out;
}

namespace {

enum class Side { Left, Right };

// Shared elimination loop: Side::Right solves c*b == a, Side::Left b*c == a.
TorusElem divide(const TorusElem& a, const TorusElem& b, std::size_t iter_cap, Side side) {
    if (b.is_zero()) throw std::domain_error("divide: division by zero");
    if (a.is_zero()) return TorusElem{};
    if (iter_cap == 0) iter_cap = 10 * a.size() * (1 + b.size());
    const ExpVec bmax = b.max_support();
    const LaurentQ& blead = *b.coeff(bmax);
    const ExpVec low = a.min_support() - bmax + b.min_support();
    TorusElem rem = a;
    TorusElem quot;
    std::size_t iters = 0;
    while (!rem.is_zero()) {
        if (++iters > iter_cap) throw NotDivisible("divide: iteration cap exceeded");
        if (rem.min_support() < low)
            throw NotDivisible("divide: residual fell below the divisibility bound");
        const ExpVec re = rem.max_support();
        const ExpVec qe = re - bmax;
        auto fc = divide_exact(*rem.coeff(re), blead);
        if (!fc) throw NotDivisible("divide: leading coefficient not divisible");
        const long twist =
            side == Side::Right ? lambda_form(qe, bmax) : lambda_form(bmax, qe);
        TorusElem t = TorusElem::term(qe, *fc * LaurentQ::v_pow(-twist));
        quot += t;
        rem -= side == Side::Right ? t * b : b * t;
    }
    return quot;
}

}  // namespace

TorusElem right_divide(const TorusElem& a, const TorusElem& b, std::size_t iter_cap) {
    return divide(a, b, iter_cap, Side::Right);
}

TorusElem left_divide(const TorusElem& a, const TorusElem& b, std::size_t iter_cap) {
    return divide(a, b, iter_cap, Side::Left);
}

}  // namespace kronq
