#include "kronq/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace kronq {

LaurentQ::LaurentQ(long value) : LaurentQ(mpz_class(value)) {}

LaurentQ::LaurentQ(mpz_class value) {
    if (value != 0) terms_.emplace(0, std::move(value));
}

LaurentQ LaurentQ::v_pow(long exp) { return term(exp, 1); }

LaurentQ LaurentQ::term(long exp, mpz_class coeff) {
    LaurentQ r;
    if (coeff != 0) r.terms_.emplace(exp, std::move(coeff));
    return r;
}

long LaurentQ::min_exp() const {
    if (terms_.empty()) throw std::domain_error("LaurentQ::min_exp on zero");
    return terms_.begin()->first;
}

long LaurentQ::max_exp() const {
    if (terms_.empty()) throw std::domain_error("LaurentQ::max_exp on zero");
    return terms_.rbegin()->first;
}

const mpz_class* LaurentQ::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? nullptr : &it->second;
}

void LaurentQ::insert(long exp, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert(e, -c);
    return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    // Dense accumulation over the product's exponent window.
    const long base = a.min_exp() + b.min_exp();
    const std::size_t span =
        static_cast<std::size_t>(a.max_exp() - a.min_exp() + b.max_exp() - b.min_exp()) + 1;
    std::vector<mpz_class> acc(span);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            mpz_addmul(acc[static_cast<std::size_t>(ea + eb - base)].get_mpz_t(),
                       ca.get_mpz_t(), cb.get_mpz_t());
    for (std::size_t i = 0; i < span; ++i)
        if (acc[i] != 0)
            r.terms_.emplace_hint(r.terms_.end(), base + static_cast<long>(i),
                                  std::move(acc[i]));
    return r;
}

LaurentQ LaurentQ::shifted(long k) const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentQ LaurentQ::bar() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

mpz_class LaurentQ::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentQ::nonneg_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

namespace {

// Renders q^{e} for v-exponent 2e and q^{k/2} for odd v-exponent k.
std::string q_power_str(long vexp) {
    if (vexp == 0) return "1";
    std::ostringstream os;
    os << "q";
    if (vexp == 2) return os.str();
    os << "^{";
    if (vexp % 2 == 0)
        os << vexp / 2;
    else
        os << vexp << "/2";
    os << "}";
    return os.str();
}

}  // namespace

std::string LaurentQ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending exponents read naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << q_power_str(e);
        }
    }
    return os.str();
}

std::optional<LaurentQ> divide_exact(const LaurentQ& a, const LaurentQ& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (a.is_zero()) return LaurentQ{};
    const long quot_min = a.min_exp() - b.min_exp();
    const long bmax = b.max_exp();
    const mpz_class& blead = *b.coeff(bmax);
    LaurentQ rem = a;
    LaurentQ quot;
    while (!rem.is_zero()) {
        const long re = rem.max_exp();
        const long qe = re - bmax;
        if (qe < quot_min) return std::nullopt;
        const mpz_class& rc = *rem.coeff(re);
        if (!mpz_divisible_p(rc.get_mpz_t(), blead.get_mpz_t())) return std::nullopt;
        LaurentQ t = LaurentQ::term(qe, rc / blead);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

LaurentQ bracket_binomial(long n, long k, int t) {
    if (t <= 0) throw std::domain_error("bracket_binomial: base exponent must be positive");
    if (k < 0) return LaurentQ{};
    if (k == 0) return LaurentQ{1};
    if (n < 0) {
        LaurentQ r = bracket_binomial(k - n - 1, k, t);
        return (k % 2 != 0) ? -r : r;
    }
    if (k > n) return LaurentQ{};
    std::vector<LaurentQ> row(static_cast<std::size_t>(k) + 1);
    row[0] = LaurentQ{1};
    for (long i = 1; i <= n; ++i) {
        const long jmax = std::min(i, k);
        for (long j = jmax; j >= 1; --j) {
            LaurentQ next = row[j] * LaurentQ::v_pow(-t * j);
            next += row[j - 1] * LaurentQ::v_pow(t * (i - j));
            row[j] = std::move(next);
        }
    }
    return row[k];
}

CountPoly::CountPoly(long value) : CountPoly(mpz_class(value)) {}

CountPoly::CountPoly(mpz_class value) {
    if (value != 0) terms_.emplace(0, std::move(value));
}

CountPoly CountPoly::w_pow(long exp) { return term(exp, 1); }

CountPoly CountPoly::term(long exp, mpz_class coeff) {
    if (exp < 0) throw std::domain_error("CountPoly: negative exponent");
    CountPoly r;
    if (coeff != 0) r.terms_.emplace(exp, std::move(coeff));
    return r;
}

long CountPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

void CountPoly::insert(long exp, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CountPoly& CountPoly::operator+=(const CountPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert(e, c);
    return *this;
}

CountPoly operator*(const CountPoly& a, const CountPoly& b) {
    CountPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.insert(ea + eb, ca * cb);
    return r;
}

mpz_class CountPoly::eval(const mpz_class& w) const {
    // Horner over the sparse support.
    mpz_class acc = 0;
    long at = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        for (; at > e; --at) acc *= w;
        acc += c;
    }
    for (; at > 0; --at) acc *= w;
    return acc;
}

std::string CountPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "w";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

CountPoly gauss_binomial(long n, long r) {
    if (r < 0) return CountPoly{};
    if (r == 0) return CountPoly{1};
    if (n < 0) throw std::domain_error("gauss_binomial: negative n with positive r");
    if (n < r) return CountPoly{};
    std::vector<CountPoly> row(static_cast<std::size_t>(r) + 1);
    row[0] = CountPoly{1};
    for (long i = 1; i <= n; ++i) {
        const long jmax = std::min(i, r);
        for (long j = jmax; j >= 1; --j) {
            CountPoly next = row[j - 1];
            next += row[j] * CountPoly::w_pow(j);
            row[j] = std::move(next);
        }
    }
    return row[r];
}

LaurentQ subst_w(const CountPoly& p) {
    LaurentQ r;
    for (const auto& [e, c] : p.terms()) r += LaurentQ::term(4 * e, c);
    return r;
}

}  // namespace kronq
