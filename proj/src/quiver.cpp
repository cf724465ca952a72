#include "kronq/quiver.hpp"

#include "kronq/cluster.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <tuple>

namespace kronq {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

KroneckerRep kronecker_module(ModuleKind kind, long n, RegularPoint lambda, int p) {
    if (n < 1) throw std::domain_error("kronecker_module: n must be >= 1");
    if (!is_prime(p)) throw std::domain_error("kronecker_module: p is not prime");
    KroneckerRep rep;
    rep.p = p;
    switch (kind) {
        case ModuleKind::Preprojective: {
            rep.v1 = n - 1;
            rep.v2 = n;
            rep.a.assign(static_cast<std::size_t>(rep.v1 * rep.v2), 0);
            rep.b.assign(static_cast<std::size_t>(rep.v1 * rep.v2), 0);
            for (long i = 0; i < n - 1; ++i) {
                rep.a[static_cast<std::size_t>(i * rep.v1 + i)] = 1;        // e_i -> e_i
                rep.b[static_cast<std::size_t>((i + 1) * rep.v1 + i)] = 1;  // e_i -> e_{i+1}
            }
            break;
        }
        case ModuleKind::Preinjective: {
            rep.v1 = n;
            rep.v2 = n - 1;
            rep.a.assign(static_cast<std::size_t>(rep.v1 * rep.v2), 0);
            rep.b.assign(static_cast<std::size_t>(rep.v1 * rep.v2), 0);
            for (long i = 0; i < n - 1; ++i) {
                rep.a[static_cast<std::size_t>(i * rep.v1 + i)] = 1;      // (I | 0)
                rep.b[static_cast<std::size_t>(i * rep.v1 + i + 1)] = 1;  // (0 | I)
            }
            break;
        }
        case ModuleKind::Regular: {
            rep.v1 = n;
            rep.v2 = n;
            rep.a.assign(static_cast<std::size_t>(n * n), 0);
            rep.b.assign(static_cast<std::size_t>(n * n), 0);
            const long lam = lambda.infinite ? 0 : ((lambda.value % p) + p) % p;
            // Jordan block J_n(lam): lam on the diagonal, 1 on the superdiagonal.
            for (long i = 0; i < n; ++i) {
                if (lambda.infinite) {
                    rep.b[static_cast<std::size_t>(i * n + i)] = 1;
                    if (i + 1 < n) rep.a[static_cast<std::size_t>(i * n + i + 1)] = 1;
                } else {
                    rep.a[static_cast<std::size_t>(i * n + i)] = 1;
                    rep.b[static_cast<std::size_t>(i * n + i)] = static_cast<int>(lam);
                    if (i + 1 < n) rep.b[static_cast<std::size_t>(i * n + i + 1)] = 1;
                }
            }
            break;
        }
    }
    return rep;
}

namespace {

constexpr long kMaxDim = 16;

// Row basis of a subspace of F_p^n in reduced row-echelon form, flattened
// into a fixed-size buffer to keep the enumeration loops allocation-free.
struct Subspace {
    int dim = 0;
    int n = 0;
    std::array<int8_t, kMaxDim> pivots{};
    std::array<int8_t, kMaxDim * kMaxDim> rows{};  // row-major dim x n

    int8_t at(int r, int c) const { return rows[static_cast<std::size_t>(r * kMaxDim + c)]; }
    void set(int r, int c, int v) { rows[static_cast<std::size_t>(r * kMaxDim + c)] = static_cast<int8_t>(v); }
};

// True when vec (length n) lies in the span; reduces in place.
bool contains(const Subspace& s, int* vec, int p) {
    for (int i = 0; i < s.dim; ++i) {
        const int f = vec[s.pivots[static_cast<std::size_t>(i)]];
        if (f == 0) continue;
        for (int c = 0; c < s.n; ++c) vec[c] = (vec[c] - f * s.at(i, c)) % p;
    }
    for (int c = 0; c < s.n; ++c)
        if (vec[c] % p != 0) return false;
    return true;
}

// Every k-dimensional subspace of F_p^n, one echelon representative each.
std::vector<Subspace> enumerate_subspaces(long n, long k, int p) {
    std::vector<Subspace> out;
    if (k < 0 || k > n || n > kMaxDim) return out;
    if (k == 0) {
        Subspace zero;
        zero.n = static_cast<int>(n);
        out.push_back(zero);
        return out;
    }
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
        // Free positions: (row i, col c) with c > pivot_i and c not a pivot.
        std::vector<std::pair<int, int>> free_pos;
        for (long i = 0; i < k; ++i)
            for (long c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c)
                if (std::find(pivots.begin(), pivots.end(), static_cast<int>(c)) == pivots.end())
                    free_pos.emplace_back(static_cast<int>(i), static_cast<int>(c));
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            Subspace s;
            s.dim = static_cast<int>(k);
            s.n = static_cast<int>(n);
            for (long i = 0; i < k; ++i) {
                s.pivots[static_cast<std::size_t>(i)] = static_cast<int8_t>(pivots[static_cast<std::size_t>(i)]);
                s.set(static_cast<int>(i), pivots[static_cast<std::size_t>(i)], 1);
            }
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                s.set(free_pos[t].first, free_pos[t].second, vals[t]);
            out.push_back(s);
            // odometer
            std::size_t t = 0;
            for (; t < vals.size(); ++t) {
                if (++vals[t] < p) break;
                vals[t] = 0;
            }
            if (t == vals.size()) break;
        }
        // next pivot combination
        long i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (long j = i + 1; j < k; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Enumerations are reused heavily across cells and primes.
const std::vector<Subspace>& cached_subspaces(long n, long k, int p) {
    static std::map<std::tuple<long, long, int>, std::vector<Subspace>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.try_emplace({n, k, p});
    if (fresh) it->second = enumerate_subspaces(n, k, p);
    return it->second;
}

// Gaussian elimination over F_p into an echelon row buffer; returns the rank
// (capped at cap+1 as an early exit).
int echelon_insert(int* basis, int8_t* pivots, int rank, int* vec, int n, int p, int cap) {
    for (int i = 0; i < rank; ++i) {
        const int f = vec[pivots[i]] % p;
        if (f == 0) continue;
        for (int c = 0; c < n; ++c) vec[c] = ((vec[c] - f * basis[i * kMaxDim + c]) % p + p) % p;
    }
    int lead = -1;
    for (int c = 0; c < n; ++c)
        if (vec[c] % p != 0) {
            lead = c;
            break;
        }
    if (lead < 0) return rank;
    if (rank > cap) return rank + 1;
    // normalize the leading entry to 1
    int inv = 1;
    const int lv = ((vec[lead] % p) + p) % p;
    for (int x = 1; x < p; ++x)
        if (lv * x % p == 1) {
            inv = x;
            break;
        }
    for (int c = 0; c < n; ++c) basis[rank * kMaxDim + c] = ((vec[c] % p) + p) % p * inv % p;
    pivots[rank] = static_cast<int8_t>(lead);
    // back-substitute to keep the basis reduced
    for (int i = 0; i < rank; ++i) {
        const int f = basis[i * kMaxDim + lead];
        if (f == 0) continue;
        for (int c = 0; c < n; ++c)
            basis[i * kMaxDim + c] =
                ((basis[i * kMaxDim + c] - f * basis[rank * kMaxDim + c]) % p + p) % p;
    }
    return rank + 1;
}

}  // namespace

unsigned long subrep_count(const KroneckerRep& rep, long e1, long e2) {
    if (e1 < 0 || e2 < 0 || e1 > rep.v1 || e2 > rep.v2) return 0;
    if (rep.v1 > kMaxDim || rep.v2 > kMaxDim)
        throw EnumerationTooLarge("subrep_count: dimension exceeds the enumeration limit");
    const mpz_class candidates = gauss_binomial(rep.v1, e1).eval(rep.p) *
                                 gauss_binomial(rep.v2, e2).eval(rep.p);
    if (candidates > 10000000)
        throw EnumerationTooLarge("subrep_count: candidate pair count exceeds 10^7");
    const int p = rep.p;
    const int n2 = static_cast<int>(rep.v2);
    const auto& u1s = cached_subspaces(rep.v1, e1, p);
    const auto& u2s = cached_subspaces(rep.v2, e2, p);
    unsigned long count = 0;
    for (const Subspace& u1 : u1s) {
        // Row-reduce the images of U1 under both arrows; any U2 works iff it
        // contains this span, which is impossible when the rank exceeds e2.
        int span[kMaxDim * kMaxDim];
        int8_t span_pivots[kMaxDim];
        int rank = 0;
        for (int i = 0; i < u1.dim && rank <= static_cast<int>(e2); ++i) {
            int img_a[kMaxDim], img_b[kMaxDim];
            for (int r = 0; r < n2; ++r) {
                long acc_a = 0, acc_b = 0;
                for (int c = 0; c < static_cast<int>(rep.v1); ++c) {
                    acc_a += static_cast<long>(rep.a_at(r, c)) * u1.at(i, c);
                    acc_b += static_cast<long>(rep.b_at(r, c)) * u1.at(i, c);
                }
                img_a[r] = static_cast<int>(acc_a % p);
                img_b[r] = static_cast<int>(acc_b % p);
            }
            rank = echelon_insert(span, span_pivots, rank, img_a, n2, p, static_cast<int>(e2));
            if (rank > static_cast<int>(e2)) break;
            rank = echelon_insert(span, span_pivots, rank, img_b, n2, p, static_cast<int>(e2));
        }
        if (rank > static_cast<int>(e2)) continue;
        for (const Subspace& u2 : u2s) {
            bool ok = true;
            for (int i = 0; i < rank && ok; ++i) {
                int buf[kMaxDim];
                for (int c = 0; c < n2; ++c) buf[c] = span[i * kMaxDim + c];
                ok = contains(u2, buf, p);
            }
            if (ok) ++count;
        }
    }
    return count;
}

namespace {

// Lagrange interpolation through (x_i, y_i) with exact rational arithmetic;
// the result must come out integral.
CountPoly interpolate(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // basis_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(0);
            for (std::size_t d = basis.size() - 1; d >= 1; --d)
                basis[d] = basis[d - 1] - mpq_class(xs[j]) * basis[d];
            basis[0] = -mpq_class(xs[j]) * basis[0];
            denom *= mpq_class(xs[i]) - mpq_class(xs[j]);
        }
        for (std::size_t d = 0; d < basis.size(); ++d)
            acc[d] += mpq_class(ys[i]) * basis[d] / denom;
    }
    CountPoly out;
    for (std::size_t d = 0; d < n; ++d) {
        mpq_class c = acc[d];
        c.canonicalize();
        if (c.get_den() != 1)
            throw InterpolationMismatch("gr_poly: interpolant is not integral");
        out += CountPoly::term(static_cast<long>(d), c.get_num());
    }
    return out;
}

}  // namespace

CountPoly gr_poly(ModuleKind kind, long n, std::pair<long, long> e,
                  const std::vector<int>& primes, RegularPoint lambda) {
    for (int p : primes)
        if (!is_prime(p)) throw std::domain_error("gr_poly: non-prime in prime list");
    const KroneckerRep probe = kronecker_module(kind, n, lambda, primes.empty() ? 2 : primes[0]);
    const auto [e1, e2] = e;
    if (e1 < 0 || e2 < 0 || e1 > probe.v1 || e2 > probe.v2) return CountPoly{};
    const long dim = e1 * (probe.v1 - e1) + e2 * (probe.v2 - e2) - 2 * e1 * (probe.v2 - e2);
    const std::size_t points = static_cast<std::size_t>(std::max(dim, 0L)) + 1;
    if (primes.size() < points)
        throw std::invalid_argument("gr_poly: not enough primes for the degree bound");
    std::vector<long> xs;
    std::vector<mpz_class> ys;
    for (std::size_t i = 0; i < points; ++i) {
        const KroneckerRep rep = kronecker_module(kind, n, lambda, primes[i]);
        xs.push_back(primes[i]);
        ys.push_back(subrep_count(rep, e1, e2));
    }
    const CountPoly poly = interpolate(xs, ys);
    if (points < primes.size()) {
        // One spare prime serves as the consistency check.
        const KroneckerRep rep = kronecker_module(kind, n, lambda, primes[points]);
        if (poly.eval(primes[points]) != mpz_class(subrep_count(rep, e1, e2)))
            throw InterpolationMismatch("gr_poly: consistency check failed at the spare prime");
    }
    return poly;
}

CountPoly szanto_count(long n, long a, long b) {
    if (n < 1) throw std::domain_error("szanto_count: n must be >= 1");
    if (a < 0 || b < 0 || a > n || b > n) return CountPoly{};
    return gauss_binomial(n - a, n - b) * gauss_binomial(b, a);
}

long d_exponent(std::pair<long, long> e, std::pair<long, long> v) {
    const auto [e1, e2] = e;
    const auto [v1, v2] = v;
    return 2 * e1 * (v1 - e1) - 2 * (2 * e1 - e2) * (v2 - e2);
}

TorusElem cc_element(std::pair<long, long> v,
                     const std::map<std::pair<long, long>, CountPoly>& counts) {
    const auto [v1, v2] = v;
    TorusElem r;
    for (long e1 = 0; e1 <= v1; ++e1)
        for (long e2 = 0; e2 <= v2; ++e2) {
            auto it = counts.find({e1, e2});
            if (it == counts.end() || it->second.is_zero()) continue;
            const long d = d_exponent({e1, e2}, v);
            const LaurentQ coeff = subst_w(it->second) * LaurentQ::v_pow(-d);
            r += TorusElem::term({-v1 + 2 * v2 - 2 * e2, 2 * e1 - v2}, coeff);
        }
    return r;
}

TorusElem cc_from_counting(long m, const std::vector<int>& primes) {
    const auto v = module_dim(m);
    const ModuleKind kind = m <= 0 ? ModuleKind::Preprojective : ModuleKind::Preinjective;
    const long n = m <= 0 ? 1 - m : m - 2;
    std::map<std::pair<long, long>, CountPoly> counts;
    for (long e1 = 0; e1 <= v.first; ++e1)
        for (long e2 = 0; e2 <= v.second; ++e2)
            counts[{e1, e2}] = gr_poly(kind, n, {e1, e2}, primes);
    return cc_element(v, counts);
}

}  // namespace kronq
