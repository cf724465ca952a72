#include "kronq/cluster.hpp"

#include <map>
#include <mutex>

namespace kronq {

namespace {

struct VarCache {
    std::map<long, TorusElem> table;
    std::mutex mu;
    VarCache() {
        table.emplace(1, TorusElem::basis({1, 0}));
        table.emplace(2, TorusElem::basis({0, 1}));
    }
};

VarCache& cache() {
    static VarCache c;
    return c;
}

TorusElem exchange_rhs(const TorusElem& middle) {
    return (middle * middle).scaled(LaurentQ::v_pow(2)) + TorusElem{1};
}

}  // namespace

TorusElem xvar(long m) {
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (auto it = c.table.find(m); it != c.table.end()) return it->second;
    if (m >= 3) {
        for (long i = c.table.rbegin()->first + 1; i <= m; ++i) {
            // X_{i-2} X_i = q X_{i-1}^2 + 1
            c.table.emplace(i, left_divide(exchange_rhs(c.table.at(i - 1)), c.table.at(i - 2)));
        }
    } else {
        for (long i = c.table.begin()->first - 1; i >= m; --i) {
            // X_i X_{i+2} = q X_{i+1}^2 + 1
            c.table.emplace(i, right_divide(exchange_rhs(c.table.at(i + 1)), c.table.at(i + 2)));
        }
    }
    return c.table.at(m);
}

TorusElem xvar_closed(long m) {
    if (m == 1 || m == 2) return xvar(m);
    TorusElem r;
    if (m >= 3) {
        const long n = m - 3;
        r += TorusElem::basis({-n - 1, n + 2});
        for (long p = 0; p <= n; ++p)
            for (long s = 0; p + s <= n; ++s)
                r += TorusElem::term({2 * p - n - 1, 2 * s - n},
                                     bracket_binomial(n - s, p, 2) * bracket_binomial(n + 1 - p, s, 2));
    } else {
        const long n = -m;
        r += TorusElem::basis({n + 2, -n - 1});
        for (long p = 0; p <= n; ++p)
            for (long s = 0; p + s <= n; ++s)
                r += TorusElem::term({2 * s - n, 2 * p - n - 1},
                                     bracket_binomial(n - s, p, 2) * bracket_binomial(n + 1 - p, s, 2));
    }
    return r;
}

const TorusElem& xdelta() {
    static const TorusElem z = TorusElem::basis({-1, 1}) + TorusElem::basis({1, -1}) +
                               TorusElem::basis({-1, -1});
    return z;
}

std::pair<long, long> module_dim(long m) {
    if (m == 1 || m == 2) throw std::domain_error("module_dim: no module for the initial cluster");
    if (m <= 0) return {-m, -m + 1};
    return {m - 2, m - 3};
}

ExpVec min_exp_xvar(long m) {
    if (m == 1) return {1, 0};
    if (m == 2) return {0, 1};
    auto [d1, d2] = module_dim(m);
    return {-d1, -d2};
}

}  // namespace kronq
