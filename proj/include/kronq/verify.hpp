#pragma once

#include <string>
#include <vector>

#include "kronq/torus.hpp"

namespace kronq {

struct VerifyFailure {
    std::string case_id;
    std::string detail;
};

struct VerifyReport {
    VerifyReport() = default;
    explicit VerifyReport(std::string suite_name) : suite(std::move(suite_name)) {}

    std::string suite;
    long cases = 0;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
    void absorb(const VerifyReport& other);
};

struct UnknownSuite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bounds for the verification suites; the defaults match the shipped
/// acceptance ranges and finish in well under two minutes.
struct VerifyOptions {
    long rec_lo = -10;
    long rec_hi = 13;
    std::vector<long> cc_indices = {-3, -2, -1, 0, 3, 4, 5, 6};
    std::vector<int> cc_primes = {2, 3, 5, 7, 11};
    long szanto_max_n = 3;
    std::vector<int> szanto_primes = {2, 3, 5};
    long regular_max_n = 8;
    long series_max_n = 8;    // z_n, s_n index range
    long qbinom_max_n = 8;
    long products_max_m = 4;  // gap parameter in the product identities
    long positivity_mono_m = 4;
    long positivity_mono_deg = 4;
    long positivity_diag_n = 6;
    long positivity_lo = -5;
    long positivity_hi = 6;
    long roundtrip_per_family = 500;
    unsigned rng_seed = 20240811;
};

// One function per acceptance area; run_verify aggregates them into the
// named CLI suites.
VerifyReport verify_closed_vs_rec(const VerifyOptions& opt = {});
VerifyReport verify_worked_expansions();
VerifyReport verify_cc_theorem(const VerifyOptions& opt = {});
VerifyReport verify_szanto(const VerifyOptions& opt = {});
VerifyReport verify_regular_series(const VerifyOptions& opt = {});
VerifyReport verify_products(const VerifyOptions& opt = {});
VerifyReport verify_roundtrip(const VerifyOptions& opt = {});
VerifyReport verify_positivity(const VerifyOptions& opt = {});
VerifyReport verify_bar_invariance(const VerifyOptions& opt = {});
VerifyReport verify_mutation(const VerifyOptions& opt = {});
VerifyReport verify_qbinom(const VerifyOptions& opt = {});

const std::vector<std::string>& verify_suite_names();

/// suite is one of closed-vs-rec, cc-theorem, szanto, prop-products,
/// bar-invariance, positivity, bases-roundtrip, mutation, qbinom-identities,
/// all. Throws UnknownSuite otherwise.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opt = {});

}  // namespace kronq
