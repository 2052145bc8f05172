#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpfourier/errors.hpp"
#include "zpfourier/field.hpp"
#include "zpfourier/fourier.hpp"
#include "zpfourier/progressions.hpp"

namespace zpf {

// Everything the support-size inequalities talk about, for one function:
// the function, its transform, both supports, and the zero set Z of the
// transform (the complement of its support).
struct SupportProfile {
    Signal f;
    Spectrum f_hat;
    std::vector<std::uint32_t> s;        // support of f
    std::uint64_t m = 0;                 // |s|
    std::vector<std::uint32_t> supp_hat; // support of f_hat
    SubsetZp z;                          // complement of supp_hat
    std::uint64_t p = 0;
};

// Errors: zero_function (the inequalities require f != 0), length_mismatch.
SupportProfile profile(const FourierContext& ctx, const Signal& f);

struct ClassicalResult {
    bool ok = false;    // |supp f| * |supp f_hat| >= p
    bool tight = false; // equality; over Z/p possible only for m = 1 or |supp f_hat| = 1
};

ClassicalResult check_classical(const SupportProfile& pr);

// |supp f| + |supp f_hat| >= p. Can legitimately fail over a finite field;
// a false result is a finding, not an error.
bool check_strong(const SupportProfile& pr);

// |supp f_hat| >= p - r, where r is an AP-free extremal result for the
// profile's (p, m). Errors: mismatched_parameters.
bool check_theorem(const SupportProfile& pr, const ApFreeResult& r);

// The zero set of f_hat contains no m-term arithmetic progression.
bool check_zero_set_apfree(const SupportProfile& pr);

enum class RProvenance {
    exact,   // search proved optimality
    assumed, // budget ran out; r is only a lower bound
};

struct VerificationReport {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t spectrum_support = 0;
    bool classical_ok = false;
    bool classical_tight = false;
    bool strong_ok = false;
    bool theorem_ok = false;
    bool zero_set_apfree = false;
    std::uint64_t r_used = 0;
    RProvenance r_provenance = RProvenance::assumed;
};

// Runs all four checks. Throws HardFailure when a check that is
// mathematically guaranteed fails: the product bound, zero-set AP-freeness,
// or the spectrum-support bound with a proven r. A failed additive bound is
// recorded in the report and never throws.
VerificationReport run_checks(const SupportProfile& pr, const ApFreeResult& r);

enum class ScanMode {
    exhaustive,
    random,
};

struct ScanOptions {
    ScanMode mode = ScanMode::exhaustive;
    std::uint64_t seed = 0;    // random mode
    std::uint64_t samples = 0; // random mode
    std::uint64_t cap = 10'000'000;
    unsigned threads = 1;
    std::uint64_t max_stored_findings = 1000;
    std::optional<ApFreeResult> r; // computed via exact_r when absent
    RmOptions rm_options{};
};

// A function violating the additive bound, kept with full data so it can be
// re-verified later.
struct StrongFinding {
    std::vector<Fe> values;
    std::uint64_t support_size = 0;
    std::uint64_t spectrum_support = 0;
};

struct ScanResult {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    ScanMode mode = ScanMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t min_spectrum_support = 0;
    Signal witness; // attains the minimum; lexicographically least value array
    std::uint64_t instances_checked = 0;
    std::uint64_t skipped_vectors = 0; // projective representatives with a zero inside the support
    std::uint64_t supports_enumerated = 0;
    std::uint64_t strong_failures_total = 0;
    std::vector<StrongFinding> strong_findings; // at most max_stored_findings, lex order
    std::uint64_t r_used = 0;
    RProvenance r_provenance = RProvenance::assumed;
};

// Minimum spectrum support over functions with |supp f| = m, plus all four
// checks on every instance. Exhaustive mode iterates every size-m support
// and every coefficient vector up to a nonzero scalar (first in-support
// coordinate normalized to 1; vectors with a zero inside the support belong
// to a smaller m and are skipped but counted). Random mode draws supports
// and nonzero coefficients from a seeded generator; results are identical
// for any thread count. Errors: cap_exceeded (exhaustive mode),
// bad_argument, mismatched_parameters (supplied r for the wrong p or m).
ScanResult extremal_scan(const FourierContext& ctx, std::uint64_t m, const ScanOptions& opts = {});

} // namespace zpf
