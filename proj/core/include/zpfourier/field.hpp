#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zpfourier/errors.hpp"

namespace zpf {

// Element of a finite field, packed as a single machine word.
//
// For F_{l^k} an element with coefficients c_0 + c_1 x + ... + c_{k-1} x^{k-1}
// (c_i in [0, l)) is stored as the integer c_0 + c_1 l + ... + c_{k-1} l^{k-1}.
// Packing is a bijection [0, q) <-> coefficient tuples, so an element is
// canonical exactly when its value is below the field order, and the natural
// integer order on values is the canonical element order used for
// "smallest generator" (constant term least significant).
struct Fe {
    std::uint64_t v = 0;

    friend constexpr auto operator<=>(const Fe&, const Fe&) = default;
};

// Fields are desk scale: exact search and verification, not cryptography.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;
inline constexpr std::size_t kMaxFieldDegree = 20; // 2^20 caps l^k, so k <= 20

// Deterministic Miller-Rabin. The witness set {2,3,5,7,...,37} is known to be
// exact for all n < 3.3 * 10^24, which covers the full uint64 range.
bool is_prime(std::uint64_t n);

// Distinct prime factors, ascending, by trial division. Requires n <= 2^40.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Monic irreducible polynomial of degree k over F_l, found by seeded random
// search with a Rabin irreducibility test. Deterministic for a given seed.
// Returns k+1 coefficients, constant term first; the empty vector for k == 1.
std::vector<std::uint64_t> find_irreducible(std::uint64_t ell, std::uint64_t k,
                                            std::uint64_t seed = 0);

// Immutable description of F_q, q = l^k, together with exact arithmetic on
// packed elements. Construction validates that l is prime, that the modulus
// is monic of degree k and irreducible over F_l, and that q is in range.
// All operations are pure; a Field is safe to share across threads.
class Field {
public:
    // Prime field F_l.
    explicit Field(std::uint64_t ell);

    // Extension field F_{l^k} with an explicit monic modulus polynomial
    // (k+1 coefficients, constant term first). Pass an empty modulus with
    // k == 1 for the prime-field convention.
    Field(std::uint64_t ell, std::uint64_t k, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const noexcept { return ell_; }
    std::uint64_t degree() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }
    // k+1 coefficients, constant first; empty for degree 1.
    const std::vector<std::uint64_t>& modulus() const noexcept { return mod_; }
    // Distinct prime factors of q-1, ascending.
    const std::vector<std::uint64_t>& unit_group_factors() const noexcept { return qm1_factors_; }

    Fe zero() const noexcept { return Fe{0}; }
    Fe one() const noexcept { return Fe{1}; }

    // Image of the integer n in the prime subfield (n mod l).
    Fe embed(std::uint64_t n) const noexcept { return Fe{n % ell_}; }

    // Element from a packed value; rejects v >= q.
    Fe from_value(std::uint64_t v) const;

    // Element from coefficients, constant term first. Accepts up to k
    // coefficients, each below the characteristic.
    Fe from_coeffs(std::span<const std::uint64_t> coeffs) const;

    // Coefficients of an element, constant term first, exactly k entries.
    std::vector<std::uint64_t> coeffs(Fe x) const;

    bool is_canonical(Fe x) const noexcept { return x.v < q_; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const; // errors on zero
    Fe div(Fe a, Fe b) const;
    // Negative exponents invert the base (nonzero base required).
    Fe pow(Fe a, std::int64_t e) const;

    // Smallest n >= 1 with x^n = 1; divides q-1. Errors on zero.
    std::uint64_t multiplicative_order(Fe x) const;

    // The canonically smallest element of multiplicative order q-1.
    // Recomputed on each call; cache the result if used in a hot path.
    Fe generator() const;

    // omega = g^((q-1)/p) for the canonical generator g. Requires p | q-1.
    Fe principal_root(std::uint64_t p) const;

    // Human-readable form: a residue for prime fields, a polynomial in x
    // otherwise (e.g. "x^2+3x+1").
    std::string to_string(Fe x) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.ell_ == b.ell_ && a.k_ == b.k_ && a.mod_ == b.mod_;
    }

private:
    void validate_and_finish();
    void check(Fe x) const;

    std::uint64_t ell_ = 0;
    std::uint64_t k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> mod_;
    std::vector<std::uint64_t> qm1_factors_;
};

} // namespace zpf
