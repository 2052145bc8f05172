#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zpfourier/field.hpp"

namespace zpf {

// f : Z/p -> F_q, indexed by z in [0, p).
struct Signal {
    std::vector<Fe> values;
};

// f^ : Z/p -> F_q, indexed by t in [0, p).
struct Spectrum {
    std::vector<Fe> values;
};

// Everything needed to transform length-p signals over F_q: the field, a
// principal p-th root of unity omega, the inverse of p in F_q, and the
// precomputed power table omega^0..omega^(p-1).
//
// Convention: the forward transform carries the 1/p factor,
//   f^(t) = p^-1 * sum_z f(z) omega^(tz),
// and the inverse carries none, f(z) = sum_t f^(t) omega^(-tz).
//
// Immutable after construction and cheap to copy (the table has p entries).
class FourierContext {
public:
    // Requires p prime and p | q-1. omega_override, when given, must have
    // order exactly p; by default omega is the canonical principal root.
    FourierContext(std::uint64_t p, Field field, std::optional<Fe> omega_override = std::nullopt);

    std::uint64_t p() const noexcept { return p_; }
    const Field& field() const noexcept { return field_; }
    Fe omega() const noexcept { return table_[1 % p_]; }
    Fe p_inverse() const noexcept { return p_inv_; }

    // omega^e for any exponent (reduced mod p).
    Fe omega_pow(std::uint64_t e) const noexcept { return table_[e % p_]; }

    // True when the Rader convolution can run over an inner length-(p-1)
    // transform, i.e. (p-1) | (q-1).
    bool rader_inner_transform_available() const noexcept;

private:
    std::uint64_t p_;
    Field field_;
    Fe p_inv_;
    std::vector<Fe> table_;
};

// Reference O(p^2) evaluation of the transform matrix. Exact.
Spectrum forward(const FourierContext& ctx, const Signal& f);

// Exact inverse; inverse(forward(f)) == f for every f.
Signal inverse(const FourierContext& ctx, const Spectrum& s);

// Rader's prime-length algorithm: a generator of (Z/p)* permutes the
// nontrivial block of the matrix into a length-(p-1) cyclic convolution,
// evaluated directly or through an inner mixed-radix transform when
// (p-1) | (q-1). Agrees with forward() exactly on every input.
Spectrum forward_rader(const FourierContext& ctx, const Signal& f);

// The character chi_t : z -> omega^(tz) as a signal. Requires t < p.
Signal character(const FourierContext& ctx, std::uint64_t t);

// Sorted indices of the nonzero entries.
std::vector<std::uint32_t> support(std::span<const Fe> values);
inline std::vector<std::uint32_t> support(const Signal& f) { return support(std::span(f.values)); }
inline std::vector<std::uint32_t> support(const Spectrum& s) { return support(std::span(s.values)); }

// Cyclic convolution c[i] = sum_j a[j] b[(i-j) mod n] over the field,
// evaluated directly in O(n^2). Exposed for tests and the Rader path.
std::vector<Fe> cyclic_convolution(const Field& field, std::span<const Fe> a, std::span<const Fe> b);

// Same result via an inner transform of length n; requires n | q-1.
std::vector<Fe> cyclic_convolution_ntt(const Field& field, std::span<const Fe> a, std::span<const Fe> b);

// Smallest generator of (Z/p)* for prime p.
std::uint64_t least_primitive_root(std::uint64_t p);

} // namespace zpf
