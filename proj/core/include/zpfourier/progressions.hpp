#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpfourier/errors.hpp"

namespace zpf {

// Arithmetic progression {a + kb mod p : 0 <= k < m} in Z/p. Progressions
// wrap around; for m <= p and b != 0 the m elements are automatically
// distinct because p is prime.
struct ApSpec {
    std::uint64_t a = 0; // start, in [0, p)
    std::uint64_t b = 1; // common difference, in [1, p)
    std::uint64_t m = 1; // length, >= 1

    friend bool operator==(const ApSpec&, const ApSpec&) = default;
};

// Subset of Z/p stored as a bitset.
class SubsetZp {
  public:
    SubsetZp() = default;
    explicit SubsetZp(std::uint64_t p);
    static SubsetZp from_elements(std::uint64_t p, const std::vector<std::uint32_t>& elems);

    std::uint64_t p() const noexcept { return p_; }
    bool test(std::uint64_t i) const;
    void set(std::uint64_t i);
    void reset(std::uint64_t i);
    std::uint64_t size() const noexcept;        // number of members
    std::vector<std::uint32_t> elements() const; // sorted ascending
    SubsetZp complement() const;

    friend bool operator==(const SubsetZp&, const SubsetZp&) = default;

  private:
    void check_index(std::uint64_t i) const;

    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> words_;
};

// The m-element subset {a + kb mod p}. Errors: length_exceeds_group when
// m > p, bad_argument for out-of-range a or b.
SubsetZp ap_elements(std::uint64_t p, const ApSpec& ap);

// Smallest (b, a) progression of length m lying inside s, or nullopt.
// Exhaustive O(p^2 m) scan; for m = 1 returns (least element, b = 1).
std::optional<ApSpec> contains_ap(const SubsetZp& s, std::uint64_t m);

struct RmOptions {
    std::uint64_t node_budget = 100'000'000;
};

// Result of an r_m(p) computation: the largest subset of Z/p containing no
// m-term arithmetic progression. proven_optimal is false only when the node
// budget ran out; the witness is then still a valid AP-free set of size r.
struct ApFreeResult {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t r = 0;
    SubsetZp witness;
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
};

// Branch-and-bound search. Short circuits: m = 1 -> 0, m = 2 -> 1,
// m > p -> p, m = p -> p-1. The witness is the lexicographically least
// maximum AP-free subset (on sorted element sequences).
ApFreeResult exact_r(std::uint64_t p, std::uint64_t m, const RmOptions& opts = {});

// Independent oracle: enumerate all 2^p subsets. Requires p <= 24.
ApFreeResult exact_r_exhaustive(std::uint64_t p, std::uint64_t m);

enum class LogBase {
    natural,
    base2,
};

// Evaluation of the upper bound r_m(p) <= p / (loglog p)^e with
// e = 2^(-2^(m+9)), carried out in the log2 domain because e underflows any
// fixed-precision representation for every m >= 1.
struct BoundReport {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    LogBase base = LogBase::natural;
    bool override_used = false;
    double exponent_log2 = 0; // log2(e); equals -(2^(m+9)) when not overridden
    double loglog_p = 0;      // log log p in the chosen base
    double bound = 0;         // direct evaluation p / (loglog p)^e
    double bound_log2 = 0;    // log2(p) - e * log2(loglog p)
    double deficit_log2 = 0;  // log2(p - bound); see gowers_bound for the two routes
    bool vacuous = false;     // bound >= p - 1 at this scale
};

// p need not be prime here; the evaluation is purely analytic. Errors:
// domain_too_small when loglog p <= 1 in the chosen base (p <= 15 for
// natural logs), bad_argument for m = 0, m > 1000, or a non-positive
// exponent override.
BoundReport gowers_bound(std::uint64_t p, std::uint64_t m,
                         std::optional<double> exponent_override = std::nullopt,
                         LogBase base = LogBase::natural);

} // namespace zpf
