#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpfourier/errors.hpp"
#include "zpfourier/field.hpp"
#include "zpfourier/fourier.hpp"
#include "zpfourier/progressions.hpp"

namespace zpf {

// Dense row-major matrix over a finite field. Entries are not validated
// here; operations taking a matrix expect canonical elements.
struct FqMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Fe> data;

    FqMatrix() = default;
    FqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Fe& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Fe& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Row and column index lists selecting a square submatrix of the transform
// matrix. Both lists are ordered; the order fixes the sign of determinants.
struct MinorIndex {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> cols;

    friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

struct MinorReport {
    MinorIndex index;
    std::uint64_t rank = 0;
    Fe det{}; // determinant of the unscaled matrix [omega^{l k}]
    bool is_degenerate = false;
    std::optional<std::vector<Fe>> kernel; // right kernel vector, present iff degenerate
    // The transform matrix carries a global 1/p factor that build_minor
    // leaves out; it scales the determinant by p^{-m} and cannot change the
    // rank or whether the determinant vanishes.
    Fe row_scale_omitted{};
};

struct RankDet {
    std::uint64_t rank = 0;
    Fe det{};
};

// Submatrix with entry (i, j) = omega^{rows[i] * cols[j]}, without the
// global 1/p factor. Errors: size_mismatch (empty, unequal sizes,
// duplicates), index_out_of_range.
FqMatrix build_minor(const FourierContext& ctx, const MinorIndex& idx);

// Exact rank and determinant by Gaussian elimination, pivot = first nonzero
// entry in column order. Errors: not_square.
RankDet rank_det(const Field& field, FqMatrix matrix);

// A nonzero right kernel vector when the matrix is singular, nullopt when it
// has full rank. The returned vector is re-checked against the matrix.
std::optional<std::vector<Fe>> kernel_vector(const Field& field, FqMatrix matrix);

// Closed-form determinant for a minor whose rows follow the progression
// a, a+b, ..., a+(m-1)b: the product over i < j of
// (omega^{b k_i} - omega^{b k_j}) times the product of omega^{a k_i}. With
// rows listed in progression order this equals (-1)^(m(m-1)/2) times the
// elimination determinant, and is nonzero because the omega^{b k_i} are
// distinct. Errors: zero_difference (b = 0), size_mismatch.
Fe vandermonde_det(const FourierContext& ctx, const ApSpec& ap_rows,
                   const std::vector<std::uint32_t>& cols);

struct MinorSearchOptions {
    std::uint64_t budget = 1'000'000;                // pairs sampled when not exhaustive
    std::uint64_t seed = 0;
    std::uint64_t enumeration_threshold = 1'000'000; // enumerate all pairs up to this count
};

struct MinorSearchResult {
    std::vector<MinorReport> reports; // degenerate minors, sorted lex by (rows, cols)
    std::uint64_t pairs_examined = 0;
    bool exhaustive = false;
};

// Searches m x m minors for degenerate ones. All C(p,m)^2 index pairs are
// enumerated when that count stays within the threshold; otherwise `budget`
// seeded random pairs are drawn. Every degenerate minor found is certified:
// kernel vector verified, and both index sets confirmed to not be
// arithmetic progressions (a degenerate minor on progression rows would
// contradict the full-rank theorem and raises HardFailure).
MinorSearchResult degenerate_minor_search(const FourierContext& ctx, std::uint64_t m,
                                          const MinorSearchOptions& opts = {});

} // namespace zpf
