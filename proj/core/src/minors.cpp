#include "zpfourier/minors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace zpf {

namespace {

void validate_index_list(const std::vector<std::uint32_t>& idx, std::uint64_t p, const char* what) {
    if (idx.empty()) fail(Errc::size_mismatch, std::string(what) + " index list is empty");
    std::vector<std::uint32_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::size_mismatch, std::string(what) + " index list has duplicates");
    if (sorted.back() >= p)
        fail(Errc::index_out_of_range,
             std::string(what) + " index " + std::to_string(sorted.back()) + " outside Z/" + std::to_string(p));
}

} // namespace

FqMatrix build_minor(const FourierContext& ctx, const MinorIndex& idx) {
    if (idx.rows.size() != idx.cols.size())
        fail(Errc::size_mismatch, "minor needs equally many rows and columns");
    validate_index_list(idx.rows, ctx.p(), "row");
    validate_index_list(idx.cols, ctx.p(), "column");
    const std::size_t m = idx.rows.size();
    FqMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.at(i, j) = ctx.omega_pow(std::uint64_t{idx.rows[i]} * idx.cols[j]);
    return a;
}

RankDet rank_det(const Field& field, FqMatrix a) {
    if (a.rows != a.cols) fail(Errc::not_square, "rank_det needs a square matrix");
    const std::size_t n = a.rows;
    std::uint64_t rank = 0;
    Fe det = field.one();
    bool negate = false;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = rank; r < n; ++r)
            if (a.at(r, col).v != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) continue;
        if (pivot != rank) {
            for (std::size_t c = col; c < n; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
            negate = !negate;
        }
        det = field.mul(det, a.at(rank, col));
        const Fe inv = field.inv(a.at(rank, col));
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (a.at(r, col).v == 0) continue;
            const Fe factor = field.mul(a.at(r, col), inv);
            for (std::size_t c = col; c < n; ++c)
                a.at(r, c) = field.sub(a.at(r, c), field.mul(factor, a.at(rank, c)));
        }
        ++rank;
    }
    if (rank < n) det = field.zero();
    else if (negate) det = field.neg(det);
    return RankDet{rank, det};
}

std::optional<std::vector<Fe>> kernel_vector(const Field& field, FqMatrix matrix) {
    if (matrix.rows != matrix.cols) fail(Errc::not_square, "kernel_vector needs a square matrix");
    const std::size_t n = matrix.rows;
    const FqMatrix orig = matrix;
    FqMatrix& a = matrix;

    // Reduced row echelon form with every pivot scaled to 1.
    std::vector<std::size_t> pivot_row(n, n); // per column; n = free column
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = r; i < n; ++i)
            if (a.at(i, col).v != 0) {
                pivot = i;
                break;
            }
        if (pivot == n) continue;
        if (pivot != r)
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(r, c));
        const Fe inv = field.inv(a.at(r, col));
        for (std::size_t c = 0; c < n; ++c) a.at(r, c) = field.mul(a.at(r, c), inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a.at(i, col).v == 0) continue;
            const Fe factor = a.at(i, col);
            for (std::size_t c = 0; c < n; ++c)
                a.at(i, c) = field.sub(a.at(i, c), field.mul(factor, a.at(r, c)));
        }
        pivot_row[col] = r;
        ++r;
    }
    if (r == n) return std::nullopt;

    std::size_t free_col = 0;
    while (pivot_row[free_col] != n) ++free_col;
    std::vector<Fe> v(n, field.zero());
    v[free_col] = field.one();
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row[col] != n) v[col] = field.neg(a.at(pivot_row[col], free_col));

    for (std::size_t i = 0; i < n; ++i) {
        Fe acc = field.zero();
        for (std::size_t j = 0; j < n; ++j) acc = field.add(acc, field.mul(orig.at(i, j), v[j]));
        if (acc.v != 0) throw HardFailure("kernel vector fails to annihilate the matrix");
    }
    return v;
}

Fe vandermonde_det(const FourierContext& ctx, const ApSpec& ap_rows,
                   const std::vector<std::uint32_t>& cols) {
    if (ap_rows.b == 0) fail(Errc::zero_difference, "progression difference must be nonzero");
    const std::uint64_t p = ctx.p();
    if (ap_rows.a >= p || ap_rows.b >= p)
        fail(Errc::bad_argument, "progression start and difference must lie in [0, p)");
    if (ap_rows.m > p)
        fail(Errc::length_exceeds_group, "progression length exceeds group order");
    if (ap_rows.m != cols.size())
        fail(Errc::size_mismatch, "progression length and column count differ");
    validate_index_list(cols, p, "column");

    const Field& F = ctx.field();
    const std::size_t m = cols.size();
    std::vector<Fe> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = ctx.omega_pow(ap_rows.b * std::uint64_t{cols[i]});
    Fe out = F.one();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) out = F.mul(out, F.sub(x[i], x[j]));
    for (std::size_t i = 0; i < m; ++i)
        out = F.mul(out, ctx.omega_pow(ap_rows.a * std::uint64_t{cols[i]}));
    return out;
}

namespace {

// min(C(n, m), clamp)
std::uint64_t comb_clamped(std::uint64_t n, std::uint64_t m, std::uint64_t clamp) {
    if (m > n) return 0;
    if (m > n - m) m = n - m;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        if (c > clamp) return clamp + 1;
        // c * (n - m + i) cannot overflow while c <= clamp and operands are desk scale
        c = c * (n - m + i) / i;
    }
    return std::min(c, clamp + 1);
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint64_t n) {
    const std::size_t m = c.size();
    std::size_t i = m;
    while (i-- > 0) {
        if (c[i] < n - m + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::uint64_t p, std::uint64_t m) {
    std::set<std::uint32_t> chosen;
    while (chosen.size() < m) chosen.insert(static_cast<std::uint32_t>(rng() % p));
    return {chosen.begin(), chosen.end()};
}

void certify_not_progression(const std::vector<std::uint32_t>& idx, std::uint64_t p, std::uint64_t m,
                             const char* what) {
    if (auto ap = contains_ap(SubsetZp::from_elements(p, idx), m)) {
        std::string msg = "degenerate minor with ";
        msg += what;
        msg += " forming the progression a=" + std::to_string(ap->a) + " b=" + std::to_string(ap->b) +
               " m=" + std::to_string(ap->m) + "; progression-indexed minors must have full rank";
        throw HardFailure(msg);
    }
}

} // namespace

MinorSearchResult degenerate_minor_search(const FourierContext& ctx, std::uint64_t m,
                                          const MinorSearchOptions& opts) {
    const std::uint64_t p = ctx.p();
    if (m == 0 || m > p) fail(Errc::bad_argument, "minor size must lie in [1, p]");
    const Field& F = ctx.field();

    const std::uint64_t subsets = comb_clamped(p, m, 2'000'000'000);
    const bool exhaustive =
        subsets <= 1'000'000 && subsets * subsets <= opts.enumeration_threshold;

    MinorSearchResult result;
    result.exhaustive = exhaustive;

    auto examine = [&](const std::vector<std::uint32_t>& L, const std::vector<std::uint32_t>& K) {
        ++result.pairs_examined;
        MinorIndex idx{L, K};
        FqMatrix a = build_minor(ctx, idx);
        RankDet rd = rank_det(F, a);
        if (rd.rank == m) return;
        auto kv = kernel_vector(F, a);
        if (!kv) throw HardFailure("rank-deficient minor with no kernel vector");
        certify_not_progression(L, p, m, "rows");
        certify_not_progression(K, p, m, "columns");
        MinorReport rep;
        rep.index = std::move(idx);
        rep.rank = rd.rank;
        rep.det = rd.det;
        rep.is_degenerate = true;
        rep.kernel = std::move(kv);
        rep.row_scale_omitted = ctx.p_inverse();
        result.reports.push_back(std::move(rep));
    };

    if (exhaustive) {
        std::vector<std::uint32_t> L(m);
        for (std::size_t i = 0; i < m; ++i) L[i] = static_cast<std::uint32_t>(i);
        do {
            std::vector<std::uint32_t> K(m);
            for (std::size_t i = 0; i < m; ++i) K[i] = static_cast<std::uint32_t>(i);
            do {
                examine(L, K);
            } while (next_combination(K, p));
        } while (next_combination(L, p));
    } else {
        std::mt19937_64 rng(opts.seed);
        for (std::uint64_t i = 0; i < opts.budget; ++i)
            examine(random_subset(rng, p, m), random_subset(rng, p, m));
    }

    auto key = [](const MinorReport& r) { return std::tie(r.index.rows, r.index.cols); };
    std::sort(result.reports.begin(), result.reports.end(),
              [&](const MinorReport& a, const MinorReport& b) { return key(a) < key(b); });
    result.reports.erase(std::unique(result.reports.begin(), result.reports.end(),
                                     [&](const MinorReport& a, const MinorReport& b) {
                                         return a.index == b.index;
                                     }),
                         result.reports.end());
    return result;
}

} // namespace zpf
