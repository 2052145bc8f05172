#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "zpfourier/field.hpp"
#include "zpfourier/fourier.hpp"
#include "zpfourier/minors.hpp"
#include "zpfourier/progressions.hpp"

using namespace zpf;

namespace {

// Cofactor expansion along the first row; an independent determinant route
// for cross-checking the elimination code on small matrices.
Fe cofactor_det(const Field& f, const FqMatrix& a) {
    if (a.rows == 1) return a.at(0, 0);
    Fe acc = f.zero();
    for (std::size_t j = 0; j < a.cols; ++j) {
        FqMatrix sub(a.rows - 1, a.cols - 1);
        for (std::size_t r = 1; r < a.rows; ++r)
            for (std::size_t c = 0, w = 0; c < a.cols; ++c)
                if (c != j) sub.at(r - 1, w++) = a.at(r, c);
        Fe term = f.mul(a.at(0, j), cofactor_det(f, sub));
        acc = j % 2 ? f.sub(acc, term) : f.add(acc, term);
    }
    return acc;
}

FqMatrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    FqMatrix a(n, n);
    for (Fe& x : a.data) x = Fe{dist(rng)};
    return a;
}

std::vector<std::uint32_t> next_combination_or_empty(std::vector<std::uint32_t> c, std::uint32_t n) {
    const std::size_t m = c.size();
    std::size_t i = m;
    while (i > 0) {
        --i;
        if (c[i] < n - m + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
            return c;
        }
    }
    return {};
}

Field f8() { return Field(2, 3, {1, 1, 0, 1}); }

} // namespace

TEST_SUITE("minors") {

TEST_CASE("minor construction from index lists") {
    FourierContext c3(3, Field(7));
    FqMatrix one = build_minor(c3, MinorIndex{{0}, {0}});
    CHECK(one.rows == 1);
    CHECK(one.at(0, 0) == Fe{1});

    FourierContext c5(5, Field(11));
    CHECK(c5.omega() == Fe{4});
    FqMatrix a = build_minor(c5, MinorIndex{{0, 1, 2}, {0, 1, 2}});
    CHECK(a.data == std::vector<Fe>{Fe{1}, Fe{1}, Fe{1}, Fe{1}, Fe{4}, Fe{5}, Fe{1}, Fe{5}, Fe{3}});

    // Row index 0 gives a row of ones regardless of the columns.
    FqMatrix b = build_minor(c5, MinorIndex{{0, 3}, {2, 4}});
    CHECK(b.at(0, 0) == Fe{1});
    CHECK(b.at(0, 1) == Fe{1});

    CHECK_THROWS_AS(build_minor(c5, MinorIndex{{0, 1}, {0, 1, 2}}), Error);
    CHECK_THROWS_AS(build_minor(c5, MinorIndex{{0, 0}, {0, 1}}), Error);
    CHECK_THROWS_AS(build_minor(c5, MinorIndex{{}, {}}), Error);
    CHECK_THROWS_AS(build_minor(c5, MinorIndex{{0, 5}, {0, 1}}), Error);
}

TEST_CASE("rank and determinant by elimination") {
    Field f7(7);
    FqMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Fe{1};
    RankDet rd = rank_det(f7, id);
    CHECK(rd.rank == 3);
    CHECK(rd.det == Fe{1});

    // Frozen: the (p=5, F_11) minor on rows/cols {0,1,2} has determinant 1.
    FourierContext c5(5, Field(11));
    RankDet m = rank_det(Field(11), build_minor(c5, MinorIndex{{0, 1, 2}, {0, 1, 2}}));
    CHECK(m.rank == 3);
    CHECK(m.det == Fe{1});

    FqMatrix rep(2, 2);
    rep.at(0, 0) = rep.at(1, 0) = Fe{3};
    rep.at(0, 1) = rep.at(1, 1) = Fe{5};
    RankDet r2 = rank_det(f7, rep);
    CHECK(r2.rank == 1);
    CHECK(r2.det == Fe{0});

    FqMatrix wide(2, 3);
    CHECK_THROWS_AS(rank_det(f7, wide), Error);
}

TEST_CASE("elimination determinant matches cofactor expansion") {
    std::mt19937_64 rng(21);
    for (const Field& f : {Field(7), f8(), Field(13)}) {
        for (std::size_t n = 1; n <= 4; ++n)
            for (int i = 0; i < 40; ++i) {
                FqMatrix a = random_matrix(f, n, rng);
                RankDet rd = rank_det(f, a);
                CHECK(rd.det == cofactor_det(f, a));
                CHECK((rd.rank == n) == (rd.det != Fe{0}));
            }
    }
}

TEST_CASE("kernel vector present exactly when singular, and verified") {
    std::mt19937_64 rng(23);
    for (const Field& f : {Field(7), Field(13), f8()}) {
        int singular_seen = 0;
        for (int i = 0; i < 200; ++i) {
            std::size_t n = 1 + i % 4;
            FqMatrix a = random_matrix(f, n, rng);
            RankDet rd = rank_det(f, a);
            auto v = kernel_vector(f, a);
            if (rd.rank == n) {
                CHECK_FALSE(v.has_value());
                continue;
            }
            ++singular_seen;
            REQUIRE(v.has_value());
            bool nonzero = false;
            for (Fe x : *v) nonzero = nonzero || x != Fe{0};
            CHECK(nonzero);
            for (std::size_t r = 0; r < n; ++r) {
                Fe acc = f.zero();
                for (std::size_t c = 0; c < n; ++c) acc = f.add(acc, f.mul(a.at(r, c), (*v)[c]));
                CHECK(acc == Fe{0});
            }
        }
        CHECK(singular_seen > 0);
    }
}

TEST_CASE("closed-form determinant for progression rows") {
    FourierContext c5(5, Field(11));
    const Field& f = c5.field();

    // m = 1: the empty difference product leaves omega^(a k).
    CHECK(vandermonde_det(c5, ApSpec{2, 1, 1}, {3}) == c5.omega_pow(2 * 3));

    // Hand value: rows 0,1,2 (a=0, b=1), cols {0,1,2}, omega = 4 in F_11.
    // Nodes x_j = omega^(k_j) = 1, 4, 5; product of (x_i - x_j) over i < j:
    // (1-4)(1-5)(4-5) = (-3)(-4)(-1) = -12 = 10 mod 11.
    Fe v = vandermonde_det(c5, ApSpec{0, 1, 3}, {0, 1, 2});
    CHECK(v == Fe{10});

    // Against elimination: with rows listed in progression order the two
    // determinants differ by (-1)^(m(m-1)/2), here -1.
    RankDet rd = rank_det(f, build_minor(c5, MinorIndex{{0, 1, 2}, {0, 1, 2}}));
    CHECK(v == f.mul(f.neg(f.one()), rd.det));

    CHECK_THROWS_AS(vandermonde_det(c5, ApSpec{0, 0, 2}, {0, 1}), Error);
    CHECK_THROWS_AS(vandermonde_det(c5, ApSpec{0, 1, 2}, {0, 1, 2}), Error);
    CHECK_THROWS_AS(vandermonde_det(c5, ApSpec{0, 1, 2}, {1, 1}), Error);
    CHECK_THROWS_AS(vandermonde_det(c5, ApSpec{0, 1, 6}, {0, 1, 2, 3, 4, 0}), Error);
}

TEST_CASE("progression-row minors are nondegenerate and match the closed form") {
    struct Case {
        std::uint64_t p, q;
    };
    for (Case pq : {Case{5, 11}, Case{7, 29}}) {
        FourierContext ctx(pq.p, Field(pq.q));
        const Field& f = ctx.field();
        for (std::uint64_t m : {2, 3}) {
            Fe sign = (m * (m - 1) / 2) % 2 ? f.neg(f.one()) : f.one();
            std::vector<std::uint32_t> cols(m);
            for (std::uint64_t i = 0; i < m; ++i) cols[i] = static_cast<std::uint32_t>(i);
            while (!cols.empty()) {
                for (std::uint64_t b = 1; b < pq.p; ++b)
                    for (std::uint64_t a = 0; a < pq.p; ++a) {
                        std::vector<std::uint32_t> rows(m);
                        for (std::uint64_t i = 0; i < m; ++i)
                            rows[i] = static_cast<std::uint32_t>((a + i * b) % pq.p);
                        RankDet rd = rank_det(f, build_minor(ctx, MinorIndex{rows, cols}));
                        CHECK(rd.rank == m);
                        CHECK(rd.det != Fe{0});
                        CHECK(vandermonde_det(ctx, ApSpec{a, b, m}, cols) == f.mul(sign, rd.det));
                    }
                cols = next_combination_or_empty(cols, static_cast<std::uint32_t>(pq.p));
            }
        }
    }
}

TEST_CASE("rank is symmetric under swapping rows and columns") {
    FourierContext ctx(11, Field(23));
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<std::uint32_t> pick(0, 10);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::uint32_t> rows, cols;
        while (rows.size() < 3) {
            std::uint32_t v = pick(rng);
            if (std::find(rows.begin(), rows.end(), v) == rows.end()) rows.push_back(v);
        }
        while (cols.size() < 3) {
            std::uint32_t v = pick(rng);
            if (std::find(cols.begin(), cols.end(), v) == cols.end()) cols.push_back(v);
        }
        RankDet ab = rank_det(ctx.field(), build_minor(ctx, MinorIndex{rows, cols}));
        RankDet ba = rank_det(ctx.field(), build_minor(ctx, MinorIndex{cols, rows}));
        CHECK(ab.rank == ba.rank);
    }
}

TEST_CASE("degenerate minor search certifies its findings") {
    // Over F_8 with p = 7 the quadratic-residue rows {1,2,4} give a
    // circulant whose row sum is omega + omega^2 + omega^4 = 0, so (1,1,1)
    // lies in the kernel. The set {1,2,4} is not a progression mod 7.
    FourierContext ctx(7, f8());
    const Field& f = ctx.field();

    RankDet qr = rank_det(f, build_minor(ctx, MinorIndex{{1, 2, 4}, {1, 2, 4}}));
    CHECK(qr.det == Fe{0});
    CHECK(qr.rank < 3);

    MinorSearchResult res = degenerate_minor_search(ctx, 3);
    CHECK(res.exhaustive);
    CHECK(res.pairs_examined == 35 * 35);
    REQUIRE(!res.reports.empty());

    bool found_qr = false;
    for (const MinorReport& rep : res.reports) {
        CHECK(rep.is_degenerate);
        CHECK(rep.rank < 3);
        FqMatrix a = build_minor(ctx, rep.index);
        CHECK(rank_det(f, a).det == Fe{0});
        CHECK(rep.det == Fe{0});
        REQUIRE(rep.kernel.has_value());
        for (std::size_t r = 0; r < 3; ++r) {
            Fe acc = f.zero();
            for (std::size_t c = 0; c < 3; ++c) acc = f.add(acc, f.mul(a.at(r, c), (*rep.kernel)[c]));
            CHECK(acc == Fe{0});
        }
        CHECK_FALSE(contains_ap(SubsetZp::from_elements(7, rep.index.rows), 3).has_value());
        CHECK_FALSE(contains_ap(SubsetZp::from_elements(7, rep.index.cols), 3).has_value());
        if (rep.index.rows == std::vector<std::uint32_t>{1, 2, 4} &&
            rep.index.cols == std::vector<std::uint32_t>{1, 2, 4})
            found_qr = true;
    }
    CHECK(found_qr);

    // Reports are sorted and unique.
    for (std::size_t i = 1; i < res.reports.size(); ++i) {
        const MinorIndex& a = res.reports[i - 1].index;
        const MinorIndex& b = res.reports[i].index;
        CHECK((a.rows < b.rows || (a.rows == b.rows && a.cols < b.cols)));
    }
}

TEST_CASE("1x1 search finds nothing: powers of omega are never zero") {
    FourierContext ctx(3, Field(7));
    MinorSearchResult res = degenerate_minor_search(ctx, 1);
    CHECK(res.reports.empty());
    CHECK(res.exhaustive);
    CHECK(res.pairs_examined == 9);
}

TEST_CASE("sampled search is deterministic in the seed") {
    FourierContext ctx(11, Field(23));
    MinorSearchOptions opts;
    opts.budget = 500;
    opts.seed = 77;
    opts.enumeration_threshold = 1000; // C(11,3)^2 = 27225 pairs, force sampling
    MinorSearchResult a = degenerate_minor_search(ctx, 3, opts);
    MinorSearchResult b = degenerate_minor_search(ctx, 3, opts);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.pairs_examined == 500);
    CHECK(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i)
        CHECK(a.reports[i].index == b.reports[i].index);

    opts.seed = 78;
    MinorSearchResult c = degenerate_minor_search(ctx, 3, opts);
    CHECK(c.pairs_examined == 500); // different stream, same budget accounting
}

} // TEST_SUITE("minors")
