#include <doctest.h>

#include <cstdint>
#include <vector>

#include "zpfourier/field.hpp"
#include "zpfourier/fourier.hpp"
#include "zpfourier/progressions.hpp"
#include "zpfourier/uncertainty.hpp"

using namespace zpf;

namespace {

Signal sig(std::initializer_list<std::uint64_t> vals) {
    Signal f;
    for (std::uint64_t v : vals) f.values.push_back(Fe{v});
    return f;
}

} // namespace

TEST_SUITE("uncertainty") {

TEST_CASE("profile collects both supports and the spectrum zero set") {
    FourierContext c(3, Field(7));
    SupportProfile pr = profile(c, sig({0, 1, 0}));
    CHECK(pr.p == 3);
    CHECK(pr.m == 1);
    CHECK(pr.s == std::vector<std::uint32_t>{1});
    CHECK(pr.supp_hat == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(pr.z.size() == 0);
    CHECK(pr.f_hat.values == std::vector<Fe>{Fe{5}, Fe{3}, Fe{6}});

    SupportProfile con = profile(c, sig({1, 1, 1}));
    CHECK(con.m == 3);
    CHECK(con.supp_hat == std::vector<std::uint32_t>{0});
    CHECK(con.z.elements() == std::vector<std::uint32_t>{1, 2});

    CHECK_THROWS_AS(profile(c, sig({0, 0, 0})), Error);
    CHECK_THROWS_AS(profile(c, sig({1, 0})), Error);
}

TEST_CASE("product bound holds on every profile, with tightness flagged") {
    FourierContext c(3, Field(7));
    ClassicalResult delta = check_classical(profile(c, sig({0, 1, 0})));
    CHECK(delta.ok);
    CHECK(delta.tight); // 1 * 3 = 3
    ClassicalResult con = check_classical(profile(c, sig({1, 1, 1})));
    CHECK(con.ok);
    CHECK(con.tight); // 3 * 1 = 3

    FourierContext c7(7, Field(29));
    for (std::uint64_t v = 1; v < 29; ++v) {
        SupportProfile pr = profile(c7, sig({1, v, 0, 3, 0, 0, 0}));
        ClassicalResult r = check_classical(pr);
        CHECK(r.ok);
        CHECK(pr.m * pr.supp_hat.size() >= 7);
    }
}

TEST_CASE("additive bound evaluation is faithful arithmetic, never a throw") {
    FourierContext c(5, Field(11));
    for (std::uint64_t a = 0; a < 11; ++a)
        for (std::uint64_t b = 1; b < 11; ++b) {
            Signal f = sig({a, 0, b, 0, 1});
            SupportProfile pr = profile(c, f);
            CHECK(check_strong(pr) == (pr.m + pr.supp_hat.size() >= pr.p));
        }
}

TEST_CASE("spectrum-size bound against extremal subset results") {
    FourierContext c(3, Field(7));
    SupportProfile delta = profile(c, sig({0, 1, 0}));
    CHECK(check_theorem(delta, exact_r(3, 1))); // 3 >= 3 - 0
    SupportProfile con = profile(c, sig({1, 1, 1}));
    CHECK(check_theorem(con, exact_r(3, 3))); // 1 >= 3 - 2

    CHECK_THROWS_AS(check_theorem(delta, exact_r(3, 2)), Error); // r for the wrong m
    CHECK_THROWS_AS(check_theorem(delta, exact_r(5, 1)), Error); // r for the wrong p
}

TEST_CASE("spectrum zero set never contains a progression of the support size") {
    FourierContext c(7, Field(29));
    for (std::uint64_t v = 1; v < 29; ++v) {
        CHECK(check_zero_set_apfree(profile(c, sig({1, v, 0, 0, 2, 0, 0}))));
        CHECK(check_zero_set_apfree(profile(c, sig({v, 0, 0, 0, 0, 0, 0}))));
    }
}

TEST_CASE("run_checks fills the report and distinguishes proven from assumed r") {
    FourierContext c(7, Field(29));
    SupportProfile pr = profile(c, sig({1, 1, 1, 1, 1, 1, 1})); // m = 7, spectrum = delta
    VerificationReport rep = run_checks(pr, exact_r(7, 7));
    CHECK(rep.p == 7);
    CHECK(rep.m == 7);
    CHECK(rep.spectrum_support == 1);
    CHECK(rep.classical_ok);
    CHECK(rep.classical_tight);
    CHECK(rep.strong_ok); // 7 + 1 >= 7
    CHECK(rep.theorem_ok); // 1 >= 7 - 6
    CHECK(rep.zero_set_apfree);
    CHECK(rep.r_used == 6);
    CHECK(rep.r_provenance == RProvenance::exact);

    // An unproven lower bound for r must never escalate to a hard failure,
    // only to theorem_ok = false.
    ApFreeResult weak;
    weak.p = 7;
    weak.m = 7;
    weak.r = 0;
    weak.witness = SubsetZp(7);
    weak.proven_optimal = false;
    VerificationReport soft = run_checks(pr, weak);
    CHECK_FALSE(soft.theorem_ok); // 1 < 7 - 0
    CHECK(soft.r_provenance == RProvenance::assumed);

    // The same untrue r presented as proven is a hard failure.
    weak.proven_optimal = true;
    CHECK_THROWS_AS(run_checks(pr, weak), HardFailure);
}

TEST_CASE("exhaustive scan over (p=3, F_7): frozen counters and witnesses") {
    FourierContext c(3, Field(7));

    ScanResult full = extremal_scan(c, 3);
    CHECK(full.p == 3);
    CHECK(full.m == 3);
    CHECK(full.mode == ScanMode::exhaustive);
    CHECK(full.min_spectrum_support == 1);
    // Minimizers are the scaled characters; the representative with first
    // coordinate 1 that sorts least is the constant function.
    CHECK(full.witness.values == std::vector<Fe>{Fe{1}, Fe{1}, Fe{1}});
    CHECK(full.supports_enumerated == 1);
    CHECK(full.instances_checked == 36); // (1, a, b) with a, b nonzero
    // P^2(F_7) has (7^3 - 1)/6 = 57 points; all but the 36 zero-free ones
    // carry a zero inside the support and are skipped.
    CHECK(full.skipped_vectors == 21);
    CHECK(full.strong_failures_total == 0);
    CHECK(full.r_used == 2);
    CHECK(full.r_provenance == RProvenance::exact);

    ScanResult single = extremal_scan(c, 1);
    CHECK(single.min_spectrum_support == 3); // deltas spread over everything
    // All three deltas tie; the least value array puts the support last.
    CHECK(single.witness.values == std::vector<Fe>{Fe{0}, Fe{0}, Fe{1}});
    CHECK(single.supports_enumerated == 3);
    CHECK(single.instances_checked == 3);
    CHECK(single.skipped_vectors == 0);

    // The witness re-profiles to the reported minimum.
    SupportProfile wpr = profile(c, full.witness);
    CHECK(wpr.supp_hat.size() == full.min_spectrum_support);
}

TEST_CASE("exhaustive scan over (p=7, F_29) satisfies the spectrum-size bound") {
    FourierContext c(7, Field(29));
    ScanOptions opts;
    opts.threads = 2;
    ScanResult res = extremal_scan(c, 3, opts);
    CHECK(res.supports_enumerated == 35);
    CHECK(res.instances_checked == 35 * 28 * 28);
    // Projective representatives per support: (29^3 - 1) / 28 = 871 total,
    // of which 28^2 have full support; the rest are counted as skipped.
    CHECK(res.skipped_vectors == 35 * (871 - 28 * 28));
    ApFreeResult r3 = exact_r(7, 3);
    CHECK(res.r_used == r3.r);
    CHECK(res.min_spectrum_support >= 7 - r3.r);
    SupportProfile wpr = profile(c, res.witness);
    CHECK(wpr.supp_hat.size() == res.min_spectrum_support);
}

TEST_CASE("scan minimum is invariant under the choice of root") {
    Field f(29);
    FourierContext base(7, f);
    FourierContext alt(7, f, f.mul(base.omega(), base.omega()));
    ScanResult a = extremal_scan(base, 3);
    ScanResult b = extremal_scan(alt, 3);
    CHECK(a.min_spectrum_support == b.min_spectrum_support);
    CHECK(a.witness.values == b.witness.values);
    CHECK(a.strong_failures_total == b.strong_failures_total);
    CHECK(a.instances_checked == b.instances_checked);
}

TEST_CASE("scan results do not depend on the worker count") {
    Field f(29);
    FourierContext c(7, f);
    ScanOptions one;
    one.threads = 1;
    ScanOptions four;
    four.threads = 4;
    ScanResult a = extremal_scan(c, 2, one);
    ScanResult b = extremal_scan(c, 2, four);
    CHECK(a.min_spectrum_support == b.min_spectrum_support);
    CHECK(a.witness.values == b.witness.values);
    CHECK(a.instances_checked == b.instances_checked);
    CHECK(a.skipped_vectors == b.skipped_vectors);
    CHECK(a.strong_failures_total == b.strong_failures_total);
    CHECK(a.strong_findings.size() == b.strong_findings.size());
    for (std::size_t i = 0; i < a.strong_findings.size(); ++i)
        CHECK(a.strong_findings[i].values == b.strong_findings[i].values);

    ScanOptions rnd1;
    rnd1.mode = ScanMode::random;
    rnd1.samples = 400;
    rnd1.seed = 5;
    rnd1.threads = 1;
    ScanOptions rnd3 = rnd1;
    rnd3.threads = 3;
    ScanResult ra = extremal_scan(c, 4, rnd1);
    ScanResult rb = extremal_scan(c, 4, rnd3);
    CHECK(ra.min_spectrum_support == rb.min_spectrum_support);
    CHECK(ra.witness.values == rb.witness.values);
    CHECK(ra.instances_checked == 400);
    CHECK(rb.instances_checked == 400);
    CHECK(ra.skipped_vectors == 0);
}

TEST_CASE("random mode reproduces itself from the seed") {
    FourierContext c(11, Field(23));
    ScanOptions opts;
    opts.mode = ScanMode::random;
    opts.samples = 300;
    opts.seed = 42;
    ScanResult a = extremal_scan(c, 4, opts);
    ScanResult b = extremal_scan(c, 4, opts);
    CHECK(a.min_spectrum_support == b.min_spectrum_support);
    CHECK(a.witness.values == b.witness.values);
    CHECK(a.seed == 42);
    CHECK(a.samples == 300);
    CHECK(a.mode == ScanMode::random);

    opts.seed = 43;
    ScanResult other = extremal_scan(c, 4, opts);
    CHECK(other.instances_checked == 300); // a different stream, same volume
}

TEST_CASE("every sampled instance keeps its declared support size") {
    FourierContext c(11, Field(23));
    ScanOptions opts;
    opts.mode = ScanMode::random;
    opts.samples = 64;
    opts.seed = 9;
    ScanResult res = extremal_scan(c, 3, opts);
    SupportProfile wpr = profile(c, res.witness);
    CHECK(wpr.m == 3);
    CHECK(wpr.supp_hat.size() == res.min_spectrum_support);
}

TEST_CASE("scan validation") {
    FourierContext c(7, Field(29));
    CHECK_THROWS_AS(extremal_scan(c, 0), Error);
    CHECK_THROWS_AS(extremal_scan(c, 8), Error);

    ScanOptions tiny;
    tiny.cap = 100;
    CHECK_THROWS_AS(extremal_scan(c, 3, tiny), Error); // needs ~30k instances

    ScanOptions rnd;
    rnd.mode = ScanMode::random;
    rnd.samples = 0;
    CHECK_THROWS_AS(extremal_scan(c, 3, rnd), Error);

    ScanOptions wrong_r;
    wrong_r.r = exact_r(7, 2);
    CHECK_THROWS_AS(extremal_scan(c, 3, wrong_r), Error);

    ScanOptions right_r;
    right_r.r = exact_r(7, 3);
    ScanResult res = extremal_scan(c, 3, right_r);
    CHECK(res.r_used == right_r.r->r);
    CHECK(res.r_provenance == RProvenance::exact);
}

} // TEST_SUITE("uncertainty")
