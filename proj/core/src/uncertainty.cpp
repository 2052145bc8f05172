#include "zpfourier/uncertainty.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <thread>

namespace zpf {

SupportProfile profile(const FourierContext& ctx, const Signal& f) {
    SupportProfile pr;
    pr.p = ctx.p();
    pr.s = support(f);
    if (pr.s.empty()) fail(Errc::zero_function, "support checks require a nonzero function");
    pr.m = pr.s.size();
    pr.f = f;
    pr.f_hat = forward(ctx, f);
    pr.supp_hat = support(pr.f_hat);
    pr.z = SubsetZp::from_elements(pr.p, pr.supp_hat).complement();
    return pr;
}

ClassicalResult check_classical(const SupportProfile& pr) {
    const std::uint64_t product = pr.m * pr.supp_hat.size();
    return ClassicalResult{product >= pr.p, product == pr.p};
}

bool check_strong(const SupportProfile& pr) {
    return pr.m + pr.supp_hat.size() >= pr.p;
}

bool check_theorem(const SupportProfile& pr, const ApFreeResult& r) {
    if (r.p != pr.p || r.m != pr.m)
        fail(Errc::mismatched_parameters,
             "extremal result is for (p=" + std::to_string(r.p) + ", m=" + std::to_string(r.m) +
                 "), profile has (p=" + std::to_string(pr.p) + ", m=" + std::to_string(pr.m) + ")");
    return pr.supp_hat.size() + r.r >= pr.p;
}

bool check_zero_set_apfree(const SupportProfile& pr) {
    return !contains_ap(pr.z, pr.m).has_value();
}

namespace {

std::string values_str(const std::vector<Fe>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i].v);
    }
    return out + "]";
}

} // namespace

VerificationReport run_checks(const SupportProfile& pr, const ApFreeResult& r) {
    VerificationReport rep;
    rep.p = pr.p;
    rep.m = pr.m;
    rep.spectrum_support = pr.supp_hat.size();
    const ClassicalResult classical = check_classical(pr);
    rep.classical_ok = classical.ok;
    rep.classical_tight = classical.tight;
    rep.strong_ok = check_strong(pr);
    rep.theorem_ok = check_theorem(pr, r);
    rep.zero_set_apfree = check_zero_set_apfree(pr);
    rep.r_used = r.r;
    rep.r_provenance = r.proven_optimal ? RProvenance::exact : RProvenance::assumed;

    if (!rep.classical_ok)
        throw HardFailure("product bound violated: " + std::to_string(pr.m) + " * " +
                          std::to_string(rep.spectrum_support) + " < " + std::to_string(pr.p) +
                          " for f = " + values_str(pr.f.values));
    if (!rep.zero_set_apfree)
        throw HardFailure("transform zero set contains a progression of length " +
                          std::to_string(pr.m) + " for f = " + values_str(pr.f.values));
    if (!rep.theorem_ok && rep.r_provenance == RProvenance::exact)
        throw HardFailure("spectrum support " + std::to_string(rep.spectrum_support) + " < p - r = " +
                          std::to_string(pr.p - r.r) + " with proven r, for f = " + values_str(pr.f.values));
    return rep;
}

namespace {

bool lex_less(const std::vector<Fe>& a, const std::vector<Fe>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](Fe x, Fe y) { return x.v < y.v; });
}

// min(C(n, m), clamp + 1)
std::uint64_t comb_clamped(std::uint64_t n, std::uint64_t m, std::uint64_t clamp) {
    if (m > n) return 0;
    if (m > n - m) m = n - m;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        if (c > clamp) return clamp + 1;
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

struct Accum {
    std::uint64_t min_supp = UINT64_MAX;
    std::vector<Fe> witness;
    std::uint64_t instances = 0;
    std::uint64_t skipped = 0;
    std::uint64_t supports = 0;
    std::uint64_t strong_total = 0;
    std::vector<StrongFinding> findings;

    void trim_findings(std::uint64_t cap) {
        if (findings.size() <= cap) return;
        std::sort(findings.begin(), findings.end(),
                  [](const StrongFinding& a, const StrongFinding& b) { return lex_less(a.values, b.values); });
        findings.resize(cap);
    }
};

void process_instance(const FourierContext& ctx, const std::vector<Fe>& values,
                      const ApFreeResult& r, const ScanOptions& opts, Accum& acc) {
    Signal f;
    f.values = values;
    const SupportProfile pr = profile(ctx, f);
    const VerificationReport rep = run_checks(pr, r);
    ++acc.instances;
    if (!rep.strong_ok) {
        ++acc.strong_total;
        acc.findings.push_back(StrongFinding{values, pr.m, rep.spectrum_support});
        if (acc.findings.size() > 2 * opts.max_stored_findings) acc.trim_findings(opts.max_stored_findings);
    }
    const std::uint64_t supp = pr.supp_hat.size();
    if (supp < acc.min_supp || (supp == acc.min_supp && lex_less(values, acc.witness))) {
        acc.min_supp = supp;
        acc.witness = values;
    }
}

void exhaustive_worker(const FourierContext& ctx, std::uint64_t m, const ApFreeResult& r,
                       const ScanOptions& opts, unsigned worker, unsigned workers, Accum& acc) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t q = ctx.field().order();
    const Field& F = ctx.field();

    // Projective representatives whose first nonzero coordinate sits at
    // position j >= 1 all vanish somewhere inside the support; there are
    // q^(m-1-j) of them for each j, skipped in bulk.
    std::uint64_t bulk_skipped = 0;
    {
        std::uint64_t t = 1;
        for (std::uint64_t j = 1; j < m; ++j) {
            bulk_skipped += t;
            t *= q;
        }
    }

    std::vector<std::uint32_t> s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = static_cast<std::uint32_t>(i);
    std::uint64_t index = 0;
    std::vector<Fe> values(p, F.zero());
    std::vector<std::uint64_t> digits(m ? m - 1 : 0);
    do {
        if (index++ % workers != worker) continue;
        ++acc.supports;
        acc.skipped += bulk_skipped;
        std::fill(digits.begin(), digits.end(), 0);
        for (;;) {
            bool has_zero = false;
            for (std::uint64_t d : digits)
                if (d == 0) {
                    has_zero = true;
                    break;
                }
            if (has_zero) {
                ++acc.skipped;
            } else {
                std::fill(values.begin(), values.end(), F.zero());
                values[s[0]] = F.one();
                for (std::size_t i = 1; i < m; ++i) values[s[i]] = Fe{digits[i - 1]};
                process_instance(ctx, values, r, opts, acc);
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    } while (next_combination(s, p));
}

void random_worker(const FourierContext& ctx, std::uint64_t m, const ApFreeResult& r,
                   const ScanOptions& opts, unsigned worker, unsigned workers, Accum& acc) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t q = ctx.field().order();
    std::vector<Fe> values(p, ctx.field().zero());
    for (std::uint64_t i = worker; i < opts.samples; i += workers) {
        // one engine per sample index, so the draw stream is independent of
        // the worker layout
        std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
        std::set<std::uint32_t> chosen;
        while (chosen.size() < m) chosen.insert(static_cast<std::uint32_t>(rng() % p));
        std::fill(values.begin(), values.end(), ctx.field().zero());
        for (std::uint32_t z : chosen) values[z] = Fe{1 + rng() % (q - 1)};
        ++acc.supports;
        process_instance(ctx, values, r, opts, acc);
    }
}

} // namespace

ScanResult extremal_scan(const FourierContext& ctx, std::uint64_t m, const ScanOptions& opts) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t q = ctx.field().order();
    if (m == 0 || m > p) fail(Errc::bad_argument, "support size must lie in [1, p]");

    ApFreeResult r;
    if (opts.r) {
        if (opts.r->p != p || opts.r->m != m)
            fail(Errc::mismatched_parameters, "supplied extremal result is for different (p, m)");
        r = *opts.r;
    } else {
        r = exact_r(p, m, opts.rm_options);
    }

    if (opts.mode == ScanMode::exhaustive) {
        // projective vectors per support: 1 + q + ... + q^(m-1)
        unsigned __int128 proj = 0, term = 1;
        for (std::uint64_t i = 0; i < m; ++i) {
            proj += term;
            term *= q;
            if (proj > opts.cap) break;
        }
        const std::uint64_t subsets = comb_clamped(p, m, opts.cap);
        const unsigned __int128 total = proj * subsets;
        if (total > opts.cap)
            fail(Errc::cap_exceeded, "exhaustive scan needs more than " + std::to_string(opts.cap) +
                                         " projective instances");
    } else if (opts.samples == 0) {
        fail(Errc::bad_argument, "random mode needs a positive sample count");
    }

    const unsigned workers = std::max(1u, opts.threads);
    std::vector<Accum> accums(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                if (opts.mode == ScanMode::exhaustive)
                    exhaustive_worker(ctx, m, r, opts, w, workers, accums[w]);
                else
                    random_worker(ctx, m, r, opts, w, workers, accums[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    ScanResult res;
    res.p = p;
    res.m = m;
    res.mode = opts.mode;
    res.seed = opts.seed;
    res.samples = opts.mode == ScanMode::random ? opts.samples : 0;
    res.r_used = r.r;
    res.r_provenance = r.proven_optimal ? RProvenance::exact : RProvenance::assumed;
    std::uint64_t best = UINT64_MAX;
    std::vector<Fe> best_witness;
    for (Accum& acc : accums) {
        acc.trim_findings(opts.max_stored_findings);
        res.instances_checked += acc.instances;
        res.skipped_vectors += acc.skipped;
        res.supports_enumerated += acc.supports;
        res.strong_failures_total += acc.strong_total;
        if (acc.min_supp != UINT64_MAX &&
            (acc.min_supp < best || (acc.min_supp == best && lex_less(acc.witness, best_witness)))) {
            best = acc.min_supp;
            best_witness = acc.witness;
        }
        res.strong_findings.insert(res.strong_findings.end(),
                                   std::make_move_iterator(acc.findings.begin()),
                                   std::make_move_iterator(acc.findings.end()));
    }
    res.min_spectrum_support = best == UINT64_MAX ? 0 : best;
    res.witness.values = std::move(best_witness);
    std::sort(res.strong_findings.begin(), res.strong_findings.end(),
              [](const StrongFinding& a, const StrongFinding& b) { return lex_less(a.values, b.values); });
    if (res.strong_findings.size() > opts.max_stored_findings)
        res.strong_findings.resize(opts.max_stored_findings);
    return res;
}

} // namespace zpf
