#include "zpfourier/progressions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "zpfourier/field.hpp"

namespace zpf {

SubsetZp::SubsetZp(std::uint64_t p) : p_(p) {
    if (p < 2) fail(Errc::bad_argument, "subset modulus must be at least 2");
    words_.assign((p + 63) / 64, 0);
}

SubsetZp SubsetZp::from_elements(std::uint64_t p, const std::vector<std::uint32_t>& elems) {
    SubsetZp s(p);
    for (std::uint32_t e : elems) s.set(e);
    return s;
}

void SubsetZp::check_index(std::uint64_t i) const {
    if (i >= p_) fail(Errc::index_out_of_range, "element " + std::to_string(i) + " outside Z/" + std::to_string(p_));
}

bool SubsetZp::test(std::uint64_t i) const {
    check_index(i);
    return (words_[i / 64] >> (i % 64)) & 1;
}

void SubsetZp::set(std::uint64_t i) {
    check_index(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void SubsetZp::reset(std::uint64_t i) {
    check_index(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::uint64_t SubsetZp::size() const noexcept {
    std::uint64_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::vector<std::uint32_t> SubsetZp::elements() const {
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 0; i < p_; ++i)
        if ((words_[i / 64] >> (i % 64)) & 1) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

SubsetZp SubsetZp::complement() const {
    SubsetZp out(p_);
    for (std::uint64_t i = 0; i < p_; ++i)
        if (!((words_[i / 64] >> (i % 64)) & 1)) out.set(i);
    return out;
}

SubsetZp ap_elements(std::uint64_t p, const ApSpec& ap) {
    if (ap.m > p) fail(Errc::length_exceeds_group, "progression length " + std::to_string(ap.m) +
                                                       " exceeds group order " + std::to_string(p));
    if (ap.m == 0) fail(Errc::bad_argument, "progression length must be at least 1");
    if (ap.a >= p || ap.b == 0 || ap.b >= p)
        fail(Errc::bad_argument, "progression start must lie in [0, p) and difference in [1, p)");
    SubsetZp out(p);
    std::uint64_t x = ap.a;
    for (std::uint64_t k = 0; k < ap.m; ++k) {
        out.set(x);
        x += ap.b;
        if (x >= p) x -= p;
    }
    return out;
}

std::optional<ApSpec> contains_ap(const SubsetZp& s, std::uint64_t m) {
    if (m == 0) fail(Errc::bad_argument, "progression length must be at least 1");
    const std::uint64_t p = s.p();
    if (m > p || s.size() < m) return std::nullopt; // an m-term progression has m distinct residues
    for (std::uint64_t b = 1; b < p; ++b) {
        for (std::uint64_t a = 0; a < p; ++a) {
            bool inside = true;
            std::uint64_t x = a;
            for (std::uint64_t k = 0; k < m; ++k) {
                if (!s.test(x)) {
                    inside = false;
                    break;
                }
                x += b;
                if (x >= p) x -= p;
            }
            if (inside) return ApSpec{a, b, m};
        }
    }
    return std::nullopt;
}

namespace {

// True when cur + {e} still has no m-term progression. Only progressions
// through e need checking: for each difference b, count the run already in
// cur on both sides of e.
bool can_add(const std::vector<std::uint64_t>& bits, std::uint64_t p, std::uint64_t m, std::uint64_t e) {
    auto member = [&](std::uint64_t i) { return (bits[i / 64] >> (i % 64)) & 1; };
    for (std::uint64_t b = 1; b < p; ++b) {
        std::uint64_t run = 1;
        std::uint64_t x = e;
        for (std::uint64_t k = 1; k < m; ++k) {
            x = x >= b ? x - b : x + p - b;
            if (!member(x)) break;
            ++run;
        }
        x = e;
        for (std::uint64_t k = run; k < m; ++k) {
            x += b;
            if (x >= p) x -= p;
            if (!member(x)) break;
            ++run;
        }
        if (run >= m) return false;
    }
    return true;
}

struct RmSearch {
    std::uint64_t p, m, budget;
    std::vector<std::uint64_t> bits;
    std::vector<std::uint32_t> cur;
    std::uint64_t best = 0;
    std::vector<std::uint32_t> witness;
    std::uint64_t nodes = 0;
    bool aborted = false;

    // Depth-first over candidate elements in increasing order, include branch
    // first. That visits AP-free sets in lexicographic order of their sorted
    // element sequences, so the first set attaining the final best size is
    // the lexicographically least optimum. The prune discards branches that
    // cannot strictly beat the current best; a prefix of a strictly larger
    // set always survives it, so no optimum is lost.
    void dfs(std::uint64_t next) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (cur.size() + (p - next) <= best) return;
        if (can_add(bits, p, m, next)) {
            bits[next / 64] |= std::uint64_t{1} << (next % 64);
            cur.push_back(static_cast<std::uint32_t>(next));
            if (cur.size() > best) {
                best = cur.size();
                witness = cur;
            }
            if (next + 1 < p) dfs(next + 1);
            cur.pop_back();
            bits[next / 64] &= ~(std::uint64_t{1} << (next % 64));
        }
        if (next + 1 < p) dfs(next + 1);
    }
};

void validate_rm_args(std::uint64_t p, std::uint64_t m) {
    if (!is_prime(p)) fail(Errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
    if (m == 0) fail(Errc::bad_argument, "progression length must be at least 1");
}

// Handles the cases with closed-form answers; the witness in each is the
// lexicographically least optimum.
std::optional<ApFreeResult> rm_short_circuit(std::uint64_t p, std::uint64_t m) {
    ApFreeResult res;
    res.p = p;
    res.m = m;
    res.proven_optimal = true;
    res.witness = SubsetZp(p);
    if (m == 1) { // every point is a 1-term progression
        res.r = 0;
        return res;
    }
    if (m == 2) { // every pair of distinct points is a 2-term progression
        res.r = 1;
        res.witness.set(0);
        return res;
    }
    if (m > p) { // no m distinct residues exist
        res.r = p;
        for (std::uint64_t i = 0; i < p; ++i) res.witness.set(i);
        return res;
    }
    if (m == p) { // the only p-term progression is the whole group
        res.r = p - 1;
        for (std::uint64_t i = 0; i + 1 < p; ++i) res.witness.set(i);
        return res;
    }
    return std::nullopt;
}

} // namespace

ApFreeResult exact_r(std::uint64_t p, std::uint64_t m, const RmOptions& opts) {
    validate_rm_args(p, m);
    if (auto sc = rm_short_circuit(p, m)) return *sc;

    // A maximum AP-free set can be translated so it contains 0, and the
    // lexicographically least optimum necessarily does; fix 0 as a member.
    RmSearch search{p, m, opts.node_budget, std::vector<std::uint64_t>((p + 63) / 64, 0), {}, 0, {}, 0, false};
    search.bits[0] |= 1;
    search.cur.push_back(0);
    search.best = 1;
    search.witness = search.cur;
    search.dfs(1);

    ApFreeResult res;
    res.p = p;
    res.m = m;
    res.r = search.best;
    res.witness = SubsetZp::from_elements(p, search.witness);
    res.nodes_explored = search.nodes;
    res.proven_optimal = !search.aborted;
    return res;
}

ApFreeResult exact_r_exhaustive(std::uint64_t p, std::uint64_t m) {
    validate_rm_args(p, m);
    if (p > 24) fail(Errc::bad_argument, "exhaustive enumeration supports p <= 24");

    std::vector<std::uint64_t> ap_masks;
    if (m <= p) {
        for (std::uint64_t b = 1; b < p; ++b)
            for (std::uint64_t a = 0; a < p; ++a) {
                std::uint64_t mask = 0, x = a;
                for (std::uint64_t k = 0; k < m; ++k) {
                    mask |= std::uint64_t{1} << x;
                    x += b;
                    if (x >= p) x -= p;
                }
                ap_masks.push_back(mask);
            }
    }

    auto elements_of = [&](std::uint64_t mask) {
        std::vector<std::uint32_t> out;
        for (std::uint64_t i = 0; i < p; ++i)
            if ((mask >> i) & 1) out.push_back(static_cast<std::uint32_t>(i));
        return out;
    };

    std::uint64_t best = 0;
    std::uint64_t best_mask = 0;
    bool have = false;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << p); ++s) {
        auto pc = static_cast<std::uint64_t>(std::popcount(s));
        if (have && pc < best) continue;
        bool free = true;
        for (std::uint64_t mask : ap_masks)
            if ((s & mask) == mask) {
                free = false;
                break;
            }
        if (!free) continue;
        if (!have || pc > best) {
            best = pc;
            best_mask = s;
            have = true;
        } else if (pc == best) {
            auto a = elements_of(s), b = elements_of(best_mask);
            if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) best_mask = s;
        }
    }

    ApFreeResult res;
    res.p = p;
    res.m = m;
    res.r = best;
    res.witness = SubsetZp::from_elements(p, elements_of(best_mask));
    res.nodes_explored = std::uint64_t{1} << p;
    res.proven_optimal = true;
    return res;
}

BoundReport gowers_bound(std::uint64_t p, std::uint64_t m, std::optional<double> exponent_override,
                         LogBase base) {
    if (m == 0) fail(Errc::bad_argument, "progression length must be at least 1");
    if (m > 1000) fail(Errc::bad_argument, "2^(m+9) exceeds the double exponent range for m > 1000");
    if (exponent_override && !(*exponent_override > 0))
        fail(Errc::bad_argument, "exponent override must be positive");

    const double pd = static_cast<double>(p);
    const double L = base == LogBase::natural ? std::log(std::log(pd)) : std::log2(std::log2(pd));
    if (!(L > 1.0))
        fail(Errc::domain_too_small, "log log " + std::to_string(p) + " <= 1 in the configured base");
    const double log2p = std::log2(pd);

    BoundReport rep;
    rep.p = p;
    rep.m = m;
    rep.base = base;
    rep.loglog_p = L;

    if (exponent_override) {
        const double e = *exponent_override;
        rep.override_used = true;
        rep.exponent_log2 = std::log2(e);
        rep.bound = pd / std::pow(L, e);
        rep.bound_log2 = log2p - e * std::log2(L);
        rep.vacuous = rep.bound >= pd - 1.0;
        rep.deficit_log2 =
            rep.bound < pd ? std::log2(pd - rep.bound) : -std::numeric_limits<double>::infinity();
        return rep;
    }

    // e = 2^(-2^(m+9)) underflows to zero even as a subnormal once m >= 2, so
    // the bound itself collapses to p in any direct evaluation. The deficit
    // p - bound = p(1 - exp(-e ln L)) ~= p * e * ln L survives in log2 form:
    // log2(deficit) = log2 p - 2^(m+9) + log2(ln L). The inner ln stays
    // natural whatever base L itself uses; it comes from the series of exp.
    rep.override_used = false;
    rep.exponent_log2 = -std::ldexp(1.0, static_cast<int>(m) + 9);
    const double e = std::exp2(rep.exponent_log2);
    rep.bound_log2 = log2p - e * std::log2(L);
    rep.bound = pd * std::exp2(-e * std::log2(L));
    rep.deficit_log2 = log2p + rep.exponent_log2 + std::log2(std::log(L));
    rep.vacuous = rep.deficit_log2 <= 0.0;
    return rep;
}

} // namespace zpf
