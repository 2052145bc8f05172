#include "zpfourier/fourier.hpp"

#include <algorithm>

namespace zpf {

FourierContext::FourierContext(std::uint64_t p, Field field, std::optional<Fe> omega_override)
    : p_(p), field_(std::move(field)) {
    if (!is_prime(p_)) fail(Errc::not_prime, "transform length " + std::to_string(p_) + " is not prime");
    if ((field_.order() - 1) % p_ != 0)
        fail(Errc::order_not_divisible,
             std::to_string(p_) + " does not divide q-1 = " + std::to_string(field_.order() - 1));
    Fe w;
    if (omega_override) {
        w = *omega_override;
        if (!field_.is_canonical(w) || w.v == 0 || w == field_.one() ||
            field_.pow(w, static_cast<std::int64_t>(p_)) != field_.one())
            fail(Errc::bad_root_override, "override element does not have order exactly " + std::to_string(p_));
    } else {
        w = field_.principal_root(p_);
    }
    p_inv_ = field_.inv(field_.embed(p_));
    table_.resize(p_);
    table_[0] = field_.one();
    for (std::uint64_t i = 1; i < p_; ++i) table_[i] = field_.mul(table_[i - 1], w);
}

bool FourierContext::rader_inner_transform_available() const noexcept {
    return p_ >= 2 && (field_.order() - 1) % (p_ - 1) == 0;
}

namespace {

void require_length(const FourierContext& ctx, std::size_t n) {
    if (n != ctx.p())
        fail(Errc::length_mismatch,
             "vector has length " + std::to_string(n) + ", context expects " + std::to_string(ctx.p()));
}

} // namespace

Spectrum forward(const FourierContext& ctx, const Signal& f) {
    require_length(ctx, f.values.size());
    const Field& F = ctx.field();
    const std::uint64_t p = ctx.p();
    Spectrum out;
    out.values.resize(p);
    for (std::uint64_t t = 0; t < p; ++t) {
        Fe acc = F.zero();
        for (std::uint64_t z = 0; z < p; ++z)
            acc = F.add(acc, F.mul(f.values[z], ctx.omega_pow(t * z)));
        out.values[t] = F.mul(ctx.p_inverse(), acc);
    }
    return out;
}

Signal inverse(const FourierContext& ctx, const Spectrum& s) {
    require_length(ctx, s.values.size());
    const Field& F = ctx.field();
    const std::uint64_t p = ctx.p();
    Signal out;
    out.values.resize(p);
    for (std::uint64_t z = 0; z < p; ++z) {
        Fe acc = F.zero();
        for (std::uint64_t t = 0; t < p; ++t)
            acc = F.add(acc, F.mul(s.values[t], ctx.omega_pow(p - t * z % p)));
        out.values[z] = acc;
    }
    return out;
}

Signal character(const FourierContext& ctx, std::uint64_t t) {
    if (t >= ctx.p()) fail(Errc::index_out_of_range, "character index " + std::to_string(t));
    Signal out;
    out.values.resize(ctx.p());
    for (std::uint64_t z = 0; z < ctx.p(); ++z) out.values[z] = ctx.omega_pow(t * z);
    return out;
}

std::vector<std::uint32_t> support(std::span<const Fe> values) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i].v != 0) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
    if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t f : factors) {
            std::uint64_t e = (p - 1) / f, r = 1, b = g;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw HardFailure("no primitive root mod " + std::to_string(p));
}

std::vector<Fe> cyclic_convolution(const Field& field, std::span<const Fe> a, std::span<const Fe> b) {
    if (a.size() != b.size()) fail(Errc::length_mismatch, "convolution operands differ in length");
    const std::size_t n = a.size();
    std::vector<Fe> out(n, field.zero());
    for (std::size_t i = 0; i < n; ++i) {
        Fe acc = field.zero();
        for (std::size_t j = 0; j < n; ++j) acc = field.add(acc, field.mul(a[j], b[(i + n - j) % n]));
        out[i] = acc;
    }
    return out;
}

namespace {

// Recursive mixed-radix transform, X[k] = sum_j x[j] root^(jk), where root
// has order exactly n = |x|. Splits off the smallest prime factor each level
// and falls back to the naive sum at prime length.
std::vector<Fe> inner_dft(const Field& F, const std::vector<Fe>& x, Fe root) {
    const std::size_t n = x.size();
    if (n == 1) return x;
    std::size_t r = n;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            r = d;
            break;
        }
    std::vector<Fe> rootpow(n);
    rootpow[0] = F.one();
    for (std::size_t i = 1; i < n; ++i) rootpow[i] = F.mul(rootpow[i - 1], root);
    if (r == n) { // prime length: naive
        std::vector<Fe> out(n, F.zero());
        for (std::size_t k = 0; k < n; ++k) {
            Fe acc = F.zero();
            for (std::size_t j = 0; j < n; ++j) acc = F.add(acc, F.mul(x[j], rootpow[j * k % n]));
            out[k] = acc;
        }
        return out;
    }
    const std::size_t s = n / r;
    Fe root_r = rootpow[r]; // order s
    std::vector<std::vector<Fe>> sub(r);
    for (std::size_t t = 0; t < r; ++t) {
        std::vector<Fe> part(s);
        for (std::size_t q = 0; q < s; ++q) part[q] = x[q * r + t];
        sub[t] = inner_dft(F, part, root_r);
    }
    std::vector<Fe> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Fe acc = F.zero();
        for (std::size_t t = 0; t < r; ++t) acc = F.add(acc, F.mul(rootpow[t * k % n], sub[t][k % s]));
        out[k] = acc;
    }
    return out;
}

} // namespace

std::vector<Fe> cyclic_convolution_ntt(const Field& field, std::span<const Fe> a, std::span<const Fe> b) {
    if (a.size() != b.size()) fail(Errc::length_mismatch, "convolution operands differ in length");
    const std::size_t n = a.size();
    if (n == 0) return {};
    if ((field.order() - 1) % n != 0)
        fail(Errc::order_not_divisible, "inner transform needs n | q-1");
    Fe root = field.pow(field.generator(), static_cast<std::int64_t>((field.order() - 1) / n));
    Fe root_inv = field.inv(root);
    std::vector<Fe> A = inner_dft(field, std::vector<Fe>(a.begin(), a.end()), root);
    std::vector<Fe> B = inner_dft(field, std::vector<Fe>(b.begin(), b.end()), root);
    for (std::size_t i = 0; i < n; ++i) A[i] = field.mul(A[i], B[i]);
    std::vector<Fe> c = inner_dft(field, A, root_inv);
    Fe n_inv = field.inv(field.embed(n));
    for (Fe& v : c) v = field.mul(v, n_inv);
    return c;
}

Spectrum forward_rader(const FourierContext& ctx, const Signal& f) {
    require_length(ctx, f.values.size());
    const Field& F = ctx.field();
    const std::uint64_t p = ctx.p();
    if (p <= 3) return forward(ctx, f); // nothing to permute at this size

    const std::uint64_t g = least_primitive_root(p);
    const std::size_t n = p - 1;
    // gpow[i] = g^i mod p walks every nonzero residue once
    std::vector<std::uint64_t> gpow(n);
    gpow[0] = 1;
    for (std::size_t i = 1; i < n; ++i) gpow[i] = gpow[i - 1] * g % p;

    std::vector<Fe> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = f.values[gpow[i]];
        v[i] = ctx.omega_pow(gpow[i]);
    }
    // The nonzero block is the correlation w[a] = sum_c u[c] v[(a+c) mod n];
    // as a convolution it is rev(u) * v with rev(u)[c] = u[(n-c) mod n].
    std::vector<Fe> w;
    if (ctx.rader_inner_transform_available()) {
        std::vector<Fe> ur(n);
        for (std::size_t c = 0; c < n; ++c) ur[c] = u[(n - c) % n];
        w = cyclic_convolution_ntt(F, ur, v);
    } else {
        w.assign(n, F.zero());
        for (std::size_t a = 0; a < n; ++a) {
            Fe acc = F.zero();
            for (std::size_t c = 0; c < n; ++c) acc = F.add(acc, F.mul(u[c], v[(a + c) % n]));
            w[a] = acc;
        }
    }

    Fe total = F.zero();
    for (Fe x : f.values) total = F.add(total, x);

    Spectrum out;
    out.values.resize(p);
    out.values[0] = F.mul(ctx.p_inverse(), total);
    for (std::size_t a = 0; a < n; ++a)
        out.values[gpow[a]] = F.mul(ctx.p_inverse(), F.add(f.values[0], w[a]));
    return out;
}

} // namespace zpf
