#include "zpfourier/field.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace zpf {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::not_irreducible: return "NotIrreducible";
        case Errc::field_too_large: return "FieldTooLarge";
        case Errc::element_not_canonical: return "ElementNotCanonical";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::zero_element: return "ZeroElement";
        case Errc::order_not_divisible: return "OrderNotDivisible";
        case Errc::bad_root_override: return "BadRootOverride";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::zero_difference: return "ZeroDifference";
        case Errc::length_exceeds_group: return "LengthExceedsGroup";
        case Errc::domain_too_small: return "DomainTooSmall";
        case Errc::mismatched_parameters: return "MismatchedParameters";
        case Errc::zero_function: return "ZeroFunction";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::not_square: return "NotSquare";
        case Errc::bad_argument: return "BadArgument";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    if (n > (std::uint64_t{1} << 40))
        fail(Errc::field_too_large, "factorization by trial division limited to 2^40, got " + std::to_string(n));
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// -- dense polynomial helpers over F_l ---------------------------------------
//
// Coefficient vectors, constant term first, no trailing zeros. Only used for
// modulus validation and irreducible search, so clarity beats speed here.

namespace {

using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a mod m over F_l; m monic.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t ell) {
    poly_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (c != 0) {
            for (std::size_t j = 0; j < dm; ++j) {
                std::uint64_t t = (m[j] * c) % ell;
                a[shift + j] = (a[shift + j] + ell - t) % ell;
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t ell) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % ell;
    }
    return poly_mod(std::move(prod), m, ell);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t ell) {
    Poly r{1};
    base = poly_mod(std::move(base), m, ell);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, ell);
        base = poly_mulmod(base, base, m, ell);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t ell) {
    return powmod_u64(a, ell - 2, ell);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t ell) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // reduce a mod b (b need not be monic)
        std::uint64_t lead_inv = inv_mod_prime(b.back(), ell);
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = (a.back() * lead_inv) % ell;
            std::size_t shift = a.size() - b.size();
            if (c != 0) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    std::uint64_t t = (b[j] * c) % ell;
                    a[shift + j] = (a[shift + j] + ell - t) % ell;
                }
            }
            poly_trim(a);
            if (a.empty()) break;
            if (a.size() >= b.size() && a.back() == 0) poly_trim(a);
        }
        std::swap(a, b);
        poly_trim(b);
    }
    return a;
}

// x^(l^j) mod f needs l^j as an integer exponent; guard the shift. The cap
// check runs after each multiply so the result itself is bounded, not just
// the intermediates; once r <= cap and base <= cap the product fits in 2^40.
std::uint64_t ipow_checked(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r *= base;
        if (r > kMaxFieldOrder) fail(Errc::field_too_large, "l^k exceeds the supported field order");
    }
    return r;
}

// Rabin's test: f (monic, degree k) is irreducible over F_l iff
// x^(l^k) == x (mod f) and gcd(x^(l^(k/d)) - x, f) = 1 for every prime d | k.
bool poly_is_irreducible(const Poly& f, std::uint64_t ell, std::uint64_t k) {
    const Poly x{0, 1};
    std::uint64_t qk = ipow_checked(ell, k);
    Poly xq = poly_powmod(x, qk, f, ell);
    Poly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + ell - 1) % ell;
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t d : prime_factors(k)) {
        Poly xe = poly_powmod(x, ipow_checked(ell, k / d), f, ell);
        Poly g = xe;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + ell - 1) % ell;
        poly_trim(g);
        Poly gcd = poly_gcd(g, f, ell);
        if (gcd.size() != 1) return false;
    }
    return true;
}

} // namespace

std::vector<std::uint64_t> find_irreducible(std::uint64_t ell, std::uint64_t k, std::uint64_t seed) {
    if (!is_prime(ell)) fail(Errc::not_prime, "characteristic " + std::to_string(ell) + " is not prime");
    if (k == 0) fail(Errc::bad_argument, "extension degree must be at least 1");
    if (k == 1) return {};
    ipow_checked(ell, k);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, ell - 1);
    // Irreducible polynomials of every degree exist (a fraction ~1/k of all
    // monic polynomials), so this loop terminates.
    for (;;) {
        Poly f(k + 1, 0);
        for (std::uint64_t i = 0; i < k; ++i) f[i] = coeff(rng);
        f[k] = 1;
        if (f[0] == 0) continue; // divisible by x
        if (poly_is_irreducible(f, ell, k)) return f;
    }
}

// -- Field --------------------------------------------------------------------

Field::Field(std::uint64_t ell) : ell_(ell), k_(1) { validate_and_finish(); }

Field::Field(std::uint64_t ell, std::uint64_t k, std::vector<std::uint64_t> modulus)
    : ell_(ell), k_(k), mod_(std::move(modulus)) {
    validate_and_finish();
}

void Field::validate_and_finish() {
    if (!is_prime(ell_)) fail(Errc::not_prime, "characteristic " + std::to_string(ell_) + " is not prime");
    if (k_ == 0) fail(Errc::bad_argument, "extension degree must be at least 1");
    if (k_ > kMaxFieldDegree) fail(Errc::field_too_large, "extension degree " + std::to_string(k_) + " too large");
    q_ = 1;
    for (std::uint64_t i = 0; i < k_; ++i) {
        if (q_ > kMaxFieldOrder / ell_)
            fail(Errc::field_too_large, "field order l^k exceeds " + std::to_string(kMaxFieldOrder));
        q_ *= ell_;
    }
    if (k_ == 1) {
        if (!mod_.empty())
            fail(Errc::bad_argument, "prime field takes the empty modulus convention");
    } else {
        if (mod_.size() != k_ + 1)
            fail(Errc::bad_argument, "modulus must have degree k = " + std::to_string(k_));
        if (mod_.back() != 1) fail(Errc::not_irreducible, "modulus must be monic");
        for (std::uint64_t c : mod_)
            if (c >= ell_) fail(Errc::bad_argument, "modulus coefficient out of range");
        if (!poly_is_irreducible(mod_, ell_, k_))
            fail(Errc::not_irreducible, "modulus is reducible over F_" + std::to_string(ell_));
    }
    qm1_factors_ = prime_factors(q_ - 1);
}

void Field::check(Fe x) const {
    if (x.v >= q_)
        fail(Errc::element_not_canonical,
             "value " + std::to_string(x.v) + " not canonical in field of order " + std::to_string(q_));
}

Fe Field::from_value(std::uint64_t v) const {
    Fe x{v};
    check(x);
    return x;
}

Fe Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() > k_)
        fail(Errc::element_not_canonical, "too many coefficients for degree " + std::to_string(k_));
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= ell_) fail(Errc::element_not_canonical, "coefficient not reduced mod characteristic");
        v = v * ell_ + coeffs[i];
    }
    return Fe{v};
}

std::vector<std::uint64_t> Field::coeffs(Fe x) const {
    check(x);
    std::vector<std::uint64_t> out(k_);
    std::uint64_t v = x.v;
    for (std::uint64_t i = 0; i < k_; ++i) {
        out[i] = v % ell_;
        v /= ell_;
    }
    return out;
}

Fe Field::add(Fe a, Fe b) const {
    check(a);
    check(b);
    if (k_ == 1) {
        std::uint64_t s = a.v + b.v;
        return Fe{s >= ell_ ? s - ell_ : s};
    }
    std::uint64_t va = a.v, vb = b.v, v = 0, scale = 1;
    for (std::uint64_t i = 0; i < k_; ++i) {
        std::uint64_t s = va % ell_ + vb % ell_;
        if (s >= ell_) s -= ell_;
        v += s * scale;
        scale *= ell_;
        va /= ell_;
        vb /= ell_;
    }
    return Fe{v};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::neg(Fe a) const {
    check(a);
    if (k_ == 1) return Fe{a.v == 0 ? 0 : ell_ - a.v};
    std::uint64_t va = a.v, v = 0, scale = 1;
    for (std::uint64_t i = 0; i < k_; ++i) {
        std::uint64_t c = va % ell_;
        v += (c == 0 ? 0 : ell_ - c) * scale;
        scale *= ell_;
        va /= ell_;
    }
    return Fe{v};
}

Fe Field::mul(Fe a, Fe b) const {
    check(a);
    check(b);
    if (k_ == 1) return Fe{(a.v * b.v) % ell_};
    std::array<std::uint64_t, kMaxFieldDegree> da{}, db{};
    std::array<std::uint64_t, 2 * kMaxFieldDegree> t{};
    std::uint64_t va = a.v, vb = b.v;
    for (std::uint64_t i = 0; i < k_; ++i) {
        da[i] = va % ell_;
        db[i] = vb % ell_;
        va /= ell_;
        vb /= ell_;
    }
    for (std::uint64_t i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint64_t j = 0; j < k_; ++j) t[i + j] += da[i] * db[j];
    }
    // reduce by the monic modulus: x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
    for (std::size_t i = 2 * k_ - 2; i >= k_ && i < 2 * k_; --i) {
        std::uint64_t c = t[i] % ell_;
        t[i] = 0;
        if (c == 0) continue;
        for (std::uint64_t j = 0; j < k_; ++j) t[i - k_ + j] += (ell_ - mod_[j]) % ell_ * c;
    }
    std::uint64_t v = 0, scale = 1;
    for (std::uint64_t i = 0; i < k_; ++i) {
        v += (t[i] % ell_) * scale;
        scale *= ell_;
    }
    return Fe{v};
}

Fe Field::inv(Fe a) const {
    check(a);
    if (a.v == 0) fail(Errc::division_by_zero, "inverse of zero");
    return pow(a, static_cast<std::int64_t>(q_ - 2));
}

Fe Field::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe Field::pow(Fe a, std::int64_t e) const {
    check(a);
    if (e < 0) {
        a = inv(a); // errors on zero base
        e = -e;
    }
    if (a.v == 0) return e == 0 ? one() : zero();
    Fe r = one();
    std::uint64_t ue = static_cast<std::uint64_t>(e);
    while (ue) {
        if (ue & 1) r = mul(r, a);
        a = mul(a, a);
        ue >>= 1;
    }
    return r;
}

std::uint64_t Field::multiplicative_order(Fe x) const {
    check(x);
    if (x.v == 0) fail(Errc::zero_element, "zero has no multiplicative order");
    std::uint64_t n = q_ - 1;
    for (std::uint64_t f : qm1_factors_) {
        while (n % f == 0 && pow(x, static_cast<std::int64_t>(n / f)) == one()) n /= f;
    }
    return n;
}

Fe Field::generator() const {
    for (std::uint64_t v = 1; v < q_; ++v) {
        Fe c{v};
        bool ok = true;
        for (std::uint64_t f : qm1_factors_) {
            if (pow(c, static_cast<std::int64_t>((q_ - 1) / f)) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) return c;
    }
    // unreachable: every finite field has a primitive element
    throw HardFailure("no generator found in field of order " + std::to_string(q_));
}

Fe Field::principal_root(std::uint64_t p) const {
    if (p == 0 || (q_ - 1) % p != 0)
        fail(Errc::order_not_divisible,
             std::to_string(p) + " does not divide q-1 = " + std::to_string(q_ - 1));
    return pow(generator(), static_cast<std::int64_t>((q_ - 1) / p));
}

std::string Field::to_string(Fe x) const {
    check(x);
    if (k_ == 1) return std::to_string(x.v);
    auto c = coeffs(x);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]);
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace zpf
