// Exact arithmetic in F_{p^k}.
//
// Elements are dense coefficient vectors over Z_p modulo a monic irreducible
// polynomial of degree k. The modulus is chosen deterministically: the first
// monic irreducible polynomial when candidates are ordered by the integer
// c_0 + c_1 p + ... + c_{k-1} p^{k-1} of their lower coefficients.

#pragma once

#include "arith.hpp"
#include "error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace maxcurve {

inline constexpr unsigned kMaxExtensionDegree = 8;
inline constexpr std::uint64_t kMaxFieldCardinality = std::uint64_t{1} << 20;

namespace detail {

struct FieldData {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t cardinality = 0;
    std::vector<std::uint64_t> modulus; // ascending, monic, size k + 1
};

// Dense polynomials over Z_p used only while constructing the modulus.
using ZpPoly = std::vector<std::uint64_t>;

inline void zp_trim(ZpPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t zp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t zp_inv(std::uint64_t a, std::uint64_t p) { return zp_pow(a, p - 2, p); }

inline ZpPoly zp_mod(ZpPoly a, const ZpPoly &m, std::uint64_t p) {
    zp_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t inv_lead = zp_inv(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
        }
        zp_trim(a);
    }
    return a;
}

inline ZpPoly zp_mulmod(const ZpPoly &a, const ZpPoly &b, const ZpPoly &m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return zp_mod(std::move(r), m, p);
}

inline ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly &m, std::uint64_t p) {
    ZpPoly r{1};
    base = zp_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = zp_mulmod(r, base, m, p);
        base = zp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool zp_has_root(const ZpPoly &f, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// x^{p^d} mod f, by d successive p-th powerings starting from x.
inline ZpPoly zp_frobenius_x(unsigned d, const ZpPoly &f, std::uint64_t p) {
    ZpPoly h = zp_mod(ZpPoly{0, 1}, f, p);
    for (unsigned i = 0; i < d; ++i) h = zp_powmod(h, p, f, p);
    return h;
}

/// Irreducibility of a monic f of degree k over Z_p. Degrees up to 3 use
/// root absence; higher degrees use Rabin's test on x^{p^d} - x.
inline bool zp_is_irreducible(const ZpPoly &f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    if (k <= 3) return !zp_has_root(f, p);
    auto minus_x = [&](ZpPoly h) {
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        zp_trim(h);
        return h;
    };
    if (!minus_x(zp_frobenius_x(k, f, p)).empty()) return false;
    for (std::uint64_t ell : prime_divisors(k)) {
        const ZpPoly g = zp_gcd(f, minus_x(zp_frobenius_x(static_cast<unsigned>(k / ell), f, p)), p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace detail

class FieldElement;

/// Immutable handle to a finite field F_{p^k}; cheap to copy and safe to share
/// across threads.
class FieldSpec {
  public:
    FieldSpec() = default;

    std::uint64_t characteristic() const noexcept { return data_->p; }
    unsigned degree() const noexcept { return data_->k; }
    std::uint64_t cardinality() const noexcept { return data_->cardinality; }
    const std::vector<std::uint64_t> &modulus() const noexcept { return data_->modulus; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of an integer in the prime subfield.
    FieldElement from_int(std::int64_t value) const;
    /// Element whose base-p digits (least significant first) are its coefficients.
    FieldElement element(std::uint64_t index) const;
    /// Element t, the class of the polynomial variable (t = p for k = 1).
    FieldElement variable() const;
    /// Smallest-index element of multiplicative order Q - 1.
    FieldElement primitive_element() const;

    const detail::FieldData *data() const noexcept { return data_.get(); }

    friend bool operator==(const FieldSpec &a, const FieldSpec &b) noexcept {
        return a.data_ == b.data_ ||
               (a.data_ && b.data_ && a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
                a.data_->modulus == b.data_->modulus);
    }

    friend FieldSpec field_make(std::uint64_t p, unsigned k);

  private:
    explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

/// An element of a FieldSpec. Holds a non-owning pointer to the field data, so
/// it must not outlive every FieldSpec handle of its field.
class FieldElement {
  public:
    using Coeffs = std::array<std::uint32_t, kMaxExtensionDegree>;

    FieldElement() = default;
    FieldElement(const detail::FieldData *owner, const Coeffs &c) noexcept : owner_(owner), c_(c) {}

    const detail::FieldData *owner() const noexcept { return owner_; }
    std::uint32_t coeff(unsigned i) const noexcept { return c_[i]; }
    const Coeffs &coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
    }
    bool is_one() const noexcept {
        if (c_[0] != 1) return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
    }

    std::uint64_t index() const noexcept {
        std::uint64_t r = 0;
        for (unsigned i = owner_->k; i-- > 0;) r = r * owner_->p + c_[i];
        return r;
    }

    FieldElement operator-() const noexcept {
        FieldElement r = *this;
        for (unsigned i = 0; i < owner_->k; ++i) {
            r.c_[i] = c_[i] == 0 ? 0 : static_cast<std::uint32_t>(owner_->p - c_[i]);
        }
        return r;
    }

    FieldElement &operator+=(const FieldElement &o) {
        check_same(o);
        const std::uint64_t p = owner_->p;
        for (unsigned i = 0; i < owner_->k; ++i) {
            c_[i] = static_cast<std::uint32_t>((std::uint64_t{c_[i]} + o.c_[i]) % p);
        }
        return *this;
    }
    FieldElement &operator-=(const FieldElement &o) { return *this += -o; }

    FieldElement &operator*=(const FieldElement &o) {
        check_same(o);
        const unsigned k = owner_->k;
        const std::uint64_t p = owner_->p;
        std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
        for (unsigned i = 0; i < k; ++i) {
            if (c_[i] == 0) continue;
            for (unsigned j = 0; j < k; ++j) {
                prod[i + j] = (prod[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p;
            }
        }
        // Reduce by the monic modulus: t^k = -sum_{i<k} mod_i t^i.
        const auto &mod = owner_->modulus;
        for (unsigned d = 2 * k - 1; d-- > k;) {
            const std::uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < k; ++i) {
                prod[d - k + i] = (prod[d - k + i] + (p - mod[i]) * c) % p;
            }
        }
        for (unsigned i = 0; i < k; ++i) c_[i] = static_cast<std::uint32_t>(prod[i]);
        return *this;
    }

    FieldElement pow(std::uint64_t e) const {
        FieldElement base = *this;
        FieldElement r = unit();
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    FieldElement inverse() const {
        if (is_zero()) throw Error(Errc::ZeroInput, "inverse of zero");
        return pow(owner_->cardinality - 2);
    }

    FieldElement &operator/=(const FieldElement &o) { return *this *= o.inverse(); }

    /// a -> a^p
    FieldElement frobenius() const { return pow(owner_->p); }
    /// Inverse Frobenius a -> a^{Q/p}.
    FieldElement pth_root() const { return pow(owner_->cardinality / owner_->p); }

    friend FieldElement operator+(FieldElement a, const FieldElement &b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement &b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement &b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement &b) { return a /= b; }
    friend bool operator==(const FieldElement &a, const FieldElement &b) noexcept {
        return a.c_ == b.c_;
    }

    /// Written as a polynomial in the generator t, e.g. `3t+2`; prime-subfield
    /// elements print as plain integers.
    friend std::ostream &operator<<(std::ostream &os, const FieldElement &a) {
        bool first = true;
        for (unsigned i = a.owner_->k; i-- > 0;) {
            const std::uint32_t c = a.c_[i];
            if (c == 0) continue;
            if (!first) os << '+';
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << 't';
            if (i >= 2) os << '^' << i;
        }
        if (first) os << '0';
        return os;
    }

  private:
    FieldElement unit() const noexcept {
        Coeffs c{};
        c[0] = 1;
        return {owner_, c};
    }
    void check_same(const FieldElement &o) const {
        if (owner_ != o.owner_ && (o.owner_->p != owner_->p || o.owner_->modulus != owner_->modulus)) {
            throw Error(Errc::FieldMismatch, "operands from different fields");
        }
    }

    const detail::FieldData *owner_ = nullptr;
    Coeffs c_{};
};

inline FieldElement FieldSpec::zero() const { return {data_.get(), {}}; }

inline FieldElement FieldSpec::one() const { return from_int(1); }

inline FieldElement FieldSpec::from_int(std::int64_t value) const {
    const auto p = static_cast<std::int64_t>(data_->p);
    std::int64_t r = value % p;
    if (r < 0) r += p;
    FieldElement::Coeffs c{};
    c[0] = static_cast<std::uint32_t>(r);
    return {data_.get(), c};
}

inline FieldElement FieldSpec::element(std::uint64_t index) const {
    FieldElement::Coeffs c{};
    for (unsigned i = 0; i < data_->k; ++i) {
        c[i] = static_cast<std::uint32_t>(index % data_->p);
        index /= data_->p;
    }
    return {data_.get(), c};
}

inline FieldElement FieldSpec::variable() const {
    if (data_->k == 1) return from_int(static_cast<std::int64_t>(data_->p));
    FieldElement::Coeffs c{};
    c[1] = 1;
    return {data_.get(), c};
}

inline FieldElement FieldSpec::primitive_element() const {
    const std::uint64_t order = data_->cardinality - 1;
    const auto primes = prime_divisors(order);
    for (std::uint64_t i = 1; i < data_->cardinality; ++i) {
        const FieldElement g = element(i);
        const bool primitive = std::none_of(primes.begin(), primes.end(),
                                            [&](std::uint64_t ell) { return g.pow(order / ell).is_one(); });
        if (primitive) return g;
    }
    throw Error(Errc::InternalInconsistency, "no primitive element found");
}

/// Builds F_{p^k} with the deterministic modulus. Requires p prime,
/// 1 <= k <= 8 and p^k <= 2^20.
inline FieldSpec field_make(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxExtensionDegree) {
        throw Error(Errc::DegreeOutOfRange, "extension degree " + std::to_string(k) + " not in [1,8]");
    }
    const auto card = checked_pow(p, k, kMaxFieldCardinality);
    if (!card) {
        throw Error(Errc::CardinalityTooLarge,
                    std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->k = k;
    data->cardinality = *card;
    const std::uint64_t candidates = *card; // p^k choices of lower coefficients
    for (std::uint64_t idx = 0; idx < candidates; ++idx) {
        detail::ZpPoly f(k + 1, 0);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[k] = 1;
        if (detail::zp_is_irreducible(f, p)) {
            data->modulus = std::move(f);
            return FieldSpec(std::move(data));
        }
    }
    throw Error(Errc::InternalInconsistency, "no irreducible modulus found");
}

/// True iff c is a d'-th power, d' = gcd(d, Q - 1).
inline bool power_residue(const FieldElement &c, std::uint64_t d) {
    if (c.is_zero()) throw Error(Errc::ZeroInput, "power_residue of zero");
    const std::uint64_t order = c.owner()->cardinality - 1;
    const std::uint64_t dd = std::gcd(d, order);
    return c.pow(order / dd).is_one();
}

/// #{w in K : w^r = c}.
inline std::uint64_t nth_root_count(const FieldElement &c, std::uint64_t r) {
    if (c.is_zero()) return 1;
    const std::uint64_t order = c.owner()->cardinality - 1;
    return power_residue(c, r) ? std::gcd(r, order) : 0;
}

} // namespace maxcurve
