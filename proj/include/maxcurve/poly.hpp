// Univariate polynomials over a FieldSpec.

#pragma once

#include "error.hpp"
#include "gf.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace maxcurve {

/// Dense polynomial, ascending coefficients, trailing zeros trimmed. The zero
/// polynomial has no coefficients and degree -1.
class Poly {
  public:
    explicit Poly(FieldSpec field) : field_(std::move(field)) {}
    Poly(FieldSpec field, std::vector<FieldElement> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    /// Integer coefficients mapped into the prime subfield.
    static Poly from_ints(const FieldSpec &field, std::span<const std::int64_t> coeffs) {
        std::vector<FieldElement> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(field.from_int(v));
        return {field, std::move(c)};
    }
    static Poly constant(const FieldSpec &field, const FieldElement &c) { return {field, {c}}; }
    /// x - a
    static Poly linear(const FieldSpec &field, const FieldElement &a) {
        return {field, {-a, field.one()}};
    }
    static Poly monomial(const FieldSpec &field, const FieldElement &c, std::size_t deg) {
        std::vector<FieldElement> v(deg + 1, field.zero());
        v[deg] = c;
        return {field, std::move(v)};
    }

    const FieldSpec &field() const noexcept { return field_; }
    const std::vector<FieldElement> &coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    FieldElement lead() const {
        if (c_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero");
        return c_.back();
    }

    FieldElement operator()(const FieldElement &x) const {
        FieldElement acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        std::vector<FieldElement> d;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
        }
        return {field_, std::move(d)};
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        const FieldElement inv = c_.back().inverse();
        std::vector<FieldElement> v = c_;
        for (auto &x : v) x *= inv;
        return {field_, std::move(v)};
    }

    Poly scaled(const FieldElement &s) const {
        std::vector<FieldElement> v = c_;
        for (auto &x : v) x *= s;
        return {field_, std::move(v)};
    }

    /// Coefficient-wise p-th root of a polynomial in x^p: sum a_{ip} x^{ip} -> sum a_{ip}^{1/p} x^i.
    Poly pth_root() const {
        const std::uint64_t p = field_.characteristic();
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i % p != 0) {
                if (!c_[i].is_zero()) {
                    throw Error(Errc::InternalInconsistency, "pth_root of a non p-th power");
                }
                continue;
            }
            v.push_back(c_[i].pth_root());
        }
        return {field_, std::move(v)};
    }

    Poly &operator+=(const Poly &o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }

    friend Poly operator*(const Poly &a, const Poly &b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return {a.field_, std::move(r)};
    }

    Poly pow(std::uint64_t e) const {
        Poly r = constant(field_, field_.one());
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    /// (quotient, remainder)
    friend std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
        if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by zero polynomial");
        std::vector<FieldElement> rem = a.c_;
        const long db = b.degree();
        if (a.degree() < db) return {Poly(a.field_), a};
        std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - db + 1), a.field_.zero());
        const FieldElement inv = b.c_.back().inverse();
        for (long d = a.degree(); d >= db; --d) {
            const FieldElement c = rem[static_cast<std::size_t>(d)] * inv;
            if (c.is_zero()) continue;
            quo[static_cast<std::size_t>(d - db)] = c;
            for (long i = 0; i <= db; ++i) {
                rem[static_cast<std::size_t>(d - db + i)] -= c * b.c_[static_cast<std::size_t>(i)];
            }
        }
        return {Poly(a.field_, std::move(quo)), Poly(a.field_, std::move(rem))};
    }
    friend Poly operator/(const Poly &a, const Poly &b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly &a, const Poly &b) { return divmod(a, b).second; }

    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }

    friend std::ostream &operator<<(std::ostream &os, const Poly &f) {
        if (f.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = f.c_.size(); i-- > 0;) {
            if (f.c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            const bool unit = f.c_[i].is_one();
            const bool compound = std::count_if(f.c_[i].coeffs().begin(), f.c_[i].coeffs().end(),
                                                [](std::uint32_t v) { return v != 0; }) > 1 ||
                                  f.c_[i].coeff(0) == 0;
            if (!unit || i == 0) {
                if (compound && i > 0) {
                    os << '(' << f.c_[i] << ')';
                } else {
                    os << f.c_[i];
                }
            }
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        return os;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldSpec field_;
    std::vector<FieldElement> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct MultiplicityFactor {
    Poly factor;             // squarefree, monic
    std::uint64_t multiplicity;
};

namespace detail {

// Musser's cascade on a monic f; factors whose multiplicity is a multiple of p
// are collected as a p-th power and handled recursively.
inline void decompose_monic(const Poly &f, std::uint64_t scale, std::vector<MultiplicityFactor> &out) {
    if (f.degree() < 1) return;
    const std::uint64_t p = f.field().characteristic();
    const Poly df = f.derivative();
    Poly c = gcd(f, df);
    Poly w = f / c;
    std::uint64_t i = 1;
    while (w.degree() >= 1) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() >= 1) out.push_back({z.monic(), i * scale});
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() >= 1) decompose_monic(c.monic().pth_root(), scale * p, out);
}

} // namespace detail

/// f = lc(f) * prod g_i^{v_i} with g_i squarefree, monic, pairwise coprime and
/// v_i strictly increasing.
inline std::vector<MultiplicityFactor> multiplicity_decomposition(const Poly &f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "decomposition of zero polynomial");
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "decomposition of a constant");
    std::vector<MultiplicityFactor> out;
    detail::decompose_monic(f.monic(), 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return a.multiplicity < b.multiplicity; });
    return out;
}

struct Root {
    FieldElement value;
    std::uint64_t multiplicity;
};

/// All roots in the base field with exact multiplicity, by enumeration of K.
inline std::vector<Root> roots_in_field(const Poly &f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of zero polynomial");
    const FieldSpec &K = f.field();
    std::vector<Root> out;
    for (std::uint64_t i = 0; i < K.cardinality(); ++i) {
        const FieldElement a = K.element(i);
        if (!f(a).is_zero()) continue;
        std::uint64_t v = 0;
        Poly g = f;
        const Poly lin = Poly::linear(K, a);
        for (;;) {
            auto [quo, rem] = divmod(g, lin);
            if (!rem.is_zero()) break;
            ++v;
            g = std::move(quo);
        }
        out.push_back({a, v});
    }
    return out;
}

} // namespace maxcurve
