// Genus constraints for maximal curves over F_{q^2}.
//
// Castelnuovo numbers for the Frobenius linear series |(q+1)P0|, the
// quadric-surface threshold c1(3), Stohr-Voloch divisor degrees and the
// resulting genus gap for q not divisible by 3. Everything is exact.

#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace maxcurve {

using GenusSet = std::set<std::int64_t>;

/// Castelnuovo bound c0(r, q+1) for a nondegenerate curve of degree q+1 in P^r.
inline Rational castelnuovo_c0(std::int64_t r, std::int64_t q) {
    if (r < 2) throw Error(Errc::DimensionTooSmall, "r = " + std::to_string(r) + " < 2");
    const std::int64_t base = 2 * q - (r - 1);
    if (base <= 0) {
        throw Error(Errc::DegenerateRange, "2q <= r - 1 for r = " + std::to_string(r) + ", q = " + std::to_string(q));
    }
    const std::int64_t num = (r % 2 == 0) ? base * base - 1 : base * base;
    return {num, 8 * (r - 1)};
}

/// (q^2 - q + 4) / 6
inline Rational c1_3(std::int64_t q) { return {q * q - q + 4, 6}; }

/// q(q-1)/2
constexpr std::int64_t ihara_bound(std::int64_t q) noexcept { return q * (q - 1) / 2; }

enum class GenusClass { Low, SecondMax, Hermitian, Forbidden };

constexpr std::string_view genus_class_name(GenusClass c) noexcept {
    switch (c) {
    case GenusClass::Low: return "Low";
    case GenusClass::SecondMax: return "SecondMax";
    case GenusClass::Hermitian: return "Hermitian";
    case GenusClass::Forbidden: return "Forbidden";
    }
    return "?";
}

/// g <= c1(3), or g = floor(c0(3)), or g = c0(2); anything else is Forbidden.
inline GenusClass genus_trichotomy(std::int64_t q, std::int64_t g) {
    const std::int64_t low = c1_3(q).floor();
    if (g >= 0 && g <= low) return GenusClass::Low;
    if (g == castelnuovo_c0(3, q).floor()) return GenusClass::SecondMax;
    if (g == ihara_bound(q)) return GenusClass::Hermitian;
    return GenusClass::Forbidden;
}

/// Candidate Frobenius dimensions r for a maximal curve of genus g.
inline std::set<std::int64_t> frobenius_dims(std::int64_t q, std::int64_t g) {
    if (g < 0 || genus_trichotomy(q, g) == GenusClass::Forbidden) {
        throw Error(Errc::ForbiddenGenus, "g = " + std::to_string(g) + " impossible for q = " + std::to_string(q));
    }
    if (g == ihara_bound(q)) return {2};
    const Rational gr(g);
    if (castelnuovo_c0(4, q) < gr && gr <= castelnuovo_c0(3, q)) return {3};
    std::set<std::int64_t> dims;
    for (std::int64_t r = 3; 2 * q > r - 1; ++r) {
        if (gr <= castelnuovo_c0(r, q)) {
            dims.insert(r);
        } else {
            break; // c0 is nonincreasing in r
        }
    }
    return dims;
}

/// binom(eps, eta) != 0 mod p, via Lucas: every base-p digit of eta is at most
/// the matching digit of eps.
inline bool padic_order_check(std::int64_t eps, std::int64_t eta, std::int64_t p) {
    if (eta < 0 || eta > eps) throw Error(Errc::BadRange, "need 0 <= eta <= eps");
    if (!is_prime(static_cast<std::uint64_t>(p))) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    while (eps > 0 || eta > 0) {
        if (eta % p > eps % p) return false;
        eps /= p;
        eta /= p;
    }
    return true;
}

/// deg R = (eps3 + eps2 + 1)(2g - 2) + (r + 1)(q + 1), eps3 = q.
constexpr std::int64_t sv_ramification_degree(std::int64_t g, std::int64_t q, std::int64_t eps2,
                                              std::int64_t r) noexcept {
    return (q + eps2 + 1) * (2 * g - 2) + (r + 1) * (q + 1);
}

/// deg S = (nu1 + nu2)(2g - 2) + (q^2 + r)(q + 1), nu1 = 1, nu2 = q.
constexpr std::int64_t sv_frobenius_degree(std::int64_t g, std::int64_t q, std::int64_t r) noexcept {
    return (1 + q) * (2 * g - 2) + (q * q + r) * (q + 1);
}

/// For a maximal curve with Frobenius dimension 3 and q != 0 mod 3: when
/// (4q-1)(2g-2) > (q+1)(q^2-5q-2) the genus is at least ceil((q^2-2q+3)/6).
inline std::optional<std::int64_t> prop31_lower_bound(std::int64_t q, std::int64_t g) {
    if (q % 3 == 0) {
        throw Error(Errc::BadCharacteristicHypothesis, "q = " + std::to_string(q) + " divisible by 3");
    }
    const std::int64_t lhs = (4 * q - 1) * (2 * g - 2);
    const std::int64_t rhs = (q + 1) * (q * q - 5 * q - 2);
    if (lhs <= rhs) return std::nullopt;
    return Rational(q * q - 2 * q + 3, 6).ceil();
}

/// Genera strictly between (q-1)(q-2)/6 and (q^2-2q+3)/6; empty when 3 | q.
inline GenusSet genus_gap_filter(std::int64_t q) {
    GenusSet out;
    if (q % 3 == 0) return out;
    const Rational lo((q - 1) * (q - 2), 6);
    const Rational hi(q * q - 2 * q + 3, 6);
    for (std::int64_t g = lo.floor() + 1; Rational(g) < hi; ++g) {
        if (Rational(g) > lo) out.insert(g);
    }
    return out;
}

struct BoundsReport {
    std::int64_t q;
    std::map<std::int64_t, Rational> c0_table; // r = 2..8
    Rational c1_3;
    std::int64_t ihara;
    GenusSet gap_excluded;
    std::int64_t low_ceiling;     // floor(c1(3))
    std::int64_t second_max;      // floor(c0(3))
    Rational second_dim_floor;    // c0(4): above it, r = 3 is forced
};

inline BoundsReport bounds_report(std::int64_t q) {
    if (q < 2) throw Error(Errc::BadRange, "q must be at least 2");
    BoundsReport rep{q, {}, c1_3(q), ihara_bound(q), genus_gap_filter(q), c1_3(q).floor(),
                     castelnuovo_c0(3, q).floor(), castelnuovo_c0(4, q)};
    for (std::int64_t r = 2; r <= 8 && 2 * q > r - 1; ++r) rep.c0_table.emplace(r, castelnuovo_c0(r, q));
    return rep;
}

} // namespace maxcurve
