// Small integer helpers (primality, prime powers).

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace maxcurve {

constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Returns (p, e) with n = p^e when n is a prime power, e >= 1.
constexpr std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) noexcept {
    if (n < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair{n, 1u};
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return std::pair{p, e};
}

constexpr bool is_prime_power(std::uint64_t n) noexcept { return prime_power(n).has_value(); }

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
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

/// Saturating checked power; returns nullopt once the result exceeds `limit`.
constexpr std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                                   std::uint64_t limit) noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    if (r > limit) return std::nullopt;
    return r;
}

} // namespace maxcurve
