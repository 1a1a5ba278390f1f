// Superelliptic models y^m = f(x) over F_{q^2}.
//
// Genus comes from the tame Kummer formula
//   2g - 2 = -2m + sum_i deg(g_i) (m - gcd(m, v_i)) + (m - gcd(m, deg f)),
// and the rational-point count is the number of degree-one places of the
// function field: literal fibres over x = a with f(a) != 0, and K-roots of
// z^r = u above every ramified or infinite place.

#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "poly.hpp"

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace maxcurve {

class SuperellipticCurve {
  public:
    std::uint64_t q() const noexcept { return q_; }
    const FieldSpec &field() const noexcept { return field_; }
    std::uint64_t m() const noexcept { return m_; }
    const Poly &f() const noexcept { return f_; }
    const std::vector<MultiplicityFactor> &decomposition() const noexcept { return decomposition_; }

    std::string describe() const {
        std::ostringstream os;
        os << "y^" << m_ << " = " << f_ << " over F_" << field_.cardinality() << " (q=" << q_ << ")";
        return os.str();
    }

    friend SuperellipticCurve curve_make(std::uint64_t q, std::uint64_t m, std::span<const std::int64_t> f_coeffs);

  private:
    SuperellipticCurve(std::uint64_t q, FieldSpec field, std::uint64_t m, Poly f,
                       std::vector<MultiplicityFactor> dec)
        : q_(q), field_(std::move(field)), m_(m), f_(std::move(f)), decomposition_(std::move(dec)) {}

    std::uint64_t q_;
    FieldSpec field_;
    std::uint64_t m_;
    Poly f_;
    std::vector<MultiplicityFactor> decomposition_;
};

/// Builds F_{q^2}, reduces the integer coefficients into its prime subfield and
/// validates the model (tame exponent, absolute irreducibility).
inline SuperellipticCurve curve_make(std::uint64_t q, std::uint64_t m, std::span<const std::int64_t> f_coeffs) {
    const auto pp = prime_power(q);
    if (!pp) throw Error(Errc::BadFieldRequest, "q = " + std::to_string(q) + " is not a prime power");
    if (m < 2) throw Error(Errc::InvalidExponent, "m must be at least 2");
    FieldSpec K;
    try {
        K = field_make(pp->first, 2 * pp->second);
    } catch (const Error &e) {
        throw Error(Errc::BadFieldRequest, std::string("cannot build F_{q^2}: ") + e.what());
    }
    if (m % K.characteristic() == 0) {
        throw Error(Errc::ExponentNotCoprimeToCharacteristic,
                    "m = " + std::to_string(m) + " divisible by p = " + std::to_string(K.characteristic()));
    }
    Poly f = Poly::from_ints(K, f_coeffs);
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "f must have degree at least 1");
    auto dec = multiplicity_decomposition(f);
    std::uint64_t g = m;
    for (const auto &fac : dec) g = std::gcd(g, fac.multiplicity);
    if (g > 1) {
        throw Error(Errc::ReducibleModel,
                    "gcd of m and all multiplicities is " + std::to_string(g) + " > 1");
    }
    return SuperellipticCurve(q, std::move(K), m, std::move(f), std::move(dec));
}

inline SuperellipticCurve curve_make(std::uint64_t q, std::uint64_t m, std::initializer_list<std::int64_t> f) {
    return curve_make(q, m, std::span<const std::int64_t>(f.begin(), f.size()));
}

struct RamificationDatum {
    std::optional<FieldElement> point; // empty for the infinite place
    std::int64_t valuation;            // v_a(f) > 0, or -deg f at infinity
    std::uint64_t r;                   // gcd(m, |v|)
    FieldElement unit;                 // residue unit u

    bool is_infinite() const noexcept { return !point.has_value(); }
};

/// One datum per K-rational root of f, then the infinite place last.
inline std::vector<RamificationDatum> ramification_data(const SuperellipticCurve &C) {
    const FieldSpec &K = C.field();
    const std::uint64_t m = C.m();
    std::vector<RamificationDatum> out;
    for (const auto &root : roots_in_field(C.f())) {
        Poly cofactor = C.f() / Poly::linear(K, root.value).pow(root.multiplicity);
        out.push_back({root.value, static_cast<std::int64_t>(root.multiplicity),
                       std::gcd(m, root.multiplicity), cofactor(root.value)});
    }
    const auto D = static_cast<std::uint64_t>(C.f().degree());
    out.push_back({std::nullopt, -static_cast<std::int64_t>(D), std::gcd(m, D), C.f().lead()});
    return out;
}

inline std::uint64_t genus(const SuperellipticCurve &C) {
    const auto m = static_cast<std::int64_t>(C.m());
    std::int64_t twice = -2 * m;
    for (const auto &fac : C.decomposition()) {
        twice += fac.factor.degree() * (m - static_cast<std::int64_t>(std::gcd(C.m(), fac.multiplicity)));
    }
    const auto D = static_cast<std::uint64_t>(C.f().degree());
    twice += m - static_cast<std::int64_t>(std::gcd(C.m(), D));
    // twice = 2g - 2
    if (twice < -2 || twice % 2 != 0) {
        throw Error(Errc::InternalInconsistency, "Kummer formula gave 2g-2 = " + std::to_string(twice));
    }
    return static_cast<std::uint64_t>((twice + 2) / 2);
}

struct CountOptions {
    unsigned threads = 1; // 0 selects hardware concurrency
    std::uint64_t max_field = kMaxFieldCardinality;
};

/// Degree-one places of the nonsingular model over F_{q^2}. The x-range is
/// split into contiguous blocks, one per worker; totals are summed, so the
/// result does not depend on the thread count.
inline std::uint64_t count_points(const SuperellipticCurve &C, const CountOptions &opts = {}) {
    const FieldSpec &K = C.field();
    const std::uint64_t Q = K.cardinality();
    if (Q > opts.max_field) {
        throw Error(Errc::FieldTooLargeForEnumeration,
                    "|K| = " + std::to_string(Q) + " exceeds cap " + std::to_string(opts.max_field));
    }
    const std::uint64_t m = C.m();
    const Poly &f = C.f();

    auto block = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t n = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const FieldElement y = f(K.element(i));
            if (!y.is_zero()) n += nth_root_count(y, m);
        }
        return n;
    };

    unsigned workers = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, Q));
    std::uint64_t affine = 0;
    if (workers <= 1) {
        affine = block(0, Q);
    } else {
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = Q * w / workers;
            const std::uint64_t hi = Q * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] { partial[w] = block(lo, hi); });
        }
        for (auto &t : pool) t.join();
        affine = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    }

    std::uint64_t special = 0;
    for (const auto &d : ramification_data(C)) special += nth_root_count(d.unit, d.r);
    return affine + special;
}

/// |N - (q^2 + 1)| <= 2gq
constexpr bool hasse_weil_check(std::int64_t N, std::int64_t g, std::int64_t q) noexcept {
    const std::int64_t dev = N - (q * q + 1);
    return (dev < 0 ? -dev : dev) <= 2 * g * q;
}

struct CurveReport {
    std::uint64_t genus;
    std::uint64_t points;
    bool maximal;
    std::int64_t deficiency; // (q^2 + 1 + 2gq) - N
};

inline CurveReport is_maximal(const SuperellipticCurve &C, const CountOptions &opts = {}) {
    const std::uint64_t g = genus(C);
    const std::uint64_t N = count_points(C, opts);
    const auto q = static_cast<std::int64_t>(C.q());
    const std::int64_t bound = q * q + 1 + 2 * static_cast<std::int64_t>(g) * q;
    const std::int64_t deficiency = bound - static_cast<std::int64_t>(N);
    if (deficiency < 0 || deficiency > 4 * static_cast<std::int64_t>(g) * q) {
        throw Error(Errc::InternalInconsistency,
                    "point count " + std::to_string(N) + " violates Hasse-Weil for genus " + std::to_string(g));
    }
    return {g, N, deficiency == 0, deficiency};
}

} // namespace maxcurve
