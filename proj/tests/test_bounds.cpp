#include <maxcurve/bounds.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace maxcurve;

namespace {

// Floating evaluation of the Castelnuovo number, used only to cross-check
// membership decisions far from the boundary.
double c0_float(int r, int q) {
    const double b = 2.0 * q - (r - 1);
    return (r % 2 == 0 ? b * b - 1 : b * b) / (8.0 * (r - 1));
}

} // namespace

TEST(Castelnuovo, Examples) {
    EXPECT_EQ(castelnuovo_c0(2, 7), Rational(21));
    EXPECT_EQ(castelnuovo_c0(3, 7), Rational(9));
    EXPECT_EQ(castelnuovo_c0(4, 7), Rational(5));
    EXPECT_EQ(castelnuovo_c0(3, 8), Rational(49, 4));
    EXPECT_EQ(castelnuovo_c0(3, 8).floor(), 12);
    EXPECT_EQ(castelnuovo_c0(5, 7), Rational(25, 8));
    EXPECT_THROW(castelnuovo_c0(1, 7), Error);
    EXPECT_THROW(castelnuovo_c0(15, 7), Error);
    EXPECT_NO_THROW(castelnuovo_c0(14, 7));
}

TEST(Castelnuovo, ClosedForms) {
    for (std::int64_t q = 2; q <= 40; ++q) {
        EXPECT_EQ(castelnuovo_c0(2, q), Rational(q * (q - 1), 2));
        EXPECT_EQ(castelnuovo_c0(3, q), Rational((q - 1) * (q - 1), 4));
        EXPECT_EQ(castelnuovo_c0(4, q), Rational((q - 1) * (q - 2), 6));
    }
}

TEST(Castelnuovo, MonotoneInDimension) {
    for (std::int64_t q = 7; q <= 16; ++q) {
        for (std::int64_t s = 2; s <= 8; ++s) {
            for (std::int64_t r = s; r <= 8; ++r) EXPECT_LE(castelnuovo_c0(r, q), castelnuovo_c0(s, q));
        }
    }
}

TEST(C13, Examples) {
    EXPECT_EQ(c1_3(7), Rational(46, 6));
    EXPECT_EQ(c1_3(7).floor(), 7);
    EXPECT_EQ(c1_3(13), Rational(160, 6));
    EXPECT_EQ(c1_3(13).floor(), 26);
    EXPECT_EQ(c1_3(16), Rational(244, 6));
    EXPECT_EQ(c1_3(16).floor(), 40);
}

TEST(Trichotomy, Examples) {
    EXPECT_EQ(genus_trichotomy(7, 9), GenusClass::SecondMax);
    EXPECT_EQ(genus_trichotomy(7, 21), GenusClass::Hermitian);
    EXPECT_EQ(genus_trichotomy(7, 8), GenusClass::Forbidden);
    EXPECT_EQ(genus_trichotomy(7, 0), GenusClass::Low);
    EXPECT_EQ(genus_trichotomy(7, 7), GenusClass::Low);
    EXPECT_EQ(genus_trichotomy(7, 22), GenusClass::Forbidden);
    EXPECT_EQ(genus_trichotomy(7, -1), GenusClass::Forbidden);
}

TEST(FrobeniusDims, Examples) {
    EXPECT_EQ(frobenius_dims(7, 9), (std::set<std::int64_t>{3}));
    EXPECT_EQ(frobenius_dims(7, 21), (std::set<std::int64_t>{2}));
    // c0(4)=5, c0(5)=25/8, c0(6)=2 for q = 7
    EXPECT_EQ(frobenius_dims(7, 3), (std::set<std::int64_t>{3, 4, 5}));
    EXPECT_EQ(frobenius_dims(7, 6), (std::set<std::int64_t>{3}));
    EXPECT_THROW(frobenius_dims(7, 8), Error);
}

TEST(FrobeniusDims, AgreesWithFloatingEvaluation) {
    for (int q : {7, 8, 9, 11, 13, 16}) {
        for (std::int64_t g = 0; g <= c1_3(q).floor(); ++g) {
            const auto dims = frobenius_dims(q, g);
            if (Rational(g) > castelnuovo_c0(4, q)) continue;
            for (int r = 3; r <= 2 * q; ++r) {
                const double c = c0_float(r, q);
                if (std::abs(c - static_cast<double>(g)) < 1e-9) continue;
                EXPECT_EQ(dims.count(r) == 1, static_cast<double>(g) < c) << "q=" << q << " g=" << g << " r=" << r;
            }
        }
    }
}

TEST(FrobeniusDims, HermitianPin) {
    for (std::int64_t q : {7, 8, 9, 11, 13, 16}) {
        for (std::int64_t g = 0; g <= ihara_bound(q); ++g) {
            if (genus_trichotomy(q, g) == GenusClass::Hermitian) {
                EXPECT_EQ(frobenius_dims(q, g), (std::set<std::int64_t>{2}));
            }
        }
    }
}

TEST(PadicOrder, Examples) {
    EXPECT_TRUE(padic_order_check(3, 2, 7));
    EXPECT_FALSE(padic_order_check(3, 2, 3));
    for (auto [q, p] : std::vector<std::pair<int, int>>{{7, 7}, {8, 2}, {9, 3}, {16, 2}, {13, 13}}) {
        EXPECT_FALSE(padic_order_check(q, 1, p));
    }
    EXPECT_THROW(padic_order_check(3, 4, 7), Error);
    EXPECT_THROW(padic_order_check(3, -1, 7), Error);
}

TEST(PadicOrder, MatchesBinomialsModP) {
    for (int p : {2, 3, 5, 7}) {
        // Pascal's triangle mod p
        std::vector<std::vector<int>> C(40);
        for (int n = 0; n < 40; ++n) {
            C[n].assign(n + 1, 1);
            for (int k = 1; k < n; ++k) C[n][k] = (C[n - 1][k - 1] + C[n - 1][k]) % p;
        }
        for (int n = 0; n < 40; ++n) {
            for (int k = 0; k <= n; ++k) EXPECT_EQ(padic_order_check(n, k, p), C[n][k] % p != 0);
        }
    }
}

TEST(SvDegrees, Examples) {
    EXPECT_EQ(sv_ramification_degree(9, 7, 2, 3), 192);
    EXPECT_EQ(sv_ramification_degree(21, 7, 2, 2), 424);
    EXPECT_EQ(sv_frobenius_degree(9, 7, 3), 544);
    EXPECT_EQ(sv_frobenius_degree(21, 7, 2), 728);
    EXPECT_EQ(sv_frobenius_degree(0, 7, 3), 400);
}

TEST(SvDegrees, RamificationBoundReproducesLowerBound) {
    // With eps2 = 2, r = 3: deg R >= (q+1)^2 + q(2g-2) iff g >= (q^2-2q+3)/6.
    for (std::int64_t q : {7, 8, 11, 13, 16}) {
        for (std::int64_t g = 0; g <= ihara_bound(q); ++g) {
            const bool holds = sv_ramification_degree(g, q, 2, 3) >= (q + 1) * (q + 1) + q * (2 * g - 2);
            EXPECT_EQ(holds, Rational(g) >= Rational(q * q - 2 * q + 3, 6)) << q << " " << g;
        }
    }
}

TEST(SvDegrees, FrobeniusClaimContradiction) {
    // eps2 >= 4 forces deg S >= 5(q+1)^2 + 5q(2g-2), equivalently (q+1)(q^2-5q-2) >= (4q-1)(2g-2).
    for (std::int64_t q : {7, 8, 11, 13, 16}) {
        for (std::int64_t g = 0; g <= ihara_bound(q); ++g) {
            const bool forced = sv_frobenius_degree(g, q, 3) >= 5 * (q + 1) * (q + 1) + 5 * q * (2 * g - 2);
            EXPECT_EQ(forced, (q + 1) * (q * q - 5 * q - 2) >= (4 * q - 1) * (2 * g - 2));
        }
    }
}

TEST(LowerBound, Examples) {
    EXPECT_EQ(prop31_lower_bound(7, 6), std::optional<std::int64_t>(7));
    EXPECT_EQ(prop31_lower_bound(7, 1), std::nullopt);
    EXPECT_EQ(prop31_lower_bound(13, 23), std::optional<std::int64_t>(25));
    EXPECT_THROW(prop31_lower_bound(9, 5), Error);
}

TEST(GapFilter, Examples) {
    EXPECT_EQ(genus_gap_filter(7), (GenusSet{6}));
    EXPECT_EQ(genus_gap_filter(8), (GenusSet{8}));
    EXPECT_EQ(genus_gap_filter(11), (GenusSet{16}));
    EXPECT_EQ(genus_gap_filter(13), (GenusSet{23, 24}));
    EXPECT_EQ(genus_gap_filter(16), (GenusSet{36, 37}));
    EXPECT_TRUE(genus_gap_filter(9).empty());
}

TEST(GapFilter, InsideLowRegion) {
    for (std::int64_t q = 7; q <= 16; ++q) {
        for (auto g : genus_gap_filter(q)) {
            EXPECT_EQ(genus_trichotomy(q, g), GenusClass::Low);
            EXPECT_NE(g, castelnuovo_c0(3, q).floor());
            EXPECT_NE(g, ihara_bound(q));
        }
    }
}

// The gap is the lower bound applied where Frobenius dimension 3 is forced, i.e.
// for g > c0(4); below that threshold r >= 4 is possible and no exclusion
// follows (for q = 7, g = 3 the hypothesis holds yet 3 is a realised genus).
TEST(GapFilter, DerivedFromLowerBound) {
    for (std::int64_t q : {7, 8, 11, 13, 16}) {
        const auto gap = genus_gap_filter(q);
        for (std::int64_t g = 0; g <= ihara_bound(q); ++g) {
            const auto bound = prop31_lower_bound(q, g);
            const bool contradicted = bound && *bound > g;
            if (gap.count(g)) {
                EXPECT_TRUE(contradicted) << q << " " << g;
            }
            const bool r3_forced = Rational(g) > castelnuovo_c0(4, q);
            EXPECT_EQ(gap.count(g) == 1, r3_forced && contradicted) << q << " " << g;
        }
    }
}

TEST(BoundsReport, Table) {
    const auto rep = bounds_report(7);
    ASSERT_EQ(rep.c0_table.size(), 7u);
    for (auto it = std::next(rep.c0_table.begin()); it != rep.c0_table.end(); ++it) {
        EXPECT_LE(it->second, std::prev(it)->second);
    }
    EXPECT_EQ(rep.ihara, 21);
    EXPECT_EQ(rep.gap_excluded, (GenusSet{6}));
    EXPECT_EQ(rep.low_ceiling, 7);
    EXPECT_EQ(rep.second_max, 9);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(46, 6), Rational(23, 3));
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
}
