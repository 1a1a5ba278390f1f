#include <maxcurve/spectrum.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace maxcurve;

namespace {

std::string data(const char *name) { return std::string(MAXCURVE_DATA_DIR) + "/" + name; }

std::vector<CatalogEntry> load_catalog(const char *name) {
    auto parsed = parse_file(data(name), [](std::istream &in) { return parse_catalog(in); });
    EXPECT_TRUE(parsed.errors.empty());
    return parsed.records;
}

GenusSet range(std::int64_t lo, std::int64_t hi) {
    GenusSet s;
    for (auto g = lo; g <= hi; ++g) s.insert(g);
    return s;
}

GenusSet unite(GenusSet a, const GenusSet &b) {
    a.insert(b.begin(), b.end());
    return a;
}

void expect_partition(const SpectrumReport &rep) {
    GenusSet all = rep.confirmed;
    for (const auto &[g, why] : rep.excluded) {
        EXPECT_FALSE(rep.confirmed.count(g));
        all.insert(g);
    }
    for (auto g : rep.open) {
        EXPECT_FALSE(rep.confirmed.count(g));
        EXPECT_FALSE(rep.excluded.count(g));
        all.insert(g);
    }
    EXPECT_EQ(all, rep.superset);
    EXPECT_EQ(rep.confirmed.size() + rep.excluded.size() + rep.open.size(), rep.superset.size());
}

std::vector<ExclusionEntry> as_entries(const SpectrumReport &rep) {
    std::vector<ExclusionEntry> out;
    for (const auto &[g, why] : rep.excluded) out.push_back({rep.q, g, why});
    return out;
}

} // namespace

TEST(CandidateSuperset, Examples) {
    EXPECT_EQ(candidate_superset(7), (GenusSet{0, 1, 2, 3, 4, 5, 7, 9, 21}));
    EXPECT_EQ(candidate_superset(9), unite(range(0, 12), {16, 36}));
    auto s8 = unite(range(0, 10), {12, 28});
    s8.erase(8);
    EXPECT_EQ(candidate_superset(8), s8);
    EXPECT_THROW(candidate_superset(5), Error);
    EXPECT_THROW(candidate_superset(10), Error);
}

TEST(CatalogVerify, ExampleCurvesOverF49) {
    const auto res = catalog_verify(load_catalog("catalog_q7.txt"), 7);
    EXPECT_EQ(res.confirmed, (GenusSet{0, 1, 2, 3, 5, 7, 9, 21}));
    ASSERT_EQ(res.entries.size(), 8u);
    for (const auto &e : res.entries) {
        EXPECT_TRUE(e.confirmed) << e.entry.note << " " << e.error;
        EXPECT_EQ(e.report->points, 50 + 14 * e.report->genus);
    }
}

TEST(CatalogVerify, HermitianPerQ) {
    const auto entries = load_catalog("catalog_hermitian.txt");
    for (std::int64_t q : {7, 8, 9, 11, 13, 16}) {
        EXPECT_EQ(catalog_verify(entries, q).confirmed, (GenusSet{q * (q - 1) / 2})) << q;
    }
}

TEST(CatalogVerify, QuotientQ8) {
    std::istringstream in("q=8 m=9 f=0,1,1,0,1 genus=12 note=trace\n");
    const auto res = catalog_verify(parse_catalog(in).records, 8);
    EXPECT_EQ(res.confirmed, (GenusSet{12}));
}

TEST(CatalogVerify, FailuresAreReported) {
    std::istringstream in("q=7 m=3 f=0,1,0,1\n"        // not maximal
                          "q=7 m=2 f=0,1,0,1 genus=4\n" // wrong claimed genus
                          "q=7 m=7 f=0,1\n"             // p | m
                          "q=8 m=3 f=0,1\n");           // other q, skipped
    const auto res = catalog_verify(parse_catalog(in).records, 7);
    EXPECT_TRUE(res.confirmed.empty());
    ASSERT_EQ(res.entries.size(), 3u);
    EXPECT_EQ(res.entries[0].error, "not maximal");
    EXPECT_NE(res.entries[1].error.find("claimed genus 4"), std::string::npos);
    EXPECT_NE(res.entries[2].error.find("ExponentNotCoprimeToCharacteristic"), std::string::npos);
}

TEST(SpectrumReport, Q7IsComplete) {
    const auto verified = catalog_verify(load_catalog("catalog_q7.txt"), 7).confirmed;
    const auto rep = spectrum_report(7, verified, {{7, 4, "Kudo-Harashita-2016"}});
    EXPECT_TRUE(rep.open.empty());
    EXPECT_TRUE(rep.complete());
    EXPECT_EQ(rep.spectrum(), (GenusSet{0, 1, 2, 3, 5, 7, 9, 21}));
    EXPECT_EQ(rep.excluded.at(4), "Kudo-Harashita-2016");
    EXPECT_EQ(rep.bound_excluded.at(6), kGapReason);
    expect_partition(rep);
}

TEST(SpectrumReport, OpenSetsFromKnownGenera) {
    auto rep = spectrum_report(9, {}, {}, {0, 1, 2, 3, 4, 6, 8, 9, 12, 16, 36});
    EXPECT_EQ(rep.open, (GenusSet{5, 7, 10, 11}));
    expect_partition(rep);

    rep = spectrum_report(8, {}, {}, {0, 1, 2, 3, 4, 6, 7, 9, 10, 12, 28});
    EXPECT_EQ(rep.open, (GenusSet{5}));

    rep = spectrum_report(16, {}, {}, {0, 1, 2, 4, 6, 8, 12, 24, 28, 40, 56, 120});
    GenusSet expected{3, 5, 7, 9, 10, 11, 25, 26, 27, 38, 39};
    expected = unite(expected, range(13, 23));
    expected = unite(expected, range(29, 35));
    EXPECT_EQ(rep.open, expected);
    expect_partition(rep);

    rep = spectrum_report(11, {}, {}, {0, 1, 2, 3, 4, 5, 7, 9, 10, 11, 13, 15, 18, 19, 25, 55});
    EXPECT_EQ(rep.open, (GenusSet{6, 8, 12, 14, 17}));
}

TEST(SpectrumReport, ImportedAreLabelledSeparately) {
    const auto rep = spectrum_report(8, {28, 12}, {}, {0, 1, 12});
    EXPECT_EQ(rep.verified, (GenusSet{12, 28}));
    EXPECT_EQ(rep.imported, (GenusSet{0, 1}));
    EXPECT_EQ(rep.confirmed, (GenusSet{0, 1, 12, 28}));
}

TEST(SpectrumReport, Idempotent) {
    const auto verified = catalog_verify(load_catalog("catalog_q7.txt"), 7).confirmed;
    const auto rep = spectrum_report(7, verified, {{7, 4, "KH"}, {8, 5, "other-q"}});
    const auto again = spectrum_report(7, rep.verified, as_entries(rep), rep.imported);
    EXPECT_EQ(rep, again);

    const auto r13 = spectrum_report(13, {78, 36}, {}, {0, 2, 3, 6, 9, 12, 15, 18, 26});
    EXPECT_EQ(spectrum_report(13, r13.verified, as_entries(r13), r13.imported), r13);
}

TEST(SpectrumReport, Inconsistencies) {
    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.code();
        }
        return Errc::ParseError;
    };
    EXPECT_EQ(code([] { spectrum_report(7, {6}, {}); }), Errc::InconsistentConfirmation);
    EXPECT_EQ(code([] { spectrum_report(7, {8}, {}); }), Errc::InconsistentConfirmation);
    EXPECT_EQ(code([] { spectrum_report(7, {4}, {{7, 4, "KH"}}); }), Errc::InconsistentExclusion);
    EXPECT_TRUE(is_inconsistency(Errc::InconsistentConfirmation));
    EXPECT_FALSE(is_inconsistency(Errc::ParseError));
}

TEST(SpectrumReport, ConfirmedGeneraRespectBounds) {
    for (const char *cat : {"catalog_q7.txt", "catalog_hermitian.txt", "catalog_quotient.txt"}) {
        const auto entries = load_catalog(cat);
        for (std::int64_t q : {7, 8, 9, 11, 13, 16}) {
            for (auto g : catalog_verify(entries, q).confirmed) {
                EXPECT_NE(genus_trichotomy(q, g), GenusClass::Forbidden);
                EXPECT_FALSE(genus_gap_filter(q).count(g));
            }
        }
    }
}

TEST(SpectrumReport, ReferenceComparison) {
    auto rep = spectrum_report(11, {}, {}, {0, 1, 2, 3, 4, 5, 7, 9, 10, 11, 13, 15, 18, 19, 25, 55});
    attach_reference(rep, {{11, {8, 12, 14, 17}, "list"}});
    ASSERT_TRUE(rep.reference);
    EXPECT_FALSE(rep.reference->agrees());
    EXPECT_EQ(rep.reference->extra, (GenusSet{6}));
    EXPECT_TRUE(rep.reference->missing.empty());

    auto rep9 = spectrum_report(9, {}, {}, {0, 1, 2, 3, 4, 6, 8, 9, 12, 16, 36});
    attach_reference(rep9, {{9, {5, 7, 10, 11}, "list"}});
    EXPECT_TRUE(rep9.reference->agrees());
}
