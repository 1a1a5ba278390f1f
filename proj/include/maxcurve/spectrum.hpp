// Assembling the genus spectrum M(q^2).
//
// The bound engine yields a candidate superset; verified catalog curves and
// imported literature genera confirm members; registry exclusions remove
// members. Whatever is left is open.

#pragma once

#include "arith.hpp"
#include "bounds.hpp"
#include "curve.hpp"
#include "error.hpp"
#include "records.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace maxcurve {

/// Reason attached to genera removed by the Stohr-Voloch gap.
inline constexpr std::string_view kGapReason = "stohr-voloch-gap";

inline void require_spectrum_q(std::int64_t q) {
    if (q < 7 || !is_prime_power(static_cast<std::uint64_t>(q))) {
        throw Error(Errc::UnsupportedQ, "q = " + std::to_string(q) + " must be a prime power >= 7");
    }
}

/// ([0, floor c1(3)] u {floor c0(3)} u {c0(2)}) minus the gap filter.
inline GenusSet candidate_superset(std::int64_t q) {
    require_spectrum_q(q);
    GenusSet s;
    for (std::int64_t g = 0; g <= c1_3(q).floor(); ++g) s.insert(g);
    s.insert(castelnuovo_c0(3, q).floor());
    s.insert(ihara_bound(q));
    for (auto g : genus_gap_filter(q)) s.erase(g);
    return s;
}

struct EntryReport {
    CatalogEntry entry;
    std::optional<CurveReport> report;
    std::string error; // non-empty when validation failed
    bool confirmed = false;
};

struct CatalogResult {
    GenusSet confirmed;
    std::vector<EntryReport> entries;
};

/// Verifies every entry over F_{q^2}; entries for other q are skipped.
/// Failures land in the per-entry report instead of aborting the run.
inline CatalogResult catalog_verify(const std::vector<CatalogEntry> &entries, std::int64_t q,
                                    const CountOptions &opts = {}) {
    CatalogResult out;
    for (const auto &e : entries) {
        if (e.q != q) continue;
        EntryReport er{e, std::nullopt, {}, false};
        try {
            if (e.m < 2) throw Error(Errc::InvalidExponent, "m must be at least 2");
            const auto curve = curve_make(static_cast<std::uint64_t>(e.q), static_cast<std::uint64_t>(e.m), e.f_coeffs);
            er.report = is_maximal(curve, opts);
            const auto g = static_cast<std::int64_t>(er.report->genus);
            if (e.claimed_genus && *e.claimed_genus != g) {
                er.error = "claimed genus " + std::to_string(*e.claimed_genus) + " but computed " + std::to_string(g);
            } else if (!er.report->maximal) {
                er.error = "not maximal";
            } else {
                er.confirmed = true;
                out.confirmed.insert(g);
            }
        } catch (const Error &err) {
            if (is_inconsistency(err.code())) throw;
            er.error = err.what();
        }
        out.entries.push_back(std::move(er));
    }
    return out;
}

/// Registry entries for q as a set, merged across records.
inline GenusSet known_for(const std::vector<KnownGenera> &known, std::int64_t q) {
    GenusSet s;
    for (const auto &k : known) {
        if (k.q == q) s.insert(k.genera.begin(), k.genera.end());
    }
    return s;
}

struct ReferenceDiff {
    std::string source;
    GenusSet reference;
    GenusSet extra;   // computed open, absent from the reference list
    GenusSet missing; // in the reference list, not computed open
    bool agrees() const noexcept { return extra.empty() && missing.empty(); }

    friend bool operator==(const ReferenceDiff &, const ReferenceDiff &) = default;
};

struct SpectrumReport {
    std::int64_t q = 0;
    GenusSet superset;
    GenusSet verified;
    GenusSet imported; // confirmed from literature, not verified here
    GenusSet confirmed;
    std::map<std::int64_t, std::string> excluded;       // registry exclusions inside the superset
    std::map<std::int64_t, std::string> bound_excluded; // removed by the gap filter
    GenusSet open;
    std::optional<ReferenceDiff> reference;

    bool complete() const noexcept { return open.empty(); }
    /// Lower bound on M(q^2): confirmed genera. Equal to M(q^2) when complete.
    const GenusSet &spectrum() const noexcept { return confirmed; }

    friend bool operator==(const SpectrumReport &, const SpectrumReport &) = default;
};

/// Partitions the candidate superset. Throws InconsistentConfirmation when a
/// confirmed genus lies outside the superset and InconsistentExclusion when a
/// genus is both confirmed and excluded.
inline SpectrumReport spectrum_report(std::int64_t q, const GenusSet &verified,
                                      const std::vector<ExclusionEntry> &exclusions,
                                      const GenusSet &imported = {}) {
    SpectrumReport rep;
    rep.q = q;
    rep.superset = candidate_superset(q);
    rep.verified = verified;
    rep.imported = imported;
    for (auto g : imported) {
        if (!verified.count(g)) continue;
        rep.imported.erase(g);
    }
    rep.confirmed = verified;
    rep.confirmed.insert(imported.begin(), imported.end());
    for (auto g : rep.confirmed) {
        if (!rep.superset.count(g)) {
            throw Error(Errc::InconsistentConfirmation,
                        "genus " + std::to_string(g) + " confirmed for q = " + std::to_string(q) +
                            " but outside the bound-engine superset");
        }
    }
    for (auto g : genus_gap_filter(q)) rep.bound_excluded.emplace(g, std::string(kGapReason));
    for (const auto &ex : exclusions) {
        if (ex.q != q) continue;
        if (rep.confirmed.count(ex.g)) {
            throw Error(Errc::InconsistentExclusion,
                        "genus " + std::to_string(ex.g) + " both confirmed and excluded (" + ex.reason + ")");
        }
        if (rep.superset.count(ex.g)) rep.excluded.emplace(ex.g, ex.reason);
    }
    for (auto g : rep.superset) {
        if (!rep.confirmed.count(g) && !rep.excluded.count(g)) rep.open.insert(g);
    }
    return rep;
}

/// Compares the computed open set against a published list for the same q.
inline void attach_reference(SpectrumReport &rep, const std::vector<ReferenceOpen> &refs) {
    for (const auto &r : refs) {
        if (r.q != rep.q) continue;
        ReferenceDiff d;
        d.source = r.source;
        d.reference = r.genera;
        std::set_difference(rep.open.begin(), rep.open.end(), r.genera.begin(), r.genera.end(),
                            std::inserter(d.extra, d.extra.end()));
        std::set_difference(r.genera.begin(), r.genera.end(), rep.open.begin(), rep.open.end(),
                            std::inserter(d.missing, d.missing.end()));
        rep.reference = std::move(d);
        return;
    }
}

} // namespace maxcurve
