// Command-line front end.
//
// `bounds`, `genus`, `count`, `verify` and `spectrum` subcommands. With
// `--machine` every output line is a record of space-separated key=value
// tokens in a fixed order.
//
// Exit status: 0 success, 1 invalid input or usage, 2 library inconsistency.

#pragma once

#include "bounds.hpp"
#include "curve.hpp"
#include "error.hpp"
#include "records.hpp"
#include "spectrum.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace maxcurve::cli {

inline std::string join(const GenusSet &s, const char *sep = ",") {
    std::string out;
    for (auto g : s) {
        if (!out.empty()) out += sep;
        out += std::to_string(g);
    }
    return out;
}

inline std::string join_reasons(const std::map<std::int64_t, std::string> &m) {
    std::string out;
    for (const auto &[g, why] : m) {
        if (!out.empty()) out += ",";
        out += std::to_string(g) + ":" + why;
    }
    return out;
}

/// Spaces would break the token grammar.
inline std::string token_safe(std::string s) {
    for (auto &c : s) {
        if (c == ' ' || c == '\t') c = '_';
    }
    return s;
}

inline const char *yes_no(bool b) { return b ? "true" : "false"; }

inline void print_bounds(std::ostream &out, std::int64_t q, bool machine) {
    const BoundsReport rep = bounds_report(q);
    std::optional<GenusSet> superset;
    if (q >= 7 && is_prime_power(static_cast<std::uint64_t>(q))) superset = candidate_superset(q);
    if (machine) {
        for (const auto &[r, c] : rep.c0_table) {
            out << "q=" << q << " r=" << r << " c0=" << c << " floor=" << c.floor() << '\n';
        }
        out << "q=" << q << " c1_3=" << rep.c1_3 << " floor=" << rep.c1_3.floor() << '\n';
        out << "q=" << q << " ihara=" << rep.ihara << '\n';
        out << "q=" << q << " second_max=" << rep.second_max << '\n';
        out << "q=" << q << " r3_forced_above=" << rep.second_dim_floor << '\n';
        out << "q=" << q << " gap_excluded=" << join(rep.gap_excluded) << '\n';
        if (superset) out << "q=" << q << " superset=" << join(*superset) << '\n';
        return;
    }
    out << "Genus bounds for maximal curves over F_" << q * q << " (q = " << q << ")\n\n";
    out << "  r   c0(r)          floor\n";
    for (const auto &[r, c] : rep.c0_table) {
        std::string val = c.str();
        out << "  " << r << "   " << val << std::string(val.size() < 15 ? 15 - val.size() : 1, ' ')
            << c.floor() << '\n';
    }
    out << "\n  c1_3 = " << rep.c1_3 << " floor=" << rep.c1_3.floor() << '\n';
    out << "  ihara = q(q-1)/2 = " << rep.ihara << '\n';
    out << "  second largest genus floor(c0(3)) = " << rep.second_max << '\n';
    out << "  Frobenius dimension 3 forced for g > c0(4) = " << rep.second_dim_floor << '\n';
    if (q % 3 == 0) {
        out << "  gap_excluded = {} (q divisible by 3, gap filter inapplicable)\n";
    } else {
        out << "  gap_excluded = {" << join(rep.gap_excluded, ", ") << "}\n";
    }
    if (superset) out << "  candidate superset = {" << join(*superset, ", ") << "}\n";
}

inline void print_entry(std::ostream &out, const EntryReport &e, bool machine) {
    const auto &c = e.entry;
    if (machine) {
        out << "entry line=" << c.line << " q=" << c.q << " m=" << c.m << " f=";
        for (std::size_t i = 0; i < c.f_coeffs.size(); ++i) out << (i ? "," : "") << c.f_coeffs[i];
        if (e.report) {
            out << " genus=" << e.report->genus << " N=" << e.report->points
                << " maximal=" << yes_no(e.report->maximal) << " deficiency=" << e.report->deficiency;
        }
        out << " status=" << (e.confirmed ? "confirmed" : "rejected");
        if (!c.note.empty()) out << " note=" << token_safe(c.note);
        if (!e.error.empty()) out << " error=" << token_safe(e.error);
        out << '\n';
        return;
    }
    out << "  line " << c.line << ": m=" << c.m;
    if (!c.note.empty()) out << " [" << c.note << "]";
    if (e.report) {
        out << "  genus=" << e.report->genus << " N=" << e.report->points
            << " maximal=" << yes_no(e.report->maximal) << " deficiency=" << e.report->deficiency;
    }
    out << (e.confirmed ? "  confirmed" : "  REJECTED");
    if (!e.error.empty()) out << " (" << e.error << ")";
    out << '\n';
}

inline void print_spectrum(std::ostream &out, const SpectrumReport &rep, bool machine) {
    const auto q = rep.q;
    if (machine) {
        out << "q=" << q << " superset=" << join(rep.superset) << '\n';
        out << "q=" << q << " verified=" << join(rep.verified) << '\n';
        out << "q=" << q << " imported=" << join(rep.imported) << '\n';
        out << "q=" << q << " confirmed=" << join(rep.confirmed) << '\n';
        out << "q=" << q << " excluded=" << join_reasons(rep.excluded) << '\n';
        out << "q=" << q << " bound_excluded=" << join_reasons(rep.bound_excluded) << '\n';
        out << "q=" << q << " open=" << join(rep.open) << '\n';
        out << "q=" << q << " complete=" << yes_no(rep.complete()) << '\n';
        if (rep.reference) {
            const auto &d = *rep.reference;
            out << "q=" << q << " reference_src=" << token_safe(d.source) << " reference_open=" << join(d.reference)
                << " extra=" << join(d.extra) << " missing=" << join(d.missing)
                << " agrees=" << yes_no(d.agrees()) << '\n';
        }
        return;
    }
    out << "Genus spectrum M(" << q << "^2)\n";
    out << "  candidate superset: {" << join(rep.superset, ", ") << "}\n";
    out << "  verified by point count: {" << join(rep.verified, ", ") << "}\n";
    out << "  imported from literature: {" << join(rep.imported, ", ") << "}\n";
    for (const auto &[g, why] : rep.bound_excluded) out << "  excluded g=" << g << " (" << why << ")\n";
    for (const auto &[g, why] : rep.excluded) out << "  excluded g=" << g << " (" << why << ")\n";
    out << "  open: {" << join(rep.open, ", ") << "}\n";
    if (rep.complete()) {
        out << "  M(" << q * q << ") = {" << join(rep.confirmed, ", ") << "}\n";
    } else {
        out << "  {" << join(rep.confirmed, ", ") << "} is contained in M(" << q * q << ")\n";
    }
    if (rep.reference) {
        const auto &d = *rep.reference;
        if (d.agrees()) {
            out << "  open set agrees with reference list (" << d.source << ")\n";
        } else {
            out << "  DISCREPANCY with reference list (" << d.source << ") {" << join(d.reference, ", ") << "}:";
            if (!d.extra.empty()) out << " computed open but unlisted {" << join(d.extra, ", ") << "}";
            if (!d.missing.empty()) out << " listed but not open {" << join(d.missing, ", ") << "}";
            out << '\n';
        }
    }
}

/// Runs one CLI invocation; `args` excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Genus bounds, curve verification and genus spectra for maximal curves over F_{q^2}", "maxcurve"};
    app.require_subcommand(1, 1);

    std::int64_t q = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> f;
    std::vector<std::string> catalogs, exclusion_files, known_files, reference_files;
    bool machine = false;
    std::uint64_t max_field = kMaxFieldCardinality;
    unsigned threads = 1;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--q", q, "field parameter q (the field is F_{q^2})")->required();
        sub->add_flag("--machine", machine, "key=value records, one per line");
    };
    auto add_curve = [&](CLI::App *sub) {
        add_common(sub);
        sub->add_option("--m", m, "exponent m in y^m = f(x)")->required();
        sub->add_option("--f", f, "ascending integer coefficients of f")->required()->delimiter(',');
    };
    auto add_count = [&](CLI::App *sub) {
        sub->add_option("--max-field", max_field, "largest field enumerated by point counting");
        sub->add_option("--threads", threads, "point-counting workers (0 = hardware)");
    };

    auto *bounds = app.add_subcommand("bounds", "Castelnuovo and Stohr-Voloch genus bounds for q");
    add_common(bounds);
    auto *genus_cmd = app.add_subcommand("genus", "genus of y^m = f(x) over F_{q^2}");
    add_curve(genus_cmd);
    auto *count = app.add_subcommand("count", "rational points of y^m = f(x) over F_{q^2}");
    add_curve(count);
    add_count(count);
    auto *verify = app.add_subcommand("verify", "genus, point count and maximality");
    add_curve(verify);
    add_count(verify);
    auto *spectrum = app.add_subcommand("spectrum", "assemble the genus spectrum M(q^2)");
    add_common(spectrum);
    add_count(spectrum);
    spectrum->add_option("--catalog", catalogs, "catalog of curves to verify");
    spectrum->add_option("--exclusions", exclusion_files, "registry of excluded genera");
    spectrum->add_option("--known", known_files, "genera imported from the literature");
    spectrum->add_option("--reference-open", reference_files, "published open lists to compare against");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 1;
    }

    const CountOptions opts{threads, max_field};
    try {
        if (bounds->parsed()) {
            print_bounds(out, q, machine);
        } else if (genus_cmd->parsed() || count->parsed() || verify->parsed()) {
            if (q < 2 || m < 2) throw Error(Errc::BadFieldRequest, "need q >= 2 and m >= 2");
            const auto C = curve_make(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(m), f);
            if (genus_cmd->parsed()) {
                const auto g = genus(C);
                if (machine) {
                    out << "genus=" << g << '\n';
                } else {
                    out << "curve: " << C.describe() << "\ngenus=" << g << '\n';
                }
            } else if (count->parsed()) {
                const auto N = count_points(C, opts);
                if (machine) {
                    out << "N=" << N << '\n';
                } else {
                    out << "curve: " << C.describe() << '\n';
                    for (const auto &d : ramification_data(C)) {
                        out << "  place ";
                        if (d.is_infinite()) {
                            out << "inf";
                        } else {
                            out << "x=" << *d.point;
                        }
                        out << " v=" << d.valuation << " r=" << d.r << " u=" << d.unit
                            << " rational_places=" << nth_root_count(d.unit, d.r) << '\n';
                    }
                    out << "N=" << N << '\n';
                }
            } else {
                const auto rep = is_maximal(C, opts);
                if (!machine) out << "curve: " << C.describe() << '\n';
                out << "genus=" << rep.genus << " N=" << rep.points << " maximal=" << yes_no(rep.maximal)
                    << " deficiency=" << rep.deficiency << '\n';
            }
        } else if (spectrum->parsed()) {
            require_spectrum_q(q);
            std::vector<CatalogEntry> entries;
            std::vector<RecordError> entry_errors;
            for (const auto &path : catalogs) {
                auto parsed = parse_file(path, [](std::istream &in) { return parse_catalog(in); });
                entries.insert(entries.end(), parsed.records.begin(), parsed.records.end());
                for (auto &e : parsed.errors) entry_errors.push_back({e.line, path + ": " + e.message});
            }
            std::vector<ExclusionEntry> exclusions;
            for (const auto &path : exclusion_files) {
                auto parsed = parse_file(path, [](std::istream &in) { return parse_exclusions(in); });
                if (!parsed.errors.empty()) {
                    throw Error(Errc::ParseError, path + ":" + std::to_string(parsed.errors[0].line) + ": " +
                                                      parsed.errors[0].message);
                }
                exclusions.insert(exclusions.end(), parsed.records.begin(), parsed.records.end());
            }
            std::vector<KnownGenera> known;
            for (const auto &path : known_files) {
                auto parsed = parse_file(path, [](std::istream &in) { return parse_known(in); });
                if (!parsed.errors.empty()) {
                    throw Error(Errc::ParseError, path + ":" + std::to_string(parsed.errors[0].line) + ": " +
                                                      parsed.errors[0].message);
                }
                known.insert(known.end(), parsed.records.begin(), parsed.records.end());
            }
            std::vector<ReferenceOpen> refs;
            for (const auto &path : reference_files) {
                auto parsed = parse_file(path, [](std::istream &in) { return parse_reference_open(in); });
                if (!parsed.errors.empty()) {
                    throw Error(Errc::ParseError, path + ":" + std::to_string(parsed.errors[0].line) + ": " +
                                                      parsed.errors[0].message);
                }
                refs.insert(refs.end(), parsed.records.begin(), parsed.records.end());
            }

            const CatalogResult verified = catalog_verify(entries, q, opts);
            SpectrumReport rep = spectrum_report(q, verified.confirmed, exclusions, known_for(known, q));
            attach_reference(rep, refs);

            if (!machine && !verified.entries.empty()) out << "Catalog entries for q = " << q << ":\n";
            for (const auto &e : verified.entries) print_entry(out, e, machine);
            for (const auto &e : entry_errors) {
                if (machine) {
                    out << "entry_error line=" << e.line << " error=" << token_safe(e.message) << '\n';
                } else {
                    out << "  parse error at line " << e.line << ": " << e.message << '\n';
                }
            }
            if (!machine) out << '\n';
            print_spectrum(out, rep, machine);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return is_inconsistency(e.code()) ? 2 : 1;
    }
    return 0;
}

} // namespace maxcurve::cli
