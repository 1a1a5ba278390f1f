// Line-oriented `key=value` data files.
//
// One record per line, tokens separated by single spaces, `#` starts a
// comment. Catalog, exclusion, known-genera and reference-open records.

#pragma once

#include "error.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace maxcurve {

struct CatalogEntry {
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> f_coeffs;
    std::optional<std::int64_t> claimed_genus;
    std::string note;
    std::size_t line = 0;
};

struct ExclusionEntry {
    std::int64_t q = 0;
    std::int64_t g = 0;
    std::string reason;
};

/// Genera taken from the literature as existing, not verified here.
struct KnownGenera {
    std::int64_t q = 0;
    std::set<std::int64_t> genera;
    std::string source;
};

/// A published list of open genera, used to flag divergences.
struct ReferenceOpen {
    std::int64_t q = 0;
    std::set<std::int64_t> genera;
    std::string source;
};

struct RecordError {
    std::size_t line;
    std::string message;
};

template <class T>
struct Parsed {
    std::vector<T> records;
    std::vector<RecordError> errors;
};

namespace detail {

using Fields = std::map<std::string, std::string, std::less<>>;

inline std::int64_t to_int(std::string_view s, std::string_view key) {
    std::int64_t v = 0;
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw Error(Errc::ParseError, "bad integer '" + std::string(s) + "' for " + std::string(key));
    }
    return v;
}

inline std::vector<std::int64_t> to_int_list(std::string_view s, std::string_view key) {
    std::vector<std::int64_t> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = s.find(',', pos);
        out.push_back(to_int(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos), key));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline Fields split_fields(std::string_view line) {
    Fields out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t sp = line.find(' ', pos);
        if (sp == std::string_view::npos) sp = line.size();
        const std::string_view tok = line.substr(pos, sp - pos);
        if (tok.empty()) throw Error(Errc::ParseError, "empty token (tokens use single spaces)");
        const std::size_t eq = tok.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw Error(Errc::ParseError, "token '" + std::string(tok) + "' is not key=value");
        }
        auto [it, fresh] = out.emplace(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
        if (!fresh) throw Error(Errc::ParseError, "duplicate key '" + it->first + "'");
        pos = sp + 1;
    }
    return out;
}

inline const std::string &require(const Fields &f, std::string_view key) {
    auto it = f.find(key);
    if (it == f.end()) throw Error(Errc::ParseError, "missing key '" + std::string(key) + "'");
    return it->second;
}

inline void reject_unknown(const Fields &f, std::initializer_list<std::string_view> allowed) {
    for (const auto &[k, v] : f) {
        bool ok = false;
        for (auto a : allowed) ok = ok || a == k;
        if (!ok) throw Error(Errc::ParseError, "unknown key '" + k + "'");
    }
}

// Calls `fn(fields, line_no)` for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::istream &in, std::vector<RecordError> &errors, Fn &&fn) {
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        if (line.empty()) continue;
        try {
            fn(split_fields(line), no);
        } catch (const Error &e) {
            errors.push_back({no, e.what()});
        }
    }
}

} // namespace detail

inline Parsed<CatalogEntry> parse_catalog(std::istream &in) {
    Parsed<CatalogEntry> out;
    detail::for_each_record(in, out.errors, [&](const detail::Fields &f, std::size_t no) {
        detail::reject_unknown(f, {"q", "m", "f", "genus", "note"});
        CatalogEntry e;
        e.q = detail::to_int(detail::require(f, "q"), "q");
        e.m = detail::to_int(detail::require(f, "m"), "m");
        e.f_coeffs = detail::to_int_list(detail::require(f, "f"), "f");
        if (auto it = f.find("genus"); it != f.end()) e.claimed_genus = detail::to_int(it->second, "genus");
        if (auto it = f.find("note"); it != f.end()) e.note = it->second;
        e.line = no;
        out.records.push_back(std::move(e));
    });
    return out;
}

inline Parsed<ExclusionEntry> parse_exclusions(std::istream &in) {
    Parsed<ExclusionEntry> out;
    detail::for_each_record(in, out.errors, [&](const detail::Fields &f, std::size_t) {
        detail::reject_unknown(f, {"q", "g", "ref"});
        ExclusionEntry e;
        e.q = detail::to_int(detail::require(f, "q"), "q");
        e.g = detail::to_int(detail::require(f, "g"), "g");
        e.reason = detail::require(f, "ref");
        if (e.g < 0 || e.g > e.q * (e.q - 1) / 2) {
            throw Error(Errc::ParseError, "excluded genus outside [0, q(q-1)/2]");
        }
        out.records.push_back(std::move(e));
    });
    return out;
}

inline Parsed<KnownGenera> parse_known(std::istream &in) {
    Parsed<KnownGenera> out;
    detail::for_each_record(in, out.errors, [&](const detail::Fields &f, std::size_t) {
        detail::reject_unknown(f, {"q", "known", "src"});
        KnownGenera e;
        e.q = detail::to_int(detail::require(f, "q"), "q");
        for (auto g : detail::to_int_list(detail::require(f, "known"), "known")) e.genera.insert(g);
        if (auto it = f.find("src"); it != f.end()) e.source = it->second;
        out.records.push_back(std::move(e));
    });
    return out;
}

inline Parsed<ReferenceOpen> parse_reference_open(std::istream &in) {
    Parsed<ReferenceOpen> out;
    detail::for_each_record(in, out.errors, [&](const detail::Fields &f, std::size_t) {
        detail::reject_unknown(f, {"q", "open", "src"});
        ReferenceOpen e;
        e.q = detail::to_int(detail::require(f, "q"), "q");
        for (auto g : detail::to_int_list(detail::require(f, "open"), "open")) e.genera.insert(g);
        if (auto it = f.find("src"); it != f.end()) e.source = it->second;
        out.records.push_back(std::move(e));
    });
    return out;
}

/// Opens `path` and runs `parse` on it; a missing file is a ParseError.
template <class ParseFn>
auto parse_file(const std::string &path, ParseFn &&parse) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return parse(in);
}

} // namespace maxcurve
