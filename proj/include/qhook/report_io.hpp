#ifndef QHOOK_REPORT_IO_HPP
#define QHOOK_REPORT_IO_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <qhook/identities.hpp>
#include <qhook/series.hpp>
#include <qhook/verify.hpp>

// Serialization of tables, series dumps and check reports. Coefficients are
// written as decimal strings in JSON; object keys come out sorted.

namespace qhook::io
{

enum class format { json, csv, text };

inline format parse_format(std::string_view s)
{
    if (s == "json") {
        return format::json;
    }
    if (s == "csv") {
        return format::csv;
    }
    if (s == "text") {
        return format::text;
    }
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

inline std::string dec(const integer &v)
{
    return v.str();
}

struct table_row {
    std::size_t n;
    integer value;
    // Second source and agreement flag, present when both sources were computed.
    std::optional<integer> other;
};

struct table {
    unsigned t;
    unsigned k;
    std::string source;
    std::vector<table_row> rows;

    [[nodiscard]] bool all_match() const
    {
        for (const auto &r : rows) {
            if (r.other && *r.other != r.value) {
                return false;
            }
        }
        return true;
    }
};

inline nlohmann::json to_json(const sample &s)
{
    return {{"n", s.n}, {"lhs", dec(s.lhs)}, {"rhs", dec(s.rhs)}, {"claim", s.claim}};
}

inline nlohmann::json to_json(const check_report &r)
{
    auto ces = nlohmann::json::array();
    for (const auto &s : r.counterexamples()) {
        ces.push_back(to_json(s));
    }
    auto info = nlohmann::json::array();
    for (const auto &s : r.informational()) {
        info.push_back(to_json(s));
    }
    return {{"check_name", r.check_name()},
            {"range", {r.n_lo(), r.n_hi()}},
            {"passed", r.passed()},
            {"counterexamples", ces},
            {"informational", info},
            {"runtime_note", r.runtime_note()}};
}

inline void write_reports(std::ostream &os, const std::vector<check_report> &reports, format fmt)
{
    switch (fmt) {
        case format::json: {
            nlohmann::json out;
            if (reports.size() == 1u) {
                out = to_json(reports.front());
            } else {
                out = nlohmann::json::array();
                for (const auto &r : reports) {
                    out.push_back(to_json(r));
                }
            }
            os << out.dump(2) << '\n';
            break;
        }
        case format::csv:
            os << "check,n,lhs,rhs\n";
            for (const auto &r : reports) {
                for (const auto &s : r.counterexamples()) {
                    os << r.check_name();
                    if (!s.claim.empty()) {
                        os << ':' << s.claim;
                    }
                    os << ',' << s.n << ',' << dec(s.lhs) << ',' << dec(s.rhs) << '\n';
                }
            }
            break;
        case format::text:
            for (const auto &r : reports) {
                os << (r.passed() ? "PASS " : "FAIL ") << r.check_name() << " [" << r.n_lo() << ", " << r.n_hi()
                   << "]";
                if (!r.runtime_note().empty()) {
                    os << "  (" << r.runtime_note() << ")";
                }
                os << '\n';
                for (const auto &s : r.counterexamples()) {
                    os << "  n=" << s.n << " lhs=" << dec(s.lhs) << " rhs=" << dec(s.rhs);
                    if (!s.claim.empty()) {
                        os << " [" << s.claim << ']';
                    }
                    os << '\n';
                }
            }
            break;
    }
}

inline void write_table(std::ostream &os, const table &tab, format fmt)
{
    const bool both = !tab.rows.empty() && tab.rows.front().other.has_value();
    switch (fmt) {
        case format::json: {
            auto rows = nlohmann::json::array();
            for (const auto &r : tab.rows) {
                nlohmann::json row{{"n", r.n}, {"value", dec(r.value)}};
                if (r.other) {
                    row["genfun"] = dec(*r.other);
                    row["match"] = *r.other == r.value;
                }
                rows.push_back(std::move(row));
            }
            const nlohmann::json out{{"t", tab.t}, {"k", tab.k}, {"source", tab.source}, {"rows", rows}};
            os << out.dump(2) << '\n';
            break;
        }
        case format::csv:
            os << (both ? "n,value,genfun,match\n" : "n,value\n");
            for (const auto &r : tab.rows) {
                os << r.n << ',' << dec(r.value);
                if (r.other) {
                    os << ',' << dec(*r.other) << ',' << (*r.other == r.value ? "true" : "false");
                }
                os << '\n';
            }
            break;
        case format::text:
            os << "# b_{" << tab.t << ',' << tab.k << "}(n), source " << tab.source << '\n';
            for (const auto &r : tab.rows) {
                os << r.n << '\t' << dec(r.value);
                if (r.other) {
                    os << '\t' << dec(*r.other) << '\t' << (*r.other == r.value ? "ok" : "MISMATCH");
                }
                os << '\n';
            }
            break;
    }
}

inline void write_series(std::ostream &os, const named_series &ns, order upto, format fmt)
{
    const auto &s = ns.value;
    switch (fmt) {
        case format::json: {
            auto coeffs = nlohmann::json::array();
            for (std::size_t n = 0; n <= upto; ++n) {
                coeffs.push_back(dec(s[n]));
            }
            const nlohmann::json out{
                {"name", ns.name}, {"trunc", upto}, {"definition", ns.definition}, {"coefficients", coeffs}};
            os << out.dump(2) << '\n';
            break;
        }
        case format::csv:
            os << "n,value\n";
            for (std::size_t n = 0; n <= upto; ++n) {
                os << n << ',' << dec(s[n]) << '\n';
            }
            break;
        case format::text:
            os << "# " << ns.name << " = " << ns.definition << '\n';
            for (std::size_t n = 0; n <= upto; ++n) {
                os << n << '\t' << dec(s[n]) << '\n';
            }
            break;
    }
}

} // namespace qhook::io

#endif
