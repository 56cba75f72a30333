#ifndef QHOOK_CLI_HPP
#define QHOOK_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qhook/identities.hpp>
#include <qhook/partitions.hpp>
#include <qhook/report_io.hpp>
#include <qhook/verify.hpp>

namespace qhook::cli
{

// 0 = every claim held, 1 = a mathematical counterexample, 2 = usage or configuration error.
enum exit_status : int { ok = 0, counterexample = 1, usage_error = 2 };

class unsupported_genfun : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct run_config {
    std::string command;
    // table
    unsigned t = 2;
    unsigned k = 1;
    std::string source = "oracle";
    // verify
    std::vector<std::string> checks;
    bool all = false;
    unsigned oracle_ceiling = default_oracle_ceiling;
    bool serial = false;
    // series
    std::string name;
    std::size_t trunc = min_build_trunc;
    // shared
    std::size_t n_max = 0;
    std::string format = "text";
    std::string out_path;
};

inline bool has_genfun(unsigned t, unsigned k)
{
    return (t == 2u && k == 1u) || (t == 2u && k == 2u) || (t == 3u && k == 2u);
}

inline int cmd_table(const run_config &cfg, std::ostream &out, std::ostream &err)
{
    if (cfg.t < 2u || cfg.k < 1u) {
        throw std::invalid_argument("table needs t >= 2 and k >= 1");
    }
    if (cfg.source != "oracle" && !has_genfun(cfg.t, cfg.k)) {
        throw unsupported_genfun("no generating function for b_{" + std::to_string(cfg.t) + ","
                                 + std::to_string(cfg.k) + "}; use --source oracle");
    }
    if (cfg.source != "genfun" && cfg.n_max > default_oracle_ceiling) {
        err << "warning: brute-force enumeration beyond n=" << default_oracle_ceiling
            << " grows like the partition function and may be slow\n";
    }
    const auto n_max = static_cast<unsigned>(cfg.n_max);
    io::table tab{cfg.t, cfg.k, cfg.source, {}};
    std::vector<integer> oracle, genfun;
    if (cfg.source != "genfun") {
        oracle = make_hook_count_table(cfg.t, cfg.k, n_max).values;
    }
    if (cfg.source != "oracle") {
        const auto name = "B" + std::to_string(cfg.t) + std::to_string(cfg.k);
        const auto s = build(name, std::max<order>(cfg.n_max, min_build_trunc)).value;
        genfun.assign(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(cfg.n_max + 1u));
    }
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        if (cfg.source == "both") {
            tab.rows.push_back({n, oracle[n], genfun[n]});
        } else {
            tab.rows.push_back({n, cfg.source == "oracle" ? oracle[n] : genfun[n], std::nullopt});
        }
    }
    io::write_table(out, tab, io::parse_format(cfg.format));
    return tab.all_match() ? ok : counterexample;
}

inline int cmd_verify(const run_config &cfg, std::ostream &out, std::ostream &)
{
    if (cfg.n_max < min_build_trunc) {
        throw std::invalid_argument("verify needs --n-max >= " + std::to_string(min_build_trunc));
    }
    std::vector<std::string> selected = cfg.all ? check_names() : cfg.checks;
    for (const auto &c : selected) {
        if (!is_check_name(c)) {
            throw unknown_selector("unknown check '" + c + "'");
        }
    }
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    const suite_config scfg{cfg.n_max, cfg.oracle_ceiling};
    std::vector<check_report> reports;
    if (cfg.all) {
        reports = run_all(scfg, !cfg.serial);
    } else {
        for (const auto &c : selected) {
            reports.push_back(run_check(c, scfg));
        }
    }
    io::write_reports(out, reports, io::parse_format(cfg.format));
    const bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed(); });
    return all_passed ? ok : counterexample;
}

inline int cmd_series(const run_config &cfg, std::ostream &out, std::ostream &)
{
    const auto ns = build(cfg.name, cfg.trunc);
    io::write_series(out, ns, cfg.trunc, io::parse_format(cfg.format));
    return ok;
}

// Entry point shared by the qhook binary and the tests.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of hook-length inequalities for t-regular partitions", "qhook"};
    app.require_subcommand(1, 1);
    run_config cfg;
    bool seedless = false;
    app.add_flag("--seedless", seedless, "Accepted for compatibility; every run is deterministic");

    const std::vector<std::string> formats{"json", "csv", "text"};

    auto *table = app.add_subcommand("table", "Tabulate b_{t,k}(n) from brute force and/or generating functions");
    table->add_option("--t", cfg.t, "Regularity modulus (t >= 2)")->required();
    table->add_option("--k", cfg.k, "Hook length (k >= 1)")->required();
    table->add_option("--n-max", cfg.n_max, "Largest n")->envname("QHOOK_N_MAX")->default_val(default_oracle_ceiling);
    table->add_option("--source", cfg.source, "oracle, genfun or both")
        ->check(CLI::IsMember({"oracle", "genfun", "both"}))
        ->default_val("oracle");
    table->add_option("--format", cfg.format)->check(CLI::IsMember(formats))->default_val("text");
    table->add_option("--out", cfg.out_path, "Write to PATH instead of standard output");

    auto *verify = app.add_subcommand("verify", "Run named checks and report counterexamples");
    auto *check_opt = verify->add_option("--check", cfg.checks, "Check name (repeatable)");
    auto *all_opt = verify->add_flag("--all", cfg.all, "Run every check");
    check_opt->excludes(all_opt);
    verify->add_option("--n-max", cfg.n_max, "Largest exponent for series-backed checks")
        ->envname("QHOOK_N_MAX")
        ->default_val(default_series_n_max);
    verify->add_option("--oracle-ceiling", cfg.oracle_ceiling, "Largest n for brute-force enumeration")
        ->default_val(default_oracle_ceiling);
    verify->add_flag("--serial", cfg.serial, "Run checks one after another");
    verify->add_option("--format", cfg.format)->check(CLI::IsMember(formats))->default_val("text");
    verify->add_option("--out", cfg.out_path, "Write to PATH instead of standard output");

    auto *series_cmd = app.add_subcommand("series", "Dump the coefficients of a named series");
    series_cmd->add_option("--name", cfg.name, "Series name")->required();
    series_cmd->add_option("--trunc", cfg.trunc, "Truncation order (>= 13)")->default_val(min_build_trunc);
    series_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats))->default_val("text");
    series_cmd->add_option("--out", cfg.out_path, "Write to PATH instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    if (verify->parsed() && cfg.checks.empty() && !cfg.all) {
        err << "verify: pass --check NAME or --all\n";
        return usage_error;
    }

    std::ostringstream buffer;
    int status = ok;
    try {
        if (table->parsed()) {
            status = cmd_table(cfg, buffer, err);
        } else if (verify->parsed()) {
            status = cmd_verify(cfg, buffer, err);
        } else {
            status = cmd_series(cfg, buffer, err);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    if (cfg.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << " for writing\n";
            return usage_error;
        }
        file << buffer.str();
    }
    return status;
}

} // namespace qhook::cli

#endif
