#ifndef QHOOK_VERIFY_HPP
#define QHOOK_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qhook/identities.hpp>
#include <qhook/partitions.hpp>
#include <qhook/series.hpp>

// Finite-range certification of every identity and inequality. A passing
// report means the claim holds on the reported range, nothing more.

namespace qhook
{

class range_beyond_truncation : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

class unsupported_mode : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class unknown_selector : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// One coefficient where a claim was tested. `claim` names the sub-claim when a
// report aggregates several.
struct sample {
    std::size_t n;
    integer lhs;
    integer rhs;
    std::string claim;

    friend bool operator==(const sample &, const sample &) = default;
};

class check_report
{
public:
    check_report(std::string name, std::size_t n_lo, std::size_t n_hi)
        : m_name(std::move(name)), m_lo(n_lo), m_hi(n_hi)
    {
    }

    [[nodiscard]] const std::string &check_name() const noexcept
    {
        return m_name;
    }
    [[nodiscard]] std::size_t n_lo() const noexcept
    {
        return m_lo;
    }
    [[nodiscard]] std::size_t n_hi() const noexcept
    {
        return m_hi;
    }
    [[nodiscard]] bool passed() const noexcept
    {
        return m_counterexamples.empty();
    }
    [[nodiscard]] const std::vector<sample> &counterexamples() const noexcept
    {
        return m_counterexamples;
    }
    // Values outside the quantified range, reported but never failing.
    [[nodiscard]] const std::vector<sample> &informational() const noexcept
    {
        return m_info;
    }
    [[nodiscard]] const std::string &runtime_note() const noexcept
    {
        return m_note;
    }

    void fail(std::size_t n, integer lhs, integer rhs, std::string claim = {})
    {
        m_counterexamples.push_back({n, std::move(lhs), std::move(rhs), std::move(claim)});
    }
    void inform(std::size_t n, integer lhs, integer rhs, std::string claim = {})
    {
        m_info.push_back({n, std::move(lhs), std::move(rhs), std::move(claim)});
    }
    void note(std::string_view text)
    {
        if (!m_note.empty()) {
            m_note += "; ";
        }
        m_note += text;
    }
    // Folds another report's findings in under a claim label.
    void absorb(const check_report &other, std::string_view claim)
    {
        for (const auto &s : other.counterexamples()) {
            fail(s.n, s.lhs, s.rhs, label(claim, s.claim));
        }
        for (const auto &s : other.informational()) {
            inform(s.n, s.lhs, s.rhs, label(claim, s.claim));
        }
        if (!other.runtime_note().empty()) {
            note(claim.empty() ? other.runtime_note() : std::string(claim) + ": " + other.runtime_note());
        }
    }

private:
    static std::string label(std::string_view outer, const std::string &inner)
    {
        return inner.empty() ? std::string(outer) : std::string(outer) + "/" + inner;
    }

    std::string m_name;
    std::size_t m_lo;
    std::size_t m_hi;
    std::vector<sample> m_counterexamples;
    std::vector<sample> m_info;
    std::string m_note;
};

// Records every n in [n_lo, n_hi] with [q^n]a < [q^n]b.
inline check_report check_coeffwise_geq(std::string name, const series &a, const series &b, std::size_t n_lo,
                                        std::size_t n_hi)
{
    if (n_hi > std::min(a.trunc(), b.trunc())) {
        throw range_beyond_truncation(name + ": range end " + std::to_string(n_hi) + " exceeds truncation "
                                      + std::to_string(std::min(a.trunc(), b.trunc())));
    }
    check_report rep(std::move(name), n_lo, n_hi);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        if (a[n] < b[n]) {
            rep.fail(n, a[n], b[n]);
        }
    }
    return rep;
}

inline check_report check_equal(std::string name, const series &a, const series &b, std::size_t n_hi)
{
    if (n_hi > std::min(a.trunc(), b.trunc())) {
        throw range_beyond_truncation(name + ": range end " + std::to_string(n_hi) + " exceeds truncation "
                                      + std::to_string(std::min(a.trunc(), b.trunc())));
    }
    check_report rep(std::move(name), 0u, n_hi);
    for (std::size_t n = 0; n <= n_hi; ++n) {
        if (a[n] != b[n]) {
            rep.fail(n, a[n], b[n]);
        }
    }
    return rep;
}

// Same as check_equal for two plain coefficient tables.
inline check_report check_equal(std::string name, std::span<const integer> a, std::span<const integer> b,
                                std::size_t n_lo, std::size_t n_hi)
{
    if (n_hi >= a.size() || n_hi >= b.size()) {
        throw range_beyond_truncation(name + ": range end " + std::to_string(n_hi) + " exceeds table size");
    }
    check_report rep(std::move(name), n_lo, n_hi);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        if (a[n] != b[n]) {
            rep.fail(n, a[n], b[n]);
        }
    }
    return rep;
}

enum class theorem { thm1, thm2, thm3, thm4_pjm };
enum class theorem_mode { genfun, oracle, both };
enum class lemma { d3_monotone, phi, pge, fn, coef_positivity_instance };

inline constexpr unsigned default_oracle_ceiling = 45;
inline constexpr order default_series_n_max = 500;

inline std::string_view to_string(theorem id)
{
    switch (id) {
        case theorem::thm1:
            return "thm1";
        case theorem::thm2:
            return "thm2";
        case theorem::thm3:
            return "thm3";
        case theorem::thm4_pjm:
            return "thm4_pjm";
    }
    return "?";
}

inline std::string_view to_string(lemma id)
{
    switch (id) {
        case lemma::d3_monotone:
            return "d3_monotone";
        case lemma::phi:
            return "phi";
        case lemma::pge:
            return "pge";
        case lemma::fn:
            return "fn";
        case lemma::coef_positivity_instance:
            return "coef_positivity_instance";
    }
    return "?";
}

namespace detail
{

inline std::string cap_note(std::size_t requested, std::size_t used)
{
    if (requested <= used) {
        return {};
    }
    return "oracle range capped at n=" + std::to_string(used) + " (requested " + std::to_string(requested) + ")";
}

// Oracle-side b_{t,k}(0..n_max) tables.
inline std::vector<integer> oracle_b(unsigned t, unsigned k, unsigned n_max)
{
    return make_hook_count_table(t, k, n_max).values;
}

inline std::vector<integer> minus(std::span<const integer> a, std::span<const integer> b)
{
    std::vector<integer> out(std::min(a.size(), b.size()));
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = a[n] - b[n];
    }
    return out;
}

inline check_report geq_tables(std::string name, std::span<const integer> a, std::span<const integer> b,
                               std::size_t lo, std::size_t hi)
{
    check_report rep(std::move(name), lo, hi);
    for (std::size_t n = lo; n <= hi; ++n) {
        if (a[n] < b[n]) {
            rep.fail(n, a[n], b[n]);
        }
    }
    return rep;
}

inline std::span<const integer> head(const series &s, std::size_t n_hi)
{
    return std::span<const integer>(s.coeffs()).first(n_hi + 1u);
}

} // namespace detail

struct theorem_options {
    unsigned oracle_ceiling = default_oracle_ceiling;
    // Overrides the theorem's own starting index (used to exhibit the early exceptions).
    std::optional<std::size_t> n_lo;
};

// thm1: b32 >= b22 for n > 3; thm3: b22 >= b21 for n > 4 (both with generating
// functions). thm2: b33 >= b23 and thm4_pjm: b42 >= b32 for n >= 0, oracle only.
inline check_report verify_theorem(theorem id, std::size_t n_max, theorem_mode mode, theorem_options opts = {})
{
    const bool has_genfun = id == theorem::thm1 || id == theorem::thm3;
    if (!has_genfun && mode != theorem_mode::oracle) {
        throw unsupported_mode(std::string(to_string(id)) + " has no generating function; only oracle mode applies");
    }

    std::size_t lo = 0;
    unsigned t_hi = 0, k_hi = 0, t_lo = 0, k_lo = 0;
    switch (id) {
        case theorem::thm1:
            lo = 4;
            t_hi = 3, k_hi = 2, t_lo = 2, k_lo = 2;
            break;
        case theorem::thm2:
            t_hi = 3, k_hi = 3, t_lo = 2, k_lo = 3;
            break;
        case theorem::thm3:
            lo = 5;
            t_hi = 2, k_hi = 2, t_lo = 2, k_lo = 1;
            break;
        case theorem::thm4_pjm:
            t_hi = 4, k_hi = 2, t_lo = 3, k_lo = 2;
            break;
    }
    lo = opts.n_lo.value_or(lo);
    const std::size_t oracle_hi = std::min<std::size_t>(n_max, opts.oracle_ceiling);
    const bool use_genfun = mode != theorem_mode::oracle;
    const bool use_oracle = mode != theorem_mode::genfun;

    check_report rep(std::string(to_string(id)), lo, use_genfun ? n_max : oracle_hi);

    std::optional<series> big, small;
    if (use_genfun) {
        const order trunc = std::max<order>(n_max, min_build_trunc);
        big = build(id == theorem::thm1 ? "B32" : "B22", trunc).value;
        small = build(id == theorem::thm1 ? "B22" : "B21", trunc).value;
        rep.absorb(check_coeffwise_geq("genfun", *big, *small, lo, n_max), "");
        for (std::size_t n = 0; n < lo && n <= n_max; ++n) {
            rep.inform(n, (*big)[n], (*small)[n], "excluded");
        }
    }
    if (use_oracle) {
        const auto hi_tab = detail::oracle_b(t_hi, k_hi, static_cast<unsigned>(oracle_hi));
        const auto lo_tab = detail::oracle_b(t_lo, k_lo, static_cast<unsigned>(oracle_hi));
        if (lo <= oracle_hi) {
            rep.absorb(detail::geq_tables("oracle", hi_tab, lo_tab, lo, oracle_hi), "oracle");
        }
        if (!use_genfun) {
            for (std::size_t n = 0; n < lo && n <= oracle_hi; ++n) {
                rep.inform(n, hi_tab[n], lo_tab[n], "excluded");
            }
        }
        if (use_genfun) {
            rep.absorb(check_equal("x", detail::head(*big, oracle_hi), hi_tab, 0u, oracle_hi),
                       "genfun_vs_oracle_b" + std::to_string(t_hi) + std::to_string(k_hi));
            rep.absorb(check_equal("x", detail::head(*small, oracle_hi), lo_tab, 0u, oracle_hi),
                       "genfun_vs_oracle_b" + std::to_string(t_lo) + std::to_string(k_lo));
            rep.note("oracle cross-check on [0, " + std::to_string(oracle_hi) + "]");
        } else if (const auto note = detail::cap_note(n_max, oracle_hi); !note.empty()) {
            rep.note(note);
        }
    }
    return rep;
}

// b22(n) - b21(n) = sum_{i=0}^{n-5} d3(i) - d3(n-1) for 5 <= n <= n_max, with d3
// read off (-q^3;q)_inf; oracle counts are compared too up to the ceiling.
inline check_report verify_corollary(std::size_t n_max, unsigned oracle_ceiling = default_oracle_ceiling)
{
    if (n_max < 5u) {
        throw std::invalid_argument("corollary check needs n_max >= 5");
    }
    const order trunc = std::max<order>(n_max, min_build_trunc);
    const auto diff = build("B22", trunc).value - build("B21", trunc).value;
    const auto h = build("H", trunc).value;
    const std::span<const integer> d3(h.coeffs());

    check_report rep("corollary", 5u, n_max);
    for (std::size_t n = 5; n <= n_max; ++n) {
        const auto rhs = corollary_rhs(n, d3);
        if (diff[n] != rhs) {
            rep.fail(n, diff[n], rhs, "genfun_vs_closed_form");
        }
    }

    const std::size_t oracle_hi = std::min<std::size_t>(n_max, oracle_ceiling);
    const auto u = static_cast<unsigned>(oracle_hi);
    const auto oracle_diff = detail::minus(detail::oracle_b(2, 2, u), detail::oracle_b(2, 1, u));
    const auto d3_oracle = d3_table(u);
    for (std::size_t n = 5; n <= oracle_hi; ++n) {
        const auto rhs = corollary_rhs(n, d3_oracle);
        if (oracle_diff[n] != rhs) {
            rep.fail(n, oracle_diff[n], rhs, "oracle_vs_closed_form");
        }
        if (oracle_diff[n] != diff[n]) {
            rep.fail(n, oracle_diff[n], diff[n], "oracle_vs_genfun");
        }
    }
    for (std::size_t n = 0; n <= oracle_hi; ++n) {
        if (d3_oracle[n] != d3[n]) {
            rep.fail(n, d3_oracle[n], d3[n], "d3_oracle_vs_series");
        }
    }
    rep.note("oracle cross-check on [5, " + std::to_string(oracle_hi) + "]");
    return rep;
}

inline check_report verify_lemma(lemma id, std::size_t n_max)
{
    const order trunc = std::max<order>(n_max, min_build_trunc);
    const std::string name(to_string(id));
    switch (id) {
        case lemma::d3_monotone: {
            // d3(n) >= d3(n-1) for n >= 2
            const auto h = build("H", trunc).value;
            check_report rep(name, 2u, n_max);
            rep.absorb(check_coeffwise_geq(name, h, shift(h, 1u), 2u, n_max), "");
            rep.inform(1u, h[1], h[0], "excluded");
            return rep;
        }
        case lemma::phi: {
            const auto phi = build("Phi", trunc).value;
            const auto expected = from_terms(term_list{{2u, 1}, {3u, -2}, {4u, 3}, {6u, 5}, {7u, 2}, {8u, 5}, {9u, 4},
                                                       {10u, 3}, {11u, 3}, {12u, 1}, {13u, 1}},
                                             trunc);
            check_report rep(name, 4u, n_max);
            rep.absorb(check_equal(name, phi, expected, trunc), "exact_expansion");
            rep.absorb(check_coeffwise_geq(name, phi, series(trunc), 4u, n_max), "nonnegative");
            for (std::size_t n = 0; n < 4u; ++n) {
                rep.inform(n, phi[n], 0, "excluded");
            }
            return rep;
        }
        case lemma::pge: {
            const auto p = build("P", trunc).value;
            const auto rhs = build("M", trunc).value * build("H", trunc).value;
            auto rep = check_coeffwise_geq(name, p, rhs, 0u, n_max);
            return rep;
        }
        case lemma::fn: {
            const auto f = build("F", trunc).value;
            check_report rep(name, 4u, n_max);
            rep.absorb(check_coeffwise_geq(name, f, series(trunc), 4u, n_max), "");
            for (std::size_t n = 0; n < 4u; ++n) {
                rep.inform(n, f[n], 0, "excluded");
            }
            return rep;
        }
        case lemma::coef_positivity_instance: {
            // E(q) = sum_{j in J} alpha_j q^j - c q^r times H(q), H nondecreasing from N0.
            const auto e = build("E", trunc).value;
            const auto h = build("H", trunc).value;
            const std::size_t n0 = 1, r = 3, s = 2;
            const integer c = 1;
            check_report rep(name, n0 + r, n_max);

            for (std::size_t n = n0; n < n_max; ++n) {
                if (h[n + 1u] < h[n]) {
                    rep.fail(n + 1u, h[n + 1u], h[n], "hypothesis_h_nondecreasing");
                }
            }
            // r is the only exponent with a negative coefficient, and that coefficient is -c.
            for (std::size_t j = 0; j <= e.trunc(); ++j) {
                if (j != r && e[j] < 0) {
                    rep.fail(j, e[j], 0, "hypothesis_alpha_nonnegative");
                }
            }
            if (e[r] != -c) {
                rep.fail(r, e[r], -c, "hypothesis_coefficient_at_r");
            }
            if (!(s < r)) {
                rep.fail(s, integer(s), integer(r), "hypothesis_s_below_r");
            }
            if (e[s] < c) {
                rep.fail(s, e[s], c, "hypothesis_alpha_s_at_least_c");
            }
            const auto eh = e * h;
            rep.absorb(check_coeffwise_geq(name, eh, series(trunc), n0 + r, n_max), "conclusion");
            for (std::size_t n = 0; n < n0 + r; ++n) {
                rep.inform(n, eh[n], 0, "excluded");
            }
            rep.note("N0=1 r=3 s=2 c=1");
            return rep;
        }
    }
    throw std::logic_error("unhandled lemma");
}

// G_n - G_{n-6} = F_n on [0, n_max] with F taken in its product form
// P PC - (-q^3;q)_inf PR, the base block (G_4..G_9) = (3,1,5,5,11,13), F_n >= 0
// from n = 4, and each residue class G_{r+6k}, r = 4..9, nondecreasing.
inline check_report verify_recurrence(std::size_t n_max)
{
    if (n_max < 9u) {
        throw std::invalid_argument("recurrence check needs n_max >= 9");
    }
    const order trunc = std::max<order>(n_max, min_build_trunc);
    const auto g = build("G", trunc).value;
    const auto f = gf::f_product_form(trunc);
    check_report rep("recurrence", 0u, n_max);

    for (std::size_t n = 0; n <= n_max; ++n) {
        const integer lhs = n >= 6u ? integer(g[n] - g[n - 6u]) : g[n];
        if (lhs != f[n]) {
            rep.fail(n, lhs, f[n], "g_minus_shift_equals_f");
        }
    }
    const std::array<int, 6> base{3, 1, 5, 5, 11, 13};
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (g[4u + i] != base[i]) {
            rep.fail(4u + i, g[4u + i], base[i], "base_block");
        }
    }
    for (std::size_t n = 4; n <= n_max; ++n) {
        if (f[n] < 0) {
            rep.fail(n, f[n], 0, "f_nonnegative");
        }
    }
    for (std::size_t n = 10; n <= n_max; ++n) {
        if (g[n] < g[n - 6u]) {
            rep.fail(n, g[n], g[n - 6u], "residue_class_nondecreasing");
        }
    }
    for (std::size_t n = 0; n < 4u; ++n) {
        rep.inform(n, g[n], 0, "g_early_value");
    }
    return rep;
}

using injection_map = std::function<injection_result(const partition &)>;

// Exhaustive check that `map` sends D3(n-1) injectively into the union of
// D3(i), i in [0, n-5] minus {1, 2}, for every n in [n_lo, n_hi]. Also checks
// that no member of D3(n-1) has a part equal to n-2 or n-3, and the count
// inequality |D3(n-1)| <= sum_{i<=n-5} |D3(i)|.
inline check_report verify_injection(std::size_t n_lo, std::size_t n_hi, const injection_map &map = &injection)
{
    if (n_lo < 5u || n_lo > n_hi) {
        throw std::invalid_argument("injection check needs 5 <= n_lo <= n_hi");
    }
    check_report rep("injection", n_lo, n_hi);
    std::vector<integer> d3 = d3_table(static_cast<unsigned>(n_hi));
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const auto domain = enumerate(static_cast<unsigned>(n - 1u), distinct_min{3u});
        std::set<injection_result> images;
        std::size_t invalid = 0, collisions = 0, forbidden_parts = 0;
        for (const auto &p : domain) {
            for (auto part : p.parts()) {
                if (part == n - 2u || part == n - 3u) {
                    ++forbidden_parts;
                }
            }
            injection_result img;
            try {
                img = map(p);
            } catch (const std::exception &) {
                ++invalid;
                continue;
            }
            const bool ok = img.target_index <= n - 5u && img.target_index != 1u && img.target_index != 2u
                            && img.image.weight() == img.target_index && satisfies(img.image, distinct_min{3u});
            if (!ok) {
                ++invalid;
            }
            if (!images.insert(img).second) {
                ++collisions;
            }
        }
        if (invalid != 0u) {
            rep.fail(n, integer(invalid), 0, "images_outside_codomain");
        }
        if (collisions != 0u) {
            rep.fail(n, integer(collisions), 0, "duplicate_images");
        }
        if (forbidden_parts != 0u) {
            rep.fail(n, integer(forbidden_parts), 0, "part_of_size_n_minus_2_or_3");
        }
        const auto bound = cumulative_c(d3, n - 5u);
        if (d3[n - 1u] > bound) {
            rep.fail(n, d3[n - 1u], bound, "domain_size_bound");
        }
    }
    return rep;
}

// The negative control: deleting the smallest part is not injective into the
// required codomain.
inline injection_result delete_smallest_part(const partition &p)
{
    if (p.empty()) {
        throw invalid_domain("empty partition");
    }
    std::vector<partition::part_type> rest(p.parts().begin(), p.parts().end() - 1);
    partition image(std::move(rest));
    const auto target = image.weight();
    return {target, std::move(image)};
}

// Returns s with the coefficient of q^index decreased by one.
inline series perturb(const series &s, std::size_t index)
{
    auto coeffs = s.coeffs();
    coeffs.at(index) -= 1;
    return series(std::move(coeffs));
}

// Configuration shared by the named check suite.
struct suite_config {
    order n_max = default_series_n_max;
    unsigned oracle_ceiling = default_oracle_ceiling;
};

namespace detail
{

using suite_fn = check_report (*)(const suite_config &);

inline order suite_trunc(const suite_config &cfg)
{
    return std::max<order>(cfg.n_max, min_build_trunc);
}

inline check_report sylvester_check(std::size_t x_exp, const suite_config &cfg)
{
    const auto t = suite_trunc(cfg);
    return check_equal("sylvester_x" + std::to_string(x_exp), sylvester_lhs(x_exp, t), sylvester_rhs(x_exp, t),
                       cfg.n_max);
}

struct suite_entry {
    std::string_view name;
    suite_fn run;
};

inline const std::vector<suite_entry> &suite()
{
    static const std::vector<suite_entry> entries{
        {"b22_simplified",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_equal("b22_simplified", build("B22_simplified", t).value, build("B22", t).value, c.n_max);
         }},
        {"coef_positivity_instance",
         [](const suite_config &c) { return verify_lemma(lemma::coef_positivity_instance, c.n_max); }},
        {"corollary", [](const suite_config &c) { return verify_corollary(c.n_max, c.oracle_ceiling); }},
        {"d3_monotone", [](const suite_config &c) { return verify_lemma(lemma::d3_monotone, c.n_max); }},
        {"eq6_bookkeeping",
         [](const suite_config &c) {
             // (1-q)(-q^3;q)_inf = d3(0) + sum_{n>=1} (d3(n) - d3(n-1)) q^n
             const auto t = suite_trunc(c);
             const auto h = build("H", t).value;
             return check_equal("eq6_bookkeeping", build("lem1_lhs", t).value, h - shift(h, 1u), c.n_max);
         }},
        {"eq8",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_equal("eq8", eq8_lhs(t), eq8_rhs(t), c.n_max);
         }},
        {"eq9",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_equal("eq9", build("syl3_lhs", t).value, build("syl3_rhs", t).value, c.n_max);
         }},
        {"euler",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_equal("euler", build("euler_lhs", t).value, build("euler_rhs", t).value, c.n_max);
         }},
        {"f_forms",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_equal("f_forms", build("F", t).value, gf::f_product_form(t), c.n_max);
         }},
        {"fn", [](const suite_config &c) { return verify_lemma(lemma::fn, c.n_max); }},
        {"genfun_oracle",
         [](const suite_config &c) {
             const auto hi = std::min<std::size_t>(c.n_max, c.oracle_ceiling);
             const auto t = suite_trunc(c);
             check_report rep("genfun_oracle", 0u, hi);
             const std::array<std::pair<unsigned, unsigned>, 3> tk{{{2, 1}, {2, 2}, {3, 2}}};
             for (const auto &[tt, kk] : tk) {
                 const auto name = "B" + std::to_string(tt) + std::to_string(kk);
                 const auto gfs = build(name, t).value;
                 rep.absorb(check_equal(name, head(gfs, hi), oracle_b(tt, kk, static_cast<unsigned>(hi)), 0u, hi),
                            name);
             }
             if (const auto note = cap_note(c.n_max, hi); !note.empty()) {
                 rep.note(note);
             }
             return rep;
         }},
        {"injection",
         [](const suite_config &c) {
             const auto hi = std::max<std::size_t>(5u, std::min<std::size_t>(c.n_max, c.oracle_ceiling));
             return verify_injection(5u, hi);
         }},
        {"mpc_product",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_equal("mpc_product", build("M", t).value * build("PC", t).value, gf::mpc_factored(t),
                                c.n_max);
         }},
        {"p_forms",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_equal("p_forms", build("P", t).value, gf::p_quotient(t), c.n_max);
         }},
        {"pge", [](const suite_config &c) { return verify_lemma(lemma::pge, c.n_max); }},
        {"phi", [](const suite_config &c) { return verify_lemma(lemma::phi, c.n_max); }},
        {"recurrence", [](const suite_config &c) { return verify_recurrence(c.n_max); }},
        {"s_vanishing",
         [](const suite_config &c) {
             // [q^n]S = 0 for n <= 5 and >= 0 afterwards
             const auto t = suite_trunc(c);
             const auto s = build("S", t).value;
             const series zero(t);
             check_report rep("s_vanishing", 0u, c.n_max);
             rep.absorb(check_equal("s", s.truncate(5u), zero.truncate(5u), 5u), "zero_head");
             rep.absorb(check_coeffwise_geq("s", s, zero, 6u, c.n_max), "nonnegative");
             return rep;
         }},
        {"spc_nonneg",
         [](const suite_config &c) {
             const auto t = suite_trunc(c);
             return check_coeffwise_geq("spc_nonneg", build("S", t).value * build("PC", t).value, series(t), 0u,
                                        c.n_max);
         }},
        {"sylvester_x0", [](const suite_config &c) { return sylvester_check(0u, c); }},
        {"sylvester_x1", [](const suite_config &c) { return sylvester_check(1u, c); }},
        {"sylvester_x2", [](const suite_config &c) { return sylvester_check(2u, c); }},
        {"thm1",
         [](const suite_config &c) {
             return verify_theorem(theorem::thm1, c.n_max, theorem_mode::both, {c.oracle_ceiling, std::nullopt});
         }},
        {"thm2",
         [](const suite_config &c) {
             return verify_theorem(theorem::thm2, c.n_max, theorem_mode::oracle, {c.oracle_ceiling, std::nullopt});
         }},
        {"thm3",
         [](const suite_config &c) {
             return verify_theorem(theorem::thm3, c.n_max, theorem_mode::both, {c.oracle_ceiling, std::nullopt});
         }},
        {"thm4_pjm",
         [](const suite_config &c) {
             return verify_theorem(theorem::thm4_pjm, c.n_max, theorem_mode::oracle,
                                   {c.oracle_ceiling, std::nullopt});
         }},
    };
    return entries;
}

} // namespace detail

// Names accepted by run_check, in sorted order.
inline std::vector<std::string> check_names()
{
    std::vector<std::string> out;
    for (const auto &e : detail::suite()) {
        out.emplace_back(e.name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_check_name(std::string_view name)
{
    const auto &s = detail::suite();
    return std::any_of(s.begin(), s.end(), [name](const auto &e) { return e.name == name; });
}

inline check_report run_check(std::string_view name, const suite_config &cfg = {})
{
    const auto &s = detail::suite();
    const auto it = std::find_if(s.begin(), s.end(), [name](const auto &e) { return e.name == name; });
    if (it == s.end()) {
        throw unknown_selector("unknown check '" + std::string(name) + "'");
    }
    return it->run(cfg);
}

// Runs every named check, optionally in parallel. Reports come back sorted by
// name regardless of completion order.
inline std::vector<check_report> run_all(const suite_config &cfg = {}, bool parallel = true)
{
    std::vector<check_report> out;
    if (parallel) {
        std::vector<std::future<check_report>> futures;
        for (const auto &e : detail::suite()) {
            futures.push_back(std::async(std::launch::async, e.run, cfg));
        }
        for (auto &f : futures) {
            out.push_back(f.get());
        }
    } else {
        for (const auto &e : detail::suite()) {
            out.push_back(e.run(cfg));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const check_report &a, const check_report &b) { return a.check_name() < b.check_name(); });
    return out;
}

} // namespace qhook

#endif
