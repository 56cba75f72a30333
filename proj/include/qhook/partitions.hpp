#ifndef QHOOK_PARTITIONS_HPP
#define QHOOK_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <qhook/series.hpp>

// Brute-force side of every check: explicit enumeration of partitions and
// their Young diagrams. Nothing here touches generating functions.

namespace qhook
{

class invalid_domain : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A nonincreasing sequence of positive integers.
class partition
{
public:
    using part_type = unsigned;

    partition() = default;
    explicit partition(std::vector<part_type> parts) : m_parts(std::move(parts))
    {
        for (std::size_t i = 0; i < m_parts.size(); ++i) {
            if (m_parts[i] == 0u) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0u && m_parts[i - 1u] < m_parts[i]) {
                throw std::invalid_argument("partition parts must be nonincreasing");
            }
        }
    }
    partition(std::initializer_list<part_type> parts) : partition(std::vector<part_type>(parts)) {}

    [[nodiscard]] const std::vector<part_type> &parts() const noexcept
    {
        return m_parts;
    }
    // Number of parts.
    [[nodiscard]] std::size_t length() const noexcept
    {
        return m_parts.size();
    }
    // The integer being partitioned.
    [[nodiscard]] std::size_t weight() const noexcept
    {
        return std::accumulate(m_parts.begin(), m_parts.end(), std::size_t{0});
    }
    [[nodiscard]] bool empty() const noexcept
    {
        return m_parts.empty();
    }
    [[nodiscard]] part_type largest() const noexcept
    {
        return m_parts.empty() ? 0u : m_parts.front();
    }

    // Column lengths of the Young diagram.
    [[nodiscard]] partition conjugate() const
    {
        std::vector<part_type> cols(largest(), 0u);
        for (auto p : m_parts) {
            for (part_type j = 0; j < p; ++j) {
                ++cols[j];
            }
        }
        return partition(std::move(cols));
    }

    friend bool operator==(const partition &, const partition &) = default;
    friend auto operator<=>(const partition &, const partition &) = default;

private:
    std::vector<part_type> m_parts;
};

inline std::string to_string(const partition &p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i != 0u) {
            s += ',';
        }
        s += std::to_string(p.parts()[i]);
    }
    return s + ')';
}

struct unrestricted {
};

// No part divisible by t.
struct t_regular {
    unsigned t;
};

// Distinct parts, each at least m.
struct distinct_min {
    unsigned m;
};

using constraint = std::variant<unrestricted, t_regular, distinct_min>;

inline void validate(const constraint &c)
{
    if (const auto *tr = std::get_if<t_regular>(&c); tr != nullptr && tr->t < 2u) {
        throw std::invalid_argument("t-regularity needs t >= 2");
    }
    if (const auto *dm = std::get_if<distinct_min>(&c); dm != nullptr && dm->m < 1u) {
        throw std::invalid_argument("distinct-parts minimum must be at least 1");
    }
}

inline bool satisfies(const partition &p, const constraint &c)
{
    return std::visit(
        [&p](const auto &con) -> bool {
            using T = std::decay_t<decltype(con)>;
            const auto &parts = p.parts();
            if constexpr (std::is_same_v<T, unrestricted>) {
                return true;
            } else if constexpr (std::is_same_v<T, t_regular>) {
                return std::none_of(parts.begin(), parts.end(), [&](auto x) { return x % con.t == 0u; });
            } else {
                return std::all_of(parts.begin(), parts.end(), [&](auto x) { return x >= con.m; })
                       && std::adjacent_find(parts.begin(), parts.end()) == parts.end();
            }
        },
        c);
}

namespace detail
{

// Places parts in [lo, hi] (largest first) until `remaining` is used up.
template <typename Pred, typename F>
void partitions_rec(std::vector<partition::part_type> &stack, unsigned remaining, unsigned hi, unsigned lo,
                    bool distinct, const Pred &allowed, F &f)
{
    if (remaining == 0u) {
        f(std::as_const(stack));
        return;
    }
    for (unsigned p = std::min(remaining, hi); p >= lo && p > 0u; --p) {
        if (!allowed(p)) {
            continue;
        }
        stack.push_back(p);
        partitions_rec(stack, remaining - p, distinct ? p - 1u : p, lo, distinct, allowed, f);
        stack.pop_back();
    }
}

} // namespace detail

// Calls f(const std::vector<unsigned>&) once per qualifying partition of n, in
// lexicographically decreasing order. n = 0 yields the empty partition once.
template <typename F>
void for_each_partition(unsigned n, const constraint &c, F &&f)
{
    validate(c);
    std::vector<partition::part_type> stack;
    stack.reserve(n);
    std::visit(
        [&](const auto &con) {
            using T = std::decay_t<decltype(con)>;
            if constexpr (std::is_same_v<T, unrestricted>) {
                detail::partitions_rec(stack, n, n, 1u, false, [](unsigned) { return true; }, f);
            } else if constexpr (std::is_same_v<T, t_regular>) {
                const unsigned t = con.t;
                detail::partitions_rec(stack, n, n, 1u, false, [t](unsigned p) { return p % t != 0u; }, f);
            } else {
                detail::partitions_rec(stack, n, n, con.m, true, [](unsigned) { return true; }, f);
            }
        },
        c);
}

inline std::vector<partition> enumerate(unsigned n, const constraint &c)
{
    std::vector<partition> out;
    for_each_partition(n, c, [&out](const std::vector<partition::part_type> &parts) { out.emplace_back(parts); });
    return out;
}

inline std::size_t count_partitions(unsigned n, const constraint &c)
{
    std::size_t count = 0;
    for_each_partition(n, c, [&count](const auto &) { ++count; });
    return count;
}

namespace detail
{

// Hook of cell (i, j): arm + leg + 1 = (row_i - j - 1) + (col_j - i - 1) + 1.
template <typename F>
void for_each_hook(const std::vector<partition::part_type> &rows, std::vector<partition::part_type> &cols, F &&f)
{
    const unsigned width = rows.empty() ? 0u : rows.front();
    cols.assign(width, 0u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (unsigned j = 0; j < rows[i]; ++j) {
            ++cols[j];
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (unsigned j = 0; j < rows[i]; ++j) {
            f(rows[i] - j + cols[j] - static_cast<unsigned>(i) - 1u);
        }
    }
}

} // namespace detail

// Multiset of hook lengths, sorted decreasingly.
inline std::vector<unsigned> hook_lengths(const partition &p)
{
    std::vector<unsigned> hooks;
    hooks.reserve(p.weight());
    std::vector<partition::part_type> cols;
    detail::for_each_hook(p.parts(), cols, [&hooks](unsigned h) { hooks.push_back(h); });
    std::sort(hooks.begin(), hooks.end(), std::greater<>{});
    return hooks;
}

// Total number of hooks of length k over all t-regular partitions of n.
inline integer count_hooks_brute(unsigned t, unsigned k, unsigned n)
{
    if (k < 1u) {
        throw std::invalid_argument("hook length must be at least 1");
    }
    integer total = 0;
    std::vector<partition::part_type> cols;
    for_each_partition(n, t_regular{t}, [&](const std::vector<partition::part_type> &rows) {
        detail::for_each_hook(rows, cols, [&](unsigned h) {
            if (h == k) {
                ++total;
            }
        });
    });
    return total;
}

// b_{t,k}(0..n_max) for one (t, k).
struct hook_count_table {
    unsigned t;
    unsigned k;
    std::vector<integer> values;

    [[nodiscard]] unsigned n_max() const noexcept
    {
        return static_cast<unsigned>(values.size()) - 1u;
    }
};

// Tallies hooks of every length at once: result[k][n] = b_{t,k}(n) for
// 1 <= k <= k_max (index 0 unused). One enumeration pass per n.
inline std::vector<std::vector<integer>> hook_counts_by_length(unsigned t, unsigned k_max, unsigned n_max)
{
    std::vector<std::vector<integer>> out(k_max + 1u, std::vector<integer>(n_max + 1u));
    std::vector<unsigned long long> tally(k_max + 1u);
    std::vector<partition::part_type> cols;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::fill(tally.begin(), tally.end(), 0ull);
        for_each_partition(n, t_regular{t}, [&](const std::vector<partition::part_type> &rows) {
            detail::for_each_hook(rows, cols, [&](unsigned h) {
                if (h <= k_max) {
                    ++tally[h];
                }
            });
        });
        for (unsigned k = 1; k <= k_max; ++k) {
            out[k][n] = tally[k];
        }
    }
    return out;
}

inline hook_count_table make_hook_count_table(unsigned t, unsigned k, unsigned n_max)
{
    if (k < 1u) {
        throw std::invalid_argument("hook length must be at least 1");
    }
    auto all = hook_counts_by_length(t, k, n_max);
    return hook_count_table{t, k, std::move(all[k])};
}

// Partitions of n into distinct parts, all at least 3. d3(0) = 1.
inline integer d3_brute(unsigned n)
{
    return integer(count_partitions(n, distinct_min{3u}));
}

inline std::vector<integer> d3_table(unsigned n_max)
{
    std::vector<integer> out;
    out.reserve(n_max + 1u);
    for (unsigned n = 0; n <= n_max; ++n) {
        out.push_back(d3_brute(n));
    }
    return out;
}

struct injection_result {
    std::size_t target_index;
    partition image;

    friend bool operator==(const injection_result &, const injection_result &) = default;
    friend auto operator<=>(const injection_result &, const injection_result &) = default;
};

// Map D3(n-1) -> union of D3(i), 0 <= i <= n-5: the single-part partition (n-1)
// goes to the empty partition in D3(0); anything else loses its largest part.
// n is recovered as weight(p) + 1 and must exceed 4.
inline injection_result injection(const partition &p)
{
    if (!satisfies(p, distinct_min{3u})) {
        throw invalid_domain("injection domain is partitions into distinct parts >= 3, got " + to_string(p));
    }
    if (p.weight() < 4u) {
        throw invalid_domain("injection needs n > 4, i.e. a partition of at least 4, got " + to_string(p));
    }
    if (p.length() == 1u) {
        return {0u, partition{}};
    }
    std::vector<partition::part_type> rest(p.parts().begin() + 1, p.parts().end());
    partition image(std::move(rest));
    const auto target = image.weight();
    return {target, std::move(image)};
}

} // namespace qhook

#endif
