#ifndef QHOOK_IDENTITIES_HPP
#define QHOOK_IDENTITIES_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <qhook/series.hpp>

// Every named generating function, built from its defining formula with the
// series primitives. Equivalent forms are built separately so that their
// agreement is checked rather than assumed.

namespace qhook
{

class unknown_name : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class insufficient_table : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Smallest truncation accepted by build(): Phi has degree 13.
inline constexpr order min_build_trunc = 13;

struct named_series {
    std::string name;
    series value;
    std::string definition;
};

namespace gf
{

// Shorthand for sparse polynomial literals.
inline series poly(const term_list &terms, order trunc)
{
    return from_terms(terms, trunc);
}

// (1 - q^e) as a sparse factor.
inline term_list one_minus(std::size_t e)
{
    return term_list{{0u, 1}, {e, -1}};
}

// q^e / (1 - q^m)
inline series geometric_tail(std::size_t e, std::size_t m, order trunc)
{
    return shift(geometric(m, trunc), e);
}

// (-q;q)_inf
inline series distinct_parts(order trunc)
{
    return pochhammer_infinite(1u, -1, 1u, trunc);
}

// (-q^3;q)_inf = sum_n d3(n) q^n
inline series distinct_parts_min3(order trunc)
{
    return pochhammer_infinite(3u, -1, 1u, trunc);
}

// 1/(q;q^2)_inf
inline series odd_parts(order trunc)
{
    return invert(pochhammer_infinite(1u, 1, 2u, trunc));
}

// q/(1-q) - q^2/(1-q^2)
inline series b21_factor(order trunc)
{
    return geometric_tail(1u, 1u, trunc) - geometric_tail(2u, 2u, trunc);
}

// q^2 + q^3/(1-q^2) + q^6/(1-q^4)
inline series b22_factor(order trunc)
{
    return series::monomial(2u, 1, trunc) + geometric_tail(3u, 2u, trunc) + geometric_tail(6u, 4u, trunc);
}

inline series b21(order trunc)
{
    return odd_parts(trunc) * b21_factor(trunc);
}

inline series b22(order trunc)
{
    return odd_parts(trunc) * b22_factor(trunc);
}

// q^2/(1-q) + q^2/(1-q^2) - 2q^3/(1-q^3)
inline series c(order trunc)
{
    return geometric_tail(2u, 1u, trunc) + geometric_tail(2u, 2u, trunc)
           - scale(geometric_tail(3u, 3u, trunc), integer(2));
}

inline term_list r_numerator()
{
    return term_list{{2u, 1}, {3u, 2}, {4u, 1}, {5u, 1}, {6u, 1}};
}

// (q^2 + 2q^3 + q^4 + q^5 + q^6) / (1 - q^2)
inline series r(order trunc)
{
    return geometric(2u, trunc) * r_numerator();
}

// (q^3;q^3)_inf / (q;q)_inf, the quotient form.
inline series p_quotient(order trunc)
{
    return pochhammer_infinite(3u, 1, 3u, trunc) * invert(pochhammer_infinite(1u, 1, 1u, trunc));
}

// prod_{m>=from} (1 + q^m + q^{2m})
inline series trinomial_product(std::size_t from, order trunc)
{
    std::vector<integer> out(trunc + 1u);
    out[0] = 1;
    for (std::size_t m = from; m <= trunc; ++m) {
        for (std::size_t n = trunc; n >= m; --n) {
            integer add = out[n - m];
            if (n >= 2u * m) {
                add += out[n - 2u * m];
            }
            out[n] += add;
        }
    }
    return series(std::move(out));
}

// prod_{m>=1} (1 + q^m + q^{2m}), the product form.
inline series p(order trunc)
{
    return trinomial_product(1u, trunc);
}

inline series b32(order trunc)
{
    return p_quotient(trunc) * c(trunc);
}

inline series b22_simplified(order trunc)
{
    return distinct_parts_min3(trunc) * r_numerator() * geometric(2u, trunc);
}

inline series pc(order trunc)
{
    return c(trunc) * one_minus(6u);
}

inline series pr(order trunc)
{
    return r(trunc) * one_minus(6u);
}

// (1 + q + q^2)(1 + q^2 + q^4)
inline series m(order trunc)
{
    return poly({{0u, 1}, {1u, 1}, {2u, 1}}, trunc) * term_list{{0u, 1}, {2u, 1}, {4u, 1}};
}

inline series phi(order trunc)
{
    return m(trunc) * pc(trunc) - pr(trunc) - series::monomial(3u, 1, trunc);
}

inline series s(order trunc)
{
    return p(trunc) - m(trunc) * distinct_parts_min3(trunc);
}

inline series g(order trunc)
{
    return b32(trunc) - b22(trunc);
}

// (1 - q^6) G(q)
inline series f(order trunc)
{
    return g(trunc) * one_minus(6u);
}

// P(q) P_C(q) - (-q^3;q)_inf P_R(q)
inline series f_product_form(order trunc)
{
    return p(trunc) * pc(trunc) - distinct_parts_min3(trunc) * pr(trunc);
}

inline series e(order trunc)
{
    return poly({{2u, 1}, {3u, -1}, {4u, 3}, {6u, 1}}, trunc);
}

inline series h(order trunc)
{
    return distinct_parts_min3(trunc);
}

// (1 - q)(-q^3;q)_inf
inline series one_minus_q_times_d3(order trunc)
{
    return distinct_parts_min3(trunc) * one_minus(1u);
}

// (q^3+q^2+q+2)(q^5+q^3+q)^2
inline series mpc_factored(order trunc)
{
    const term_list inner{{1u, 1}, {3u, 1}, {5u, 1}};
    return poly({{0u, 2}, {1u, 1}, {2u, 1}, {3u, 1}}, trunc) * inner * inner;
}

} // namespace gf

// Sum over n >= 0 of (-xq;q)_n / (q;q)_n * (1 + x q^{2n+1}) x^n q^{n(3n+1)/2}
// with x = q^{x_exp}. Terms are added while their lowest exponent fits.
inline series sylvester_rhs(std::size_t x_exp, order trunc)
{
    series total(trunc);
    for (std::size_t n = 0;; ++n) {
        const std::size_t low = n * (3u * n + 1u) / 2u + n * x_exp;
        if (low > trunc) {
            break;
        }
        const auto ratio = pochhammer_finite(x_exp + 1u, -1, n, trunc) * invert(pochhammer_finite(1u, 1, n, trunc));
        total = total + ratio * term_list{{low, 1}, {low + x_exp + 2u * n + 1u, 1}};
    }
    return total;
}

// (-xq;q)_inf with x = q^{x_exp}.
inline series sylvester_lhs(std::size_t x_exp, order trunc)
{
    return pochhammer_infinite(x_exp + 1u, -1, 1u, trunc);
}

// 1 - q + q^3 + sum_{n>=2} (-q^3;q)_{n-2} / (q^2;q)_{n-1} * (1 + q^{2n+1}) q^{(3n^2+n)/2}
inline series syl3_rhs(order trunc)
{
    if (trunc < 3u) {
        throw std::invalid_argument("syl3_rhs needs trunc >= 3");
    }
    series total = from_terms(term_list{{0u, 1}, {1u, -1}, {3u, 1}}, trunc);
    for (std::size_t n = 2;; ++n) {
        const std::size_t low = (3u * n * n + n) / 2u;
        if (low > trunc) {
            break;
        }
        const auto ratio = pochhammer_finite(3u, -1, n - 2u, trunc) * invert(pochhammer_finite(2u, 1, n - 1u, trunc));
        total = total + ratio * term_list{{low, 1}, {low + 2u * n + 1u, 1}};
    }
    return total;
}

// 1/(q^3;q^2)_inf * q^2(1-q) / (1-q^2)^2
inline series eq8_lhs(order trunc)
{
    const auto g2 = geometric(2u, trunc);
    return invert(pochhammer_infinite(3u, 1, 2u, trunc)) * term_list{{2u, 1}, {3u, -1}} * g2 * g2;
}

// -q^3 - q^5 + q^2(1+q^2)/(1-q^2)
//   + q^2/(1-q^2) * sum_{n>=2} (-q^2;q)_{n-1} / (q^2;q)_{n-1} * (1 + q^{2n+1}) q^{(3n^2+n)/2}
inline series eq8_rhs(order trunc)
{
    series tail(trunc);
    for (std::size_t n = 2;; ++n) {
        const std::size_t low = (3u * n * n + n) / 2u;
        if (low > trunc) {
            break;
        }
        const auto ratio
            = pochhammer_finite(2u, -1, n - 1u, trunc) * invert(pochhammer_finite(2u, 1, n - 1u, trunc));
        tail = tail + ratio * term_list{{low, 1}, {low + 2u * n + 1u, 1}};
    }
    const auto g2 = geometric(2u, trunc);
    return from_terms(term_list{{3u, -1}, {5u, -1}}, trunc) + g2 * term_list{{2u, 1}, {4u, 1}}
           + shift(g2 * tail, 2u);
}

namespace detail
{

struct catalog_entry {
    std::string_view name;
    std::string_view definition;
    series (*builder)(order);
};

inline const std::array<catalog_entry, 23> &catalog()
{
    static const std::array<catalog_entry, 23> entries{{
        {"B21", "1/(q;q^2)_inf * (q/(1-q) - q^2/(1-q^2))", &gf::b21},
        {"B22", "1/(q;q^2)_inf * (q^2 + q^3/(1-q^2) + q^6/(1-q^4))", &gf::b22},
        {"B22_simplified", "(-q^3;q)_inf * (q^2+2q^3+q^4+q^5+q^6)/(1-q^2)", &gf::b22_simplified},
        {"B32", "(q^3;q^3)_inf/(q;q)_inf * (q^2/(1-q) + q^2/(1-q^2) - 2q^3/(1-q^3))", &gf::b32},
        {"C", "q^2/(1-q) + q^2/(1-q^2) - 2q^3/(1-q^3)", &gf::c},
        {"E", "q^2 + 3q^4 + q^6 - q^3", &gf::e},
        {"F", "(1-q^6) G(q)", &gf::f},
        {"G", "B32(q) - B22(q)", &gf::g},
        {"H", "(-q^3;q)_inf", &gf::h},
        {"M", "(1+q+q^2)(1+q^2+q^4)", &gf::m},
        {"P", "prod_{m>=1} (1+q^m+q^{2m})", &gf::p},
        {"PC", "(1-q^6) C(q)", &gf::pc},
        {"PR", "(1-q^6) R(q)", &gf::pr},
        {"Phi", "M(q) PC(q) - PR(q) - q^3", &gf::phi},
        {"R", "(q^2+2q^3+q^4+q^5+q^6)/(1-q^2)", &gf::r},
        {"S", "P(q) - M(q) (-q^3;q)_inf", &gf::s},
        {"euler_lhs", "(-q;q)_inf", &gf::distinct_parts},
        {"euler_rhs", "1/(q;q^2)_inf", &gf::odd_parts},
        {"lem1_lhs", "(1-q)(-q^3;q)_inf", &gf::one_minus_q_times_d3},
        {"syl3_lhs", "(1-q)(-q^3;q)_inf", &gf::one_minus_q_times_d3},
        {"syl3_rhs", "1-q+q^3 + sum_{n>=2} (-q^3;q)_{n-2}/(q^2;q)_{n-1} (1+q^{2n+1}) q^{(3n^2+n)/2}",
         [](order t) { return syl3_rhs(t); }},
        {"sylvester_lhs", "(-q;q)_inf", [](order t) { return sylvester_lhs(0u, t); }},
        {"sylvester_rhs", "sum_{n>=0} (-q;q)_n/(q;q)_n (1+q^{2n+1}) q^{n(3n+1)/2}",
         [](order t) { return sylvester_rhs(0u, t); }},
    }};
    return entries;
}

} // namespace detail

inline std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const auto &e : detail::catalog()) {
        out.emplace_back(e.name);
    }
    return out;
}

inline bool is_catalog_name(std::string_view name)
{
    const auto &cat = detail::catalog();
    return std::any_of(cat.begin(), cat.end(), [name](const auto &e) { return e.name == name; });
}

inline named_series build(std::string_view name, order trunc)
{
    const auto &cat = detail::catalog();
    const auto it = std::find_if(cat.begin(), cat.end(), [name](const auto &e) { return e.name == name; });
    if (it == cat.end()) {
        throw unknown_name("unknown series name '" + std::string(name) + "'");
    }
    if (trunc < min_build_trunc) {
        throw std::invalid_argument("named series need trunc >= " + std::to_string(min_build_trunc));
    }
    return named_series{std::string(it->name), it->builder(trunc), std::string(it->definition)};
}

// c(n) = sum_{i=0}^{n} d3(i)
inline integer cumulative_c(std::span<const integer> d3, std::size_t n)
{
    if (n >= d3.size()) {
        throw insufficient_table("d3 table covers 0.." + std::to_string(d3.size()) + "-1, need 0.."
                                 + std::to_string(n));
    }
    integer sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        sum += d3[i];
    }
    return sum;
}

// sum_{i=0}^{n-5} d3(i) - d3(n-1), defined for n > 4.
inline integer corollary_rhs(std::size_t n, std::span<const integer> d3)
{
    if (n <= 4u) {
        throw std::invalid_argument("closed form holds for n > 4 only");
    }
    if (n - 1u >= d3.size()) {
        throw insufficient_table("d3 table covers 0.." + std::to_string(d3.size()) + "-1, need 0.."
                                 + std::to_string(n - 1u));
    }
    return cumulative_c(d3, n - 5u) - d3[n - 1u];
}

} // namespace qhook

#endif
