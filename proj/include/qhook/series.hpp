#ifndef QHOOK_SERIES_HPP
#define QHOOK_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhook
{

// Exact, unbounded integer used for every coefficient and count.
using integer = boost::multiprecision::cpp_int;

// Truncation order: the highest exponent a series stores exactly.
using order = std::size_t;

class non_unit_constant_term : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class exponent_beyond_truncation : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Sparse exponent -> coefficient map. Zero coefficients are never stored.
template <typename C>
class basic_term_list
{
public:
    using map_type = std::map<std::size_t, C>;

    basic_term_list() = default;
    basic_term_list(std::initializer_list<std::pair<const std::size_t, C>> init)
    {
        for (const auto &[e, c] : init) {
            add(e, c);
        }
    }

    // Accumulates c into the coefficient of q^e.
    basic_term_list &add(std::size_t e, const C &c)
    {
        auto [it, inserted] = m_terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
        }
        if (it->second == 0) {
            m_terms.erase(it);
        }
        return *this;
    }

    [[nodiscard]] const map_type &terms() const noexcept
    {
        return m_terms;
    }
    [[nodiscard]] bool empty() const noexcept
    {
        return m_terms.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    [[nodiscard]] auto begin() const noexcept
    {
        return m_terms.begin();
    }
    [[nodiscard]] auto end() const noexcept
    {
        return m_terms.end();
    }

    friend bool operator==(const basic_term_list &, const basic_term_list &) = default;

private:
    map_type m_terms;
};

// Truncated formal power series sum_{n=0}^{trunc} c_n q^n with exact coefficients.
//
// Values are immutable once built: every operation returns a new series whose
// truncation is the minimum of its operands' truncations.
template <typename C>
class basic_series
{
public:
    using coeff_type = C;

    // Zero series of the given truncation.
    explicit basic_series(order trunc) : m_coeffs(trunc + 1u) {}

    // Takes ownership of a dense coefficient vector; trunc = size - 1.
    explicit basic_series(std::vector<C> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a series needs at least the constant coefficient");
        }
    }

    static basic_series from_terms(const basic_term_list<C> &terms, order trunc)
    {
        basic_series retval(trunc);
        for (const auto &[e, c] : terms) {
            if (e <= trunc) {
                retval.m_coeffs[e] = c;
            }
        }
        return retval;
    }

    static basic_series constant(const C &c, order trunc)
    {
        basic_series retval(trunc);
        retval.m_coeffs[0] = c;
        return retval;
    }

    // c * q^e, truncated.
    static basic_series monomial(std::size_t e, const C &c, order trunc)
    {
        basic_series retval(trunc);
        if (e <= trunc) {
            retval.m_coeffs[e] = c;
        }
        return retval;
    }

    [[nodiscard]] order trunc() const noexcept
    {
        return m_coeffs.size() - 1u;
    }

    [[nodiscard]] const std::vector<C> &coeffs() const noexcept
    {
        return m_coeffs;
    }

    // Reading past the truncation order is an error, never an implicit zero.
    [[nodiscard]] const C &coeff(std::size_t n) const
    {
        if (n > trunc()) {
            throw exponent_beyond_truncation("requested coefficient of q^" + std::to_string(n)
                                             + " from a series truncated at order " + std::to_string(trunc()));
        }
        return m_coeffs[n];
    }

    [[nodiscard]] const C &operator[](std::size_t n) const
    {
        return coeff(n);
    }

    // Restriction to a lower truncation order.
    [[nodiscard]] basic_series truncate(order trunc) const
    {
        if (trunc > this->trunc()) {
            throw exponent_beyond_truncation("cannot extend a series from order " + std::to_string(this->trunc())
                                             + " to order " + std::to_string(trunc));
        }
        return basic_series(std::vector<C>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(trunc + 1u)));
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const C &c) { return c == 0; });
    }

    friend bool operator==(const basic_series &, const basic_series &) = default;

private:
    std::vector<C> m_coeffs;
};

using term_list = basic_term_list<integer>;
using series = basic_series<integer>;

template <typename C>
basic_series<C> from_terms(const basic_term_list<C> &terms, order trunc)
{
    return basic_series<C>::from_terms(terms, trunc);
}

template <typename C>
basic_series<C> add(const basic_series<C> &a, const basic_series<C> &b)
{
    const auto trunc = std::min(a.trunc(), b.trunc());
    std::vector<C> out(trunc + 1u);
    for (std::size_t n = 0; n <= trunc; ++n) {
        out[n] = a.coeffs()[n] + b.coeffs()[n];
    }
    return basic_series<C>(std::move(out));
}

template <typename C>
basic_series<C> sub(const basic_series<C> &a, const basic_series<C> &b)
{
    const auto trunc = std::min(a.trunc(), b.trunc());
    std::vector<C> out(trunc + 1u);
    for (std::size_t n = 0; n <= trunc; ++n) {
        out[n] = a.coeffs()[n] - b.coeffs()[n];
    }
    return basic_series<C>(std::move(out));
}

template <typename C>
basic_series<C> neg(const basic_series<C> &a)
{
    std::vector<C> out(a.coeffs());
    for (auto &c : out) {
        c = -c;
    }
    return basic_series<C>(std::move(out));
}

template <typename C>
basic_series<C> scale(const basic_series<C> &a, const C &k)
{
    std::vector<C> out(a.coeffs());
    for (auto &c : out) {
        c *= k;
    }
    return basic_series<C>(std::move(out));
}

// Schoolbook Cauchy product truncated at the smaller order.
template <typename C>
basic_series<C> mul(const basic_series<C> &a, const basic_series<C> &b)
{
    const auto trunc = std::min(a.trunc(), b.trunc());
    const auto &x = a.coeffs();
    const auto &y = b.coeffs();
    std::vector<C> out(trunc + 1u);
    for (std::size_t i = 0; i <= trunc; ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= trunc; ++j) {
            if (y[j] != 0) {
                out[i + j] += x[i] * y[j];
            }
        }
    }
    return basic_series<C>(std::move(out));
}

// Multiplication by a polynomial given as a sparse term list. The truncation of
// a is kept; the polynomial is exact and carries no truncation of its own.
template <typename C>
basic_series<C> mul(const basic_series<C> &a, const basic_term_list<C> &poly)
{
    const auto trunc = a.trunc();
    const auto &x = a.coeffs();
    std::vector<C> out(trunc + 1u);
    for (const auto &[e, c] : poly) {
        for (std::size_t n = e; n <= trunc; ++n) {
            if (x[n - e] != 0) {
                out[n] += c * x[n - e];
            }
        }
    }
    return basic_series<C>(std::move(out));
}

// Multiplication by q^e.
template <typename C>
basic_series<C> shift(const basic_series<C> &a, std::size_t e)
{
    const auto trunc = a.trunc();
    std::vector<C> out(trunc + 1u);
    for (std::size_t n = e; n <= trunc; ++n) {
        out[n] = a.coeffs()[n - e];
    }
    return basic_series<C>(std::move(out));
}

// Reciprocal series via b_0 = 1/a_0, b_n = -a_0 * sum_{k=1}^{n} a_k b_{n-k}.
// Only +-1 are units of the coefficient ring.
template <typename C>
basic_series<C> invert(const basic_series<C> &a)
{
    const auto &x = a.coeffs();
    const C &a0 = x[0];
    if (a0 != 1 && a0 != -1) {
        throw non_unit_constant_term("cannot invert a series whose constant term is not +1 or -1");
    }
    const auto trunc = a.trunc();
    std::vector<C> out(trunc + 1u);
    out[0] = a0;
    C acc;
    for (std::size_t n = 1; n <= trunc; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (x[k] != 0) {
                acc += x[k] * out[n - k];
            }
        }
        out[n] = a0 == 1 ? C(-acc) : acc;
    }
    return basic_series<C>(std::move(out));
}

// 1 / (1 - q^m).
template <typename C = integer>
basic_series<C> geometric(std::size_t m, order trunc)
{
    if (m == 0) {
        throw std::invalid_argument("geometric series needs a positive step");
    }
    std::vector<C> out(trunc + 1u);
    for (std::size_t n = 0; n <= trunc; n += m) {
        out[n] = 1;
    }
    return basic_series<C>(std::move(out));
}

namespace detail
{

// In-place multiplication of a dense coefficient vector by (1 - sign * q^e).
// Walks downward so that every read sees the pre-update value.
template <typename C>
void mul_binomial_inplace(std::vector<C> &c, std::size_t e, int sign)
{
    if (e == 0) {
        const C factor = 1 - sign;
        for (auto &v : c) {
            v *= factor;
        }
        return;
    }
    for (std::size_t n = c.size(); n-- > e;) {
        if (c[n - e] != 0) {
            if (sign > 0) {
                c[n] -= c[n - e];
            } else {
                c[n] += c[n - e];
            }
        }
    }
}

inline void check_sign(int sign)
{
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("q-Pochhammer sign must be +1 or -1");
    }
}

} // namespace detail

// prod_{i=0}^{n-1} (1 - sign * q^{base_exp + i}), i.e. (a;q)_n with a = sign * q^base_exp.
template <typename C = integer>
basic_series<C> pochhammer_finite(std::size_t base_exp, int sign, std::size_t n, order trunc)
{
    detail::check_sign(sign);
    std::vector<C> out(trunc + 1u);
    out[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        detail::mul_binomial_inplace(out, base_exp + i, sign);
    }
    return basic_series<C>(std::move(out));
}

// prod_{j>=0} (1 - sign * q^{base_exp + j*step}); factors beyond trunc are 1.
template <typename C = integer>
basic_series<C> pochhammer_infinite(std::size_t base_exp, int sign, std::size_t step, order trunc)
{
    detail::check_sign(sign);
    if (base_exp == 0 || step == 0) {
        throw std::invalid_argument("infinite q-Pochhammer product needs positive base exponent and step");
    }
    std::vector<C> out(trunc + 1u);
    out[0] = 1;
    for (std::size_t e = base_exp; e <= trunc; e += step) {
        detail::mul_binomial_inplace(out, e, sign);
    }
    return basic_series<C>(std::move(out));
}

template <typename C>
const C &coeff(const basic_series<C> &a, std::size_t n)
{
    return a.coeff(n);
}

template <typename C>
basic_series<C> operator+(const basic_series<C> &a, const basic_series<C> &b)
{
    return add(a, b);
}

template <typename C>
basic_series<C> operator-(const basic_series<C> &a, const basic_series<C> &b)
{
    return sub(a, b);
}

template <typename C>
basic_series<C> operator-(const basic_series<C> &a)
{
    return neg(a);
}

template <typename C>
basic_series<C> operator*(const basic_series<C> &a, const basic_series<C> &b)
{
    return mul(a, b);
}

template <typename C>
basic_series<C> operator*(const basic_series<C> &a, const basic_term_list<C> &p)
{
    return mul(a, p);
}

template <typename C>
basic_series<C> operator*(const basic_term_list<C> &p, const basic_series<C> &a)
{
    return mul(a, p);
}

} // namespace qhook

#endif
