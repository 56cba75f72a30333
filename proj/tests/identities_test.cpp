#include <vector>

#include <gtest/gtest.h>

#include <qhook/identities.hpp>
#include <qhook/partitions.hpp>

using namespace qhook;

namespace
{

std::vector<integer> first(const series &s, std::size_t count, std::size_t from = 0)
{
    return {s.coeffs().begin() + static_cast<std::ptrdiff_t>(from),
            s.coeffs().begin() + static_cast<std::ptrdiff_t>(from + count)};
}

std::vector<integer> ints(std::vector<int> v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST(Build, ExplicitPolynomials)
{
    EXPECT_EQ(build("PR", 13).value, from_terms(term_list{{2u, 1}, {3u, 2}, {4u, 2}, {5u, 3}, {6u, 3}, {7u, 3},
                                                          {8u, 2}, {9u, 1}, {10u, 1}},
                                                13));
    EXPECT_EQ(build("Phi", 13).value, from_terms(term_list{{2u, 1}, {3u, -2}, {4u, 3}, {6u, 5}, {7u, 2}, {8u, 5},
                                                           {9u, 4}, {10u, 3}, {11u, 3}, {12u, 1}, {13u, 1}},
                                                 13));
    EXPECT_EQ(build("PC", 20).value, from_terms(term_list{{2u, 2}, {3u, -1}, {4u, 2}, {5u, 1}, {7u, 1}}, 20));
    EXPECT_EQ(build("M", 13).value,
              from_terms(term_list{{0u, 1}, {1u, 1}, {2u, 2}, {3u, 1}, {4u, 2}, {5u, 1}, {6u, 1}}, 13));
}

TEST(Build, BaseBlock)
{
    EXPECT_EQ(first(build("G", 13).value, 6, 4), ints({3, 1, 5, 5, 11, 13}));
    // Early values are not covered by any sign claim.
    EXPECT_EQ(first(build("G", 13).value, 4), ints({0, 0, 1, -1}));
    EXPECT_EQ(first(build("F", 13).value, 4), ints({0, 0, 1, -1}));
}

TEST(Build, GeneratingFunctionsMatchBruteForce)
{
    const order n = 30;
    EXPECT_EQ(build("B21", n).value.coeffs(), make_hook_count_table(2, 1, n).values);
    EXPECT_EQ(build("B22", n).value.coeffs(), make_hook_count_table(2, 2, n).values);
    EXPECT_EQ(build("B32", n).value.coeffs(), make_hook_count_table(3, 2, n).values);
}

TEST(Build, SFirstValues)
{
    EXPECT_EQ(first(build("S", 20).value, 14), ints({0, 0, 0, 0, 0, 0, 1, 1, 3, 2, 6, 6, 11, 12}));
}

TEST(Build, Errors)
{
    EXPECT_THROW(build("nosuch", 20), unknown_name);
    EXPECT_THROW(build("Phi", 12), std::invalid_argument);
    for (const auto &name : catalog_names()) {
        EXPECT_EQ(build(name, 13).value.trunc(), 13u) << name;
        EXPECT_TRUE(is_catalog_name(name));
    }
    EXPECT_EQ(catalog_names().size(), 23u);
}

TEST(Build, ProductAndQuotientFormsOfPAgree)
{
    EXPECT_EQ(gf::p(200), gf::p_quotient(200));
}

TEST(Sylvester, SpecializationsMatchProducts)
{
    EXPECT_EQ(sylvester_rhs(0, 120), pochhammer_infinite(1, -1, 1, 120));
    EXPECT_EQ(sylvester_rhs(1, 120), pochhammer_infinite(2, -1, 1, 120));
    EXPECT_EQ(sylvester_rhs(3, 120), pochhammer_infinite(4, -1, 1, 120));
    EXPECT_EQ(sylvester_rhs(0, 0), series::constant(1, 0));
}

TEST(Syl3, RightHandSide)
{
    const auto rhs = syl3_rhs(50);
    EXPECT_EQ(rhs, gf::one_minus_q_times_d3(50));
    EXPECT_EQ(rhs[2], 0);
    EXPECT_EQ(rhs[7], d3_brute(7) - d3_brute(6));
    EXPECT_EQ(rhs[7], 1);
    EXPECT_THROW(syl3_rhs(2), std::invalid_argument);
}

TEST(Eq8, BothSidesAgree)
{
    EXPECT_EQ(eq8_lhs(150), eq8_rhs(150));
}

TEST(ClosedForm, CorollaryRhs)
{
    const auto d3 = d3_table(20);
    EXPECT_EQ(corollary_rhs(5, d3), 0);
    EXPECT_EQ(corollary_rhs(6, d3), 0);
    EXPECT_EQ(corollary_rhs(8, d3), 0);
    EXPECT_EQ(corollary_rhs(9, d3), 1);
    EXPECT_THROW(corollary_rhs(4, d3), std::invalid_argument);
    EXPECT_THROW(corollary_rhs(22, d3), insufficient_table);
}

TEST(ClosedForm, CumulativeC)
{
    const auto d3 = d3_table(10);
    EXPECT_EQ(cumulative_c(d3, 0), 1);
    EXPECT_EQ(cumulative_c(d3, 2), 1);
    // 1+0+0+1+1+1+1+2
    EXPECT_EQ(cumulative_c(d3, 7), 7);
    EXPECT_THROW(cumulative_c(d3, 11), insufficient_table);
}

TEST(ClosedForm, Theorem3HeadFromTelescopedForm)
{
    // c(n) - d3(n) plus the -2q - q^2 - q^3 head reproduces B22 - B21 for n <= 3.
    const auto d3 = d3_table(3);
    const std::vector<int> head{0, -2, -1, -1};
    const auto diff = build("B22", 13).value - build("B21", 13).value;
    const auto oracle22 = make_hook_count_table(2, 2, 3).values;
    const auto oracle21 = make_hook_count_table(2, 1, 3).values;
    const std::vector<int> net{0, -1, 0, 0};
    for (std::size_t n = 0; n <= 3; ++n) {
        const integer value = cumulative_c(d3, n) - d3[n] + head[n];
        EXPECT_EQ(value, net[n]) << n;
        EXPECT_EQ(diff[n], value) << n;
        EXPECT_EQ(oracle22[n] - oracle21[n], value) << n;
    }
}
