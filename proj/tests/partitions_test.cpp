#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <qhook/partitions.hpp>

using namespace qhook;

namespace
{

std::vector<integer> ints(std::vector<int> v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST(Partition, RejectsMalformed)
{
    EXPECT_THROW(partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(partition({3, 0}), std::invalid_argument);
    EXPECT_NO_THROW(partition({3, 3, 1}));
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(partition({4, 3, 1, 1}).conjugate(), partition({4, 2, 2, 1}));
    EXPECT_EQ(partition{}.conjugate(), partition{});
}

TEST(Enumerate, RegularityMembership)
{
    const auto nine = enumerate(9, t_regular{5});
    EXPECT_NE(std::find(nine.begin(), nine.end(), partition({4, 3, 1, 1})), nine.end());
    for (const auto &p : nine) {
        EXPECT_EQ(std::count(p.parts().begin(), p.parts().end(), 5u), 0) << to_string(p);
    }
    EXPECT_TRUE(satisfies(partition({4, 3, 1, 1}), t_regular{5}));
    EXPECT_FALSE(satisfies(partition({10, 7, 3, 1}), t_regular{5}));
}

TEST(Enumerate, EmptyPartitionOfZero)
{
    for (const constraint c : {constraint{unrestricted{}}, constraint{t_regular{3}}, constraint{distinct_min{3}}}) {
        const auto all = enumerate(0, c);
        ASSERT_EQ(all.size(), 1u);
        EXPECT_TRUE(all.front().empty());
    }
}

TEST(Enumerate, LexicographicallyDecreasing)
{
    const auto all = enumerate(6, unrestricted{});
    ASSERT_EQ(all.size(), 11u);
    EXPECT_EQ(all.front(), partition({6}));
    EXPECT_EQ(all.back(), partition({1, 1, 1, 1, 1, 1}));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), std::greater<>{}));
}

TEST(Enumerate, KnownCounts)
{
    // OEIS A000041, A000009, A025147-style d3 values.
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
    const std::vector<std::size_t> odd{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27};
    for (unsigned n = 0; n < p.size(); ++n) {
        EXPECT_EQ(count_partitions(n, unrestricted{}), p[n]) << n;
        EXPECT_EQ(count_partitions(n, t_regular{2}), odd[n]) << n;
    }
    EXPECT_THROW(count_partitions(3, t_regular{1}), std::invalid_argument);
    EXPECT_THROW(count_partitions(3, distinct_min{0}), std::invalid_argument);
}

TEST(Enumerate, EachPartitionOnce)
{
    for (unsigned n = 0; n <= 18; ++n) {
        const auto all = enumerate(n, t_regular{3});
        const std::set<partition> unique(all.begin(), all.end());
        EXPECT_EQ(unique.size(), all.size());
        for (const auto &p : all) {
            EXPECT_EQ(p.weight(), n);
            EXPECT_TRUE(satisfies(p, t_regular{3}));
        }
    }
}

TEST(HookLengths, Examples)
{
    EXPECT_EQ(hook_lengths(partition({4, 3, 1, 1})), (std::vector<unsigned>{7, 5, 4, 3, 2, 2, 1, 1, 1}));
    EXPECT_EQ(hook_lengths(partition({1})), (std::vector<unsigned>{1}));
    EXPECT_EQ(hook_lengths(partition({2, 1})), (std::vector<unsigned>{3, 1, 1}));
    EXPECT_TRUE(hook_lengths(partition{}).empty());
}

TEST(CountHooks, SmallValues)
{
    EXPECT_EQ(count_hooks_brute(2, 1, 1), 1);
    EXPECT_EQ(count_hooks_brute(3, 2, 4) - count_hooks_brute(2, 2, 4), 3);
    for (unsigned t = 2; t <= 5; ++t) {
        for (unsigned k = 1; k <= 4; ++k) {
            EXPECT_EQ(count_hooks_brute(t, k, 0), 0);
        }
    }
    EXPECT_THROW(count_hooks_brute(2, 0, 3), std::invalid_argument);
}

TEST(CountHooks, TablesMatchDirectCounts)
{
    // Values from an independent enumeration.
    EXPECT_EQ(make_hook_count_table(2, 1, 12).values, ints({0, 1, 1, 2, 3, 4, 6, 8, 11, 14, 19, 24, 31}));
    EXPECT_EQ(make_hook_count_table(2, 2, 12).values, ints({0, 0, 1, 2, 2, 4, 6, 8, 11, 15, 20, 26, 34}));
    EXPECT_EQ(make_hook_count_table(3, 2, 12).values, ints({0, 0, 2, 1, 5, 5, 11, 13, 22, 28, 43, 53, 79}));
    EXPECT_EQ(make_hook_count_table(2, 3, 12).values, ints({0, 0, 0, 2, 1, 2, 5, 5, 7, 11, 15, 18, 25}));
    EXPECT_EQ(make_hook_count_table(3, 3, 12).values, ints({0, 0, 0, 2, 3, 5, 6, 11, 17, 23, 33, 46, 63}));
    EXPECT_EQ(make_hook_count_table(4, 2, 12).values, ints({0, 0, 2, 2, 5, 7, 12, 18, 27, 39, 55, 76, 106}));

    const auto by_length = hook_counts_by_length(3, 4, 14);
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned n = 0; n <= 14; ++n) {
            EXPECT_EQ(by_length[k][n], count_hooks_brute(3, k, n)) << k << ' ' << n;
        }
    }
}

TEST(D3, Values)
{
    EXPECT_EQ(d3_brute(0), 1);
    EXPECT_EQ(d3_brute(1), 0);
    EXPECT_EQ(d3_brute(2), 0);
    EXPECT_EQ(d3_brute(7), 2);
    EXPECT_EQ(d3_table(19), ints({1, 0, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 15, 17}));
}

TEST(Injection, Examples)
{
    const auto single = injection(partition({9}));
    EXPECT_EQ(single.target_index, 0u);
    EXPECT_TRUE(single.image.empty());

    const auto two = injection(partition({7, 5}));
    EXPECT_EQ(two.target_index, 5u);
    EXPECT_EQ(two.image, partition({5}));

    const auto three = injection(partition({9, 5, 3}));
    EXPECT_EQ(three.target_index, 8u);
    EXPECT_EQ(three.image, partition({5, 3}));
}

TEST(Injection, InvalidDomain)
{
    EXPECT_THROW(injection(partition({3, 3})), invalid_domain);
    EXPECT_THROW(injection(partition({5, 2})), invalid_domain);
    EXPECT_THROW(injection(partition({3})), invalid_domain);
    EXPECT_THROW(injection(partition{}), invalid_domain);
}

TEST(Injection, ExhaustivelyInjective)
{
    for (unsigned n = 5; n <= 40; ++n) {
        std::set<injection_result> seen;
        for (const auto &p : enumerate(n - 1, distinct_min{3})) {
            const auto r = injection(p);
            EXPECT_LE(r.target_index, n - 5);
            EXPECT_NE(r.target_index, 1u);
            EXPECT_NE(r.target_index, 2u);
            EXPECT_EQ(r.image.weight(), r.target_index);
            EXPECT_TRUE(satisfies(r.image, distinct_min{3}));
            EXPECT_TRUE(seen.insert(r).second) << to_string(p);
        }
    }
}
