#include <algorithm>

#include "doctest.h"
#include "lzb/shapes.hpp"
#include "oracles.hpp"

using namespace lzb;

TEST_CASE("partition canonical form") {
    CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
    CHECK(Partition({0}).empty());
    CHECK(Partition{}.to_string() == "()");
    CHECK(Partition({3, 1}).to_string() == "(3,1)");
    CHECK(Partition({3, 1}).size() == 4);
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({-1}));
}

TEST_CASE("is_horizontal_strip examples") {
    CHECK(is_horizontal_strip({2, 1}, {1, 1}));
    CHECK_FALSE(is_horizontal_strip({2, 2}, {1}));
    CHECK(is_horizontal_strip({3}, {3}));
    CHECK_FALSE(is_horizontal_strip({1}, {2}));
}

TEST_CASE("horizontal_strips examples") {
    CHECK(horizontal_strips({2, 1}, 2) == std::vector<Partition>{{2, 1}, {2}, {1, 1}, {1}});
    CHECK(horizontal_strips({1}, 0) == std::vector<Partition>{Partition{}});
    CHECK(horizontal_strips(Partition{}, 3) == std::vector<Partition>{Partition{}});
}

TEST_CASE("strip predicate agrees with the cell-based check") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : oracle::sub_partitions(lam))
                CHECK_MESSAGE(is_horizontal_strip(lam, mu) == oracle::strip_by_cells(lam, mu),
                              lam.to_string(), "/", mu.to_string());
}

TEST_CASE("horizontal_strips equals the filtered containment list") {
    for (int n = 0; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int max_len = 0; max_len <= 4; ++max_len) {
                std::vector<Partition> expected;
                for (const Partition& mu : oracle::sub_partitions(lam))
                    if (mu.length() <= max_len && oracle::strip_by_cells(lam, mu)) expected.push_back(mu);
                std::sort(expected.rbegin(), expected.rend());
                const auto got = horizontal_strips(lam, max_len);
                CHECK(got == expected);
                for (const Partition& mu : got) {
                    CHECK(lam.contains(mu));
                    CHECK(is_horizontal_strip(lam, mu));
                }
            }
}

TEST_CASE("q_binomial examples and properties") {
    CHECK(q_binomial(5, 0) == LaurentQ(1));
    CHECK(q_binomial(2, 1) == LaurentQ(1) + LaurentQ::q_power(1));
    CHECK(q_binomial(4, 2).to_string() == "1 + q + 2*q^2 + q^3 + q^4");
    CHECK_THROWS(q_binomial(3, 4));
    CHECK_THROWS(q_binomial(3, -1));
    for (int m = 0; m <= 9; ++m) {
        BigInt ordinary = 1;
        for (int r = 0; r <= m; ++r) {
            const LaurentQ g = q_binomial(m, r);
            CHECK(g == q_binomial(m, m - r));
            CHECK(g.eval_at_one() == BigRat(ordinary));
            std::map<int, BigInt> coeffs;
            for (const auto& [e, c] : g.terms()) coeffs[e] = c.get_num();
            CHECK(coeffs == oracle::box_partition_counts(m, r));
            ordinary = ordinary * (m - r) / (r + 1);
        }
    }
}

TEST_CASE("partition enumeration counts") {
    const std::vector<int> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n < 10; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == p[static_cast<std::size_t>(n)]);
    CHECK(partitions_of(5, 2).size() == 3);
}
