#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "tvlab/comb.hpp"

using namespace tvlab;

TEST_CASE("for_each_combination visits k-subsets in lexicographic order") {
    std::vector<std::vector<int>> seen;
    for_each_combination(4, 2, [&](const std::vector<int>& c) {
        seen.push_back(c);
        return true;
    });
    const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == expected);
}

TEST_CASE("for_each_combination counts match binomials") {
    int count = 0;
    for_each_combination(7, 3, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    CHECK(count == 35);

    count = 0;
    for_each_combination(5, 0, [&](const std::vector<int>& c) {
        CHECK(c.empty());
        ++count;
        return true;
    });
    CHECK(count == 1);

    count = 0;
    for_each_combination(3, 5, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    CHECK(count == 0);
}

TEST_CASE("for_each_combination stops when the visitor returns false") {
    int count = 0;
    for_each_combination(6, 2, [&](const std::vector<int>&) { return ++count < 4; });
    CHECK(count == 4);
}

TEST_CASE("set partitions arrive canonical and complete") {
    const auto parts = set_partitions(4, 2);
    CHECK(parts.size() == stirling2(4, 2));
    CHECK(parts.size() == 7);
    for (const auto& partition : parts) {
        REQUIRE(partition.size() == 2);
        // Parts ordered by minimum element; part members ascending; first part
        // contains element 0.
        CHECK(partition[0][0] == 0);
        int total = 0;
        int last_min = -1;
        for (const auto& part : partition) {
            REQUIRE(!part.empty());
            CHECK(std::is_sorted(part.begin(), part.end()));
            CHECK(part.front() > last_min);
            last_min = part.front();
            total += static_cast<int>(part.size());
        }
        CHECK(total == 4);
    }
}

TEST_CASE("set partition counts match Stirling numbers") {
    CHECK(set_partitions(5, 3).size() == stirling2(5, 3));
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(9, 3) == 3025);
    CHECK(stirling2(7, 1) == 1);
    CHECK(stirling2(7, 7) == 1);
    CHECK(stirling2(3, 4) == 0);
    CHECK(stirling2(16, 4) == 171798901ULL);
}

TEST_CASE("for_each_set_partition supports early exit") {
    int count = 0;
    for_each_set_partition(6, 3, [&](const std::vector<std::vector<int>>&) { return ++count < 5; });
    CHECK(count == 5);
}

TEST_CASE("factorial and the Tverberg count formula") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(expected_tverberg_count(1, 3) == 2);
    CHECK(expected_tverberg_count(2, 3) == 4);
    CHECK(expected_tverberg_count(3, 3) == 8);
    CHECK(expected_tverberg_count(4, 3) == 16);
    CHECK(expected_tverberg_count(2, 2) == 1);
    CHECK(expected_tverberg_count(1, 4) == 6);
    CHECK(expected_tverberg_count(3, 4) == 216);
}
