#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hive/shapes.hpp"

using hive::Partition;

namespace {

// Brute force: every tuple in [0,d]^p that is weakly decreasing with sum <= d.
std::set<std::vector<int>> brute_force_partitions(int d, int p) {
    std::set<std::vector<int>> out;
    std::vector<int> t(p, 0);
    while (true) {
        int s = 0;
        for (int v : t) s += v;
        if (s <= d && hive::is_dominant(t)) {
            auto trimmed = t;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.insert(trimmed);
        }
        int k = 0;
        while (k < p && t[k] == d) t[k++] = 0;
        if (k == p) break;
        ++t[k];
    }
    return out;
}

} // namespace

TEST_CASE("is_dominant") {
    CHECK(hive::is_dominant(std::vector<int>{3, 2, 1}));
    CHECK(hive::is_dominant(std::vector<int>{0, 0, 0}));
    CHECK(hive::is_dominant(std::vector<int>{}));
    CHECK_FALSE(hive::is_dominant(std::vector<int>{1, 2}));
    CHECK_FALSE(hive::is_dominant(std::vector<int>{2, -1}));
}

TEST_CASE("partition normalisation and comparison") {
    CHECK(Partition{2, 1, 0} == Partition{2, 1});
    CHECK(Partition{2, 1, 0}.length() == 2);
    CHECK(Partition{3, 2, 1}.size() == 6);
    CHECK(Partition{2, 1}[5] == 0);
    CHECK(Partition{2, 1}.padded(4) == std::vector<int>{2, 1, 0, 0});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK_FALSE(Partition{3, 1}.contains(Partition{2, 2}));
}

TEST_CASE("parse_partition") {
    CHECK(hive::parse_partition("3,2,1") == Partition{3, 2, 1});
    CHECK(hive::parse_partition("2,1,0") == Partition{2, 1});
    CHECK(hive::parse_partition("0") == Partition{});
    CHECK(hive::parse_partition("") == Partition{});
    CHECK_THROWS_AS(hive::parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(hive::parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(hive::parse_partition("1,,1"), std::invalid_argument);
}

TEST_CASE("partitions_up_to small cases") {
    CHECK(hive::partitions_up_to(1, 2) == std::vector<Partition>{Partition{}, Partition{1}});
    CHECK(hive::partitions_up_to(0, 4) == std::vector<Partition>{Partition{}});
    auto p = hive::partitions_up_to(3, 2);
    std::vector<Partition> expected{{}, {1}, {2}, {1, 1}, {3}, {2, 1}};
    CHECK(p == expected);
}

TEST_CASE("partitions_up_to agrees with brute force") {
    for (int d = 0; d <= 7; ++d)
        for (int p = 1; p <= 4; ++p) {
            auto got = hive::partitions_up_to(d, p);
            auto oracle = brute_force_partitions(d, p);
            CHECK(got.size() == oracle.size());
            std::set<std::vector<int>> seen;
            int last_size = 0;
            for (const auto& k : got) {
                CHECK(hive::is_dominant(k.parts()));
                CHECK(k.size() >= last_size);
                last_size = k.size();
                seen.insert(k.parts());
            }
            CHECK(seen == oracle);
        }
}

TEST_CASE("sum, union and dominance") {
    CHECK(hive::sum(Partition{2, 1}, Partition{1, 1, 1}) == Partition{3, 2, 1});
    CHECK(hive::union_of(Partition{2, 1}, Partition{3, 1}) == Partition{3, 2, 1, 1});
    CHECK(hive::dominated_by(Partition{1, 1, 1}, Partition{2, 1}));
    CHECK(hive::dominated_by(Partition{2, 1}, Partition{3}));
    CHECK_FALSE(hive::dominated_by(Partition{3}, Partition{2, 1}));
    CHECK_FALSE(hive::dominated_by(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(hive::dominated_by(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST_CASE("skew shapes") {
    hive::SkewShape s(Partition{11, 7, 5, 3}, Partition{5, 3, 1});
    CHECK(s.cells() == 17);
    CHECK(s.rows() == 4);
    CHECK_THROWS_AS(hive::SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
}
