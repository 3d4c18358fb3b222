#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hive/cone.hpp"
#include "hive/counting.hpp"

#include "golden_appendix.hpp"

using hive::Entry;
using hive::Hive;
using hive::TriangularArray;

namespace {

// Naive reducibility: subtract every nonzero hive of smaller degree.
bool naive_irreducible(const Hive& h, const std::vector<Hive>& all) {
    if (h.is_zero()) return false;
    for (const auto& g : all) {
        if (g.is_zero() || g.degree() >= h.degree()) continue;
        if (hive::try_subtract(h, g)) return false;
    }
    return true;
}

Hive rows(std::vector<std::vector<Entry>> r) { return Hive::make(TriangularArray::from_rows(r)); }

} // namespace

TEST_CASE("cone_inequalities sizes and the n = 4 listing") {
    auto s2 = hive::cone_inequalities(2);
    CHECK(s2.rows.size() == 9);
    CHECK(s2.equations.size() == 1);
    CHECK(s2.contains(Hive::zero(2).flat()));
    auto s4 = hive::cone_inequalities(4);
    CHECK(s4.rows.size() == 30);
    CHECK(hive::export_appendix_inequalities(4) == golden::kInequalitiesN4);
}

TEST_CASE("cone membership agrees with validate on random arrays") {
    // Random sums of basis hives, half of them nudged by +-1 in one entry, so
    // that both members and near misses are well represented.
    std::mt19937 rng(7);
    for (int n = 2; n <= 4; ++n) {
        const auto& pres = hive::cone_presentation(n);
        auto sys = hive::cone_inequalities(n);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(pres.basis.size()) - 1);
        std::uniform_int_distribution<int> terms(0, 6), coord(0, hive::triangle_size(n) - 1);
        std::bernoulli_distribution nudge(0.5), up(0.5);
        int valid = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Entry> v(hive::triangle_size(n), 0);
            for (int k = terms(rng); k > 0; --k) {
                const auto& b = pres.basis[pick(rng)];
                for (std::size_t c = 0; c < v.size(); ++c) v[c] += b.flat()[c];
            }
            if (nudge(rng)) v[coord(rng)] += up(rng) ? 1 : -1;
            auto t = TriangularArray::from_flat(v);
            bool ok = static_cast<bool>(Hive::validate(t));
            CHECK(sys.contains(t.flat()) == ok);
            valid += ok;
        }
        CHECK(valid > 200);
        CHECK(valid < 1000);
    }
}

TEST_CASE("cone membership agrees with validate on all small boxes") {
    // Every array with entries in [-1, 3] and n = 2: 5^6 points.
    auto sys = hive::cone_inequalities(2);
    std::vector<Entry> v(6, -1);
    int count = 0;
    while (true) {
        auto t = TriangularArray::from_flat(v);
        bool ok = static_cast<bool>(Hive::validate(t));
        CHECK(sys.contains(v) == ok);
        count += ok && t.at(3, 3) <= 6;
        std::size_t k = 0;
        while (k < v.size() && v[k] == 3) v[k++] = -1;
        if (k == v.size()) break;
        ++v[k];
    }
    CHECK(count > 0);
}

TEST_CASE("hives_up_to_degree counts") {
    CHECK(hive::hives_up_to_degree(2, 3).size() == 19);
    CHECK(hive::hives_up_to_degree(3, 4).size() == 52);
    auto z = hive::hives_up_to_degree(4, 0);
    REQUIRE(z.size() == 1);
    CHECK(z.front().is_zero());
    auto all = hive::hives_up_to_degree(3, 5);
    CHECK(std::is_sorted(all.begin(), all.end(), hive::degree_then_coordinates));
    std::set<Hive> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
}

TEST_CASE("hilbert_basis agrees with the naive irreducibility test") {
    for (int n = 2; n <= 3; ++n) {
        auto all = hive::hives_up_to_degree(n, 6);
        std::vector<Hive> naive;
        for (const auto& h : all)
            if (naive_irreducible(h, all)) naive.push_back(h);
        CHECK(hive::hilbert_basis(n, 6) == naive);
    }
}

TEST_CASE("GL(2) and GL(3) bases match the presentations") {
    for (int n = 2; n <= 3; ++n) {
        const auto& pres = hive::cone_presentation(n);
        std::set<Hive> published(pres.basis.begin(), pres.basis.end());
        auto found = hive::hilbert_basis(n, 8);
        CHECK(std::set<Hive>(found.begin(), found.end()) == published);
    }
    CHECK_THROWS_AS(hive::cone_presentation(5), std::out_of_range);
}

TEST_CASE("decompositions") {
    const auto& p3 = hive::cone_presentation(3);
    auto h = rows({{0}, {2, 3}, {3, 4, 5}, {3, 5, 6, 6}});
    auto hp = rows({{0}, {2, 3}, {3, 5, 5}, {3, 5, 6, 6}});
    CHECK(hive::decompose(h, p3) == std::vector<int>{3, 4, 8});
    auto dp = hive::decompose(hp, p3);
    CHECK(hive::sum_of(dp, p3) == hp);
    auto all_hp = hive::all_decompositions(hp, p3);
    CHECK(std::find(all_hp.begin(), all_hp.end(), std::vector<int>{1, 6, 7}) != all_hp.end());
    CHECK(std::find(all_hp.begin(), all_hp.end(), std::vector<int>{5, 10}) != all_hp.end());
    CHECK(hive::decompose(Hive::zero(3), p3).empty());
    for (int i = 1; i <= 10; ++i)
        CHECK(hive::all_decompositions(p3.at(i), p3) == std::vector<std::vector<int>>{{i}});

    const auto& p4 = hive::cone_presentation(4);
    auto all4 = hive::all_decompositions(hive::sum_of({1, 7, 9}, p4), p4);
    CHECK(std::find(all4.begin(), all4.end(), std::vector<int>{6, 15}) != all4.end());
    for (const auto& d : all4) CHECK(hive::sum_of(d, p4) == hive::sum_of({1, 7, 9}, p4));

    CHECK_THROWS_AS(hive::decompose(Hive::zero(2), p3), hive::RankMismatch);
    hive::ConePresentation partial = p3;
    partial.basis.pop_back();
    partial.degrees.pop_back();
    CHECK_THROWS_AS(hive::decompose(p3.at(10), partial), hive::NoDecomposition);
}

TEST_CASE("relations balance") {
    CHECK(hive::verify_relations(hive::cone_presentation(2)).empty());
    auto r3 = hive::verify_relations(hive::cone_presentation(3));
    REQUIRE(r3.size() == 1);
    CHECK(r3.front().holds);
    auto r4 = hive::verify_relations(hive::cone_presentation(4));
    REQUIRE(r4.size() == 15);
    for (const auto& r : r4) CHECK_MESSAGE(r.holds, r.name);

    hive::ConePresentation broken = hive::cone_presentation(3);
    broken.relations.front().right = {5, 9};
    auto bad = hive::verify_relations(broken);
    CHECK_FALSE(bad.front().holds);
    CHECK(bad.front().coordinate.has_value());
}

TEST_CASE("generator export") {
    CHECK(hive::export_appendix_generators(hive::cone_presentation(4)) == golden::kGeneratorsN4);
    CHECK(hive::to_string(hive::cone_presentation(4).relations.front()) == "r1: h1 + h7 + h9 = h6 + h15");
}

TEST_CASE("every hive of degree <= 8 decomposes, and minimality") {
    for (int n = 2; n <= 4; ++n) {
        const auto& pres = hive::cone_presentation(n);
        for (const auto& h : hive::hives_up_to_degree(n, 8)) {
            auto d = hive::decompose(h, pres);
            CHECK(hive::sum_of(d, pres) == h);
        }
        for (int i = 1; i <= static_cast<int>(pres.basis.size()); ++i) {
            hive::ConePresentation without = pres;
            without.basis.erase(without.basis.begin() + (i - 1));
            without.degrees.erase(without.degrees.begin() + (i - 1));
            CHECK_THROWS_AS(hive::decompose(pres.at(i), without), hive::NoDecomposition);
        }
    }
}
