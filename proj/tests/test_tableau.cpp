#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hive/counting.hpp"
#include "hive/tableau.hpp"

using hive::Entry;
using hive::Filling;
using hive::Hive;
using hive::Partition;
using hive::SkewShape;
using hive::TriangularArray;

namespace {

const Filling kBig = {{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
                      {0, 0, 0, 1, 2, 2, 2},
                      {0, 2, 3, 3, 3},
                      {2, 4, 4}};
const SkewShape kBigShape{Partition{11, 7, 5, 3}, Partition{5, 3, 1}};

Hive rows(std::vector<std::vector<Entry>> r) { return Hive::make(TriangularArray::from_rows(r)); }

} // namespace

TEST_CASE("validate_tableau") {
    auto ok = hive::validate_tableau(4, kBigShape, kBig);
    REQUIRE(static_cast<bool>(ok));
    CHECK(ok.tableau->content() == Partition{7, 5, 3, 2});
    CHECK(ok.tableau->count(2, 2) == 3);

    // Superstandard straight shape.
    Filling super = {{1, 1, 1}, {2, 2}, {3}};
    auto s = hive::validate_tableau(3, SkewShape(Partition{3, 2, 1}, Partition{}), super);
    REQUIRE(static_cast<bool>(s));
    CHECK(s.tableau->content() == Partition{3, 2, 1});

    Filling broken = kBig;
    std::swap(broken[2][2], broken[1][4]);
    auto bad = hive::validate_tableau(4, kBigShape, broken);
    CHECK_FALSE(static_cast<bool>(bad));
    REQUIRE(bad.violation.has_value());

    Filling col = {{1, 1}, {1}};
    auto c = hive::validate_tableau(2, SkewShape(Partition{2, 1}, Partition{}), col);
    REQUIRE(c.violation.has_value());
    CHECK(c.violation->defect == hive::TableauDefect::ColumnOrder);
    CHECK(c.violation->row == 2);
    CHECK(c.violation->col == 1);

    Filling lattice = {{2}};
    auto l = hive::validate_tableau(2, SkewShape(Partition{1}, Partition{}), lattice);
    REQUIRE(l.violation.has_value());
    CHECK(l.violation->defect == hive::TableauDefect::Lattice);

    Filling range = {{3}};
    auto r = hive::validate_tableau(2, SkewShape(Partition{1}, Partition{}), range);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->defect == hive::TableauDefect::EntryRange);

    Filling rows3 = {{1}, {2}, {3}};
    auto t = hive::validate_tableau(2, SkewShape(Partition{1, 1, 1}, Partition{}), rows3);
    REQUIRE(t.violation.has_value());
    CHECK(t.violation->defect == hive::TableauDefect::TooManyRows);

    CHECK_THROWS_AS(hive::validate_tableau(4, kBigShape, Filling{{1}}), hive::ShapeError);
    Filling short_row = kBig;
    short_row[3].pop_back();
    CHECK_THROWS_AS(hive::validate_tableau(4, kBigShape, short_row), hive::ShapeError);
}

TEST_CASE("enumerate_tableaux: worked example") {
    auto ts = hive::enumerate_tableaux(3, {3, 2, 1}, {2, 1}, {2, 1});
    REQUIRE(ts.size() == 2);
    std::vector<std::string> seen;
    for (const auto& t : ts) seen.push_back(hive::render(t));
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<std::string>{"..1/.1/2", "..1/.2/1"});
}

TEST_CASE("enumerate_tableaux: the ten GL(2) tableaux with three outer boxes") {
    std::vector<std::string> seen;
    for (const auto& lambda : hive::partitions_of(3, 2))
        for (const auto& mu : hive::partitions_up_to(3, 2))
            for (const auto& nu : hive::partitions_of(3 - mu.size(), 2))
                for (const auto& t : hive::enumerate_tableaux(2, lambda, mu, nu))
                    seen.push_back(hive::render(t));
    std::sort(seen.begin(), seen.end());
    std::vector<std::string> expected{"...", "../.", "..1", "../1", ".1/.",
                                      ".11", ".1/1", ".1/2", "111", "11/2"};
    std::sort(expected.begin(), expected.end());
    CHECK(seen == expected);
}

TEST_CASE("enumerate_tableaux: degenerate inputs") {
    CHECK(hive::enumerate_tableaux(3, {1, 1, 1, 1}, {}, {1, 1, 1, 1}).empty());
    CHECK(hive::enumerate_tableaux(3, {2, 1}, {1}, {1}).empty());
    CHECK(hive::enumerate_tableaux(3, {2}, {1, 1}, {}).empty());
}

TEST_CASE("tableau to hive and back") {
    auto T = hive::make_tableau(3, SkewShape({3, 2, 1}, {2, 1}), {{0, 0, 1}, {0, 2}, {1}});
    auto Tp = hive::make_tableau(3, SkewShape({3, 2, 1}, {2, 1}), {{0, 0, 1}, {0, 1}, {2}});
    CHECK(hive::tableau_to_hive(T) == rows({{0}, {2, 3}, {3, 4, 5}, {3, 5, 6, 6}}));
    CHECK(hive::tableau_to_hive(Tp) == rows({{0}, {2, 3}, {3, 5, 5}, {3, 5, 6, 6}}));
    CHECK(hive::hive_to_tableau(rows({{0}, {2, 3}, {3, 4, 5}, {3, 5, 6, 6}})) == T);

    auto col = hive::make_tableau(2, SkewShape({1, 1}, {}), {{1}, {2}});
    CHECK(hive::tableau_to_hive(col) == rows({{0}, {0, 1}, {0, 1, 2}}));

    auto empty = hive::hive_to_tableau(Hive::zero(3));
    CHECK(empty.rows().empty());
    CHECK(empty.shape().cells() == 0);
}

TEST_CASE("bijection round trip for small degrees") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d)
            for (const auto& tr : hive::candidate_triples(n, d)) {
                auto ts = hive::enumerate_tableaux(n, tr.lambda, tr.mu, tr.nu);
                auto hs = hive::enumerate_hives(n, tr.lambda, tr.mu, tr.nu);
                CHECK(ts.size() == hs.size());
                for (const auto& t : ts) {
                    auto h = hive::tableau_to_hive(t);
                    CHECK(h.boundary() == hive::Boundary{tr.lambda, tr.mu, tr.nu});
                    CHECK(hive::hive_to_tableau(h) == t);
                }
                for (const auto& h : hs) CHECK(hive::tableau_to_hive(hive::hive_to_tableau(h)) == h);
            }
}
