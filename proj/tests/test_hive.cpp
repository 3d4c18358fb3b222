#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hive/hive.hpp"

using hive::Entry;
using hive::Hive;
using hive::Partition;
using hive::TriangularArray;

namespace {

Hive rows(std::vector<std::vector<Entry>> r) { return Hive::make(TriangularArray::from_rows(r)); }

// Worked example for GL(3).
const std::vector<std::vector<Entry>> kH = {{0}, {2, 3}, {3, 4, 5}, {3, 5, 6, 6}};
const std::vector<std::vector<Entry>> kHPrime = {{0}, {2, 3}, {3, 5, 5}, {3, 5, 6, 6}};

Hive gl3(int i) {
    static const std::vector<std::vector<Entry>> basis = {
        {0, 0, 1, 0, 1, 1, 0, 1, 1, 1}, {0, 0, 1, 0, 1, 2, 0, 1, 2, 3},
        {0, 0, 1, 0, 1, 2, 0, 1, 2, 2}, {0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 1, 2, 2, 1, 2, 2, 2}, {0, 1, 1, 1, 2, 2, 1, 2, 3, 3},
        {0, 1, 1, 2, 2, 2, 2, 2, 2, 2}, {0, 1, 1, 2, 2, 2, 2, 3, 3, 3},
        {0, 1, 1, 2, 2, 2, 3, 3, 3, 3}, {0, 1, 2, 2, 3, 3, 2, 3, 4, 4}};
    return Hive::from_flat(3, basis[i - 1]);
}

// Direct evaluation of every defining inequality, written out independently
// of Hive::validate.
bool naive_is_hive(const TriangularArray& t) {
    const int n = t.rank();
    auto h = [&](int i, int j) { return t.at(i, j); };
    if (h(1, 1) != 0) return false;
    std::vector<Entry> a, b, c;
    for (int i = 1; i <= n; ++i) {
        a.push_back(h(i + 1, i + 1) - h(i, i));
        b.push_back(h(i + 1, 1) - h(i, 1));
        c.push_back(h(n + 1, i + 1) - h(n + 1, i));
    }
    for (auto* s : {&a, &b, &c})
        for (int i = 0; i < n; ++i) {
            if ((*s)[i] < 0) return false;
            if (i + 1 < n && (*s)[i] < (*s)[i + 1]) return false;
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            if (j < i && i >= 2) {
                if (h(i, j) + h(i + 1, j + 1) < h(i + 1, j) + h(i, j + 1)) return false;
                if (h(i, j) + h(i, j + 1) < h(i + 1, j + 1) + h(i - 1, j)) return false;
            }
            if (j >= 2 && i >= 2)
                if (h(i + 1, j) + h(i, j) < h(i + 1, j + 1) + h(i, j - 1)) return false;
        }
    return true;
}

} // namespace

TEST_CASE("triangular array shapes") {
    CHECK(hive::triangle_size(4) == 15);
    CHECK(hive::triangle_index(1, 1) == 0);
    CHECK(hive::triangle_index(3, 2) == 4);
    CHECK_THROWS_AS(TriangularArray::from_flat({0, 1, 2, 3}), hive::ShapeError);
    CHECK_THROWS_AS(TriangularArray::from_rows({{0}, {1}}), hive::ShapeError);
    CHECK_THROWS_AS(Hive::from_flat(3, {0, 0, 1, 0, 1, 2}), hive::ShapeError);
    auto t = TriangularArray::from_flat({0, 0, 1, 0, 1, 2});
    CHECK(t.rank() == 2);
    CHECK(t.rows() == std::vector<std::vector<Entry>>{{0}, {0, 1}, {0, 1, 2}});
}

TEST_CASE("validate accepts and rejects") {
    auto h1 = Hive::validate(TriangularArray::from_rows({{0}, {0, 1}, {0, 1, 2}}));
    CHECK(static_cast<bool>(h1));
    auto zero = Hive::validate(TriangularArray(2));
    REQUIRE(static_cast<bool>(zero));
    CHECK(zero.hive->boundary() == hive::Boundary{{}, {}, {}});

    auto bad = Hive::validate(TriangularArray::from_rows({{0}, {0, 2}, {0, 1, 2}}));
    CHECK_FALSE(static_cast<bool>(bad));
    REQUIRE_FALSE(bad.violations.empty());
    // h21 + h32 >= h31 + h22 fails: 0 + 1 < 0 + 2.
    bool found = false;
    for (const auto& v : bad.violations)
        if (v.condition == hive::Condition::RhombusFirst && v.i == 2 && v.j == 1) found = true;
    CHECK(found);
    CHECK_THROWS_AS(Hive::make(TriangularArray::from_rows({{0}, {0, 2}, {0, 1, 2}})),
                    hive::InvalidHive);
    auto corner = Hive::validate(TriangularArray::from_rows({{1}, {1, 1}, {1, 1, 1}}));
    CHECK_FALSE(static_cast<bool>(corner));
    CHECK(corner.violations.front().condition == hive::Condition::Corner);
}

TEST_CASE("boundary orientation") {
    auto b = rows(kH).boundary();
    CHECK(b.lambda == Partition{3, 2, 1});
    CHECK(b.mu == Partition{2, 1});
    CHECK(b.nu == Partition{2, 1});
    auto b3 = rows({{0}, {1, 1}, {1, 1, 1}}).boundary();
    CHECK(b3.lambda == Partition{1});
    CHECK(b3.mu == Partition{1});
    CHECK(b3.nu == Partition{});
    CHECK(Hive::zero(3).boundary() == hive::Boundary{{}, {}, {}});
}

TEST_CASE("monoid structure") {
    CHECK(rows(kH) + Hive::zero(3) == rows(kH));
    CHECK(gl3(3) + gl3(4) + gl3(8) == rows(kH));
    CHECK(gl3(1) + gl3(6) + gl3(7) == rows(kHPrime));
    CHECK(gl3(10).degree() == 4);
    CHECK(Hive::zero(4).degree() == 0);
    CHECK_THROWS_AS(add(Hive::zero(2), Hive::zero(3)), hive::RankMismatch);
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
            auto s = gl3(i) + gl3(j);
            CHECK(s.degree() == gl3(i).degree() + gl3(j).degree());
            auto bi = gl3(i).boundary(), bj = gl3(j).boundary(), bs = s.boundary();
            CHECK(bs.lambda == hive::sum(bi.lambda, bj.lambda));
            CHECK(bs.mu == hive::sum(bi.mu, bj.mu));
            CHECK(bs.nu == hive::sum(bi.nu, bj.nu));
            CHECK(bs.lambda.size() == bs.mu.size() + bs.nu.size());
            auto back = hive::try_subtract(s, gl3(j));
            REQUIRE(back.has_value());
            CHECK(*back == gl3(i));
        }
    CHECK_FALSE(hive::try_subtract(gl3(1), gl3(4)).has_value());
}

TEST_CASE("validate agrees with a direct inequality check on random arrays") {
    std::mt19937 rng(20240611);
    for (int n = 1; n <= 4; ++n) {
        std::uniform_int_distribution<int> step(0, 2);
        int agree_valid = 0;
        for (int trial = 0; trial < 3000; ++trial) {
            // Perturb a sum of random basis-like increments so that both
            // outcomes occur with reasonable frequency.
            TriangularArray t(n);
            for (int i = 2; i <= n + 1; ++i)
                for (int j = 1; j <= i; ++j) t.at(i, j) = t.at(i - 1, std::min(j, i - 1)) + step(rng);
            auto check = Hive::validate(t);
            CHECK(static_cast<bool>(check) == naive_is_hive(t));
            CHECK(check.violations.empty() == static_cast<bool>(check));
            agree_valid += static_cast<bool>(check);
        }
        MESSAGE("n=" << n << " valid samples: " << agree_valid);
    }
}

TEST_CASE("validate agrees with a direct inequality check near the cone") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(1, 10), terms(0, 5), coord(0, 9);
    std::bernoulli_distribution nudge(0.5), up(0.5);
    int valid = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Entry> v(10, 0);
        for (int k = terms(rng); k > 0; --k) {
            auto b = gl3(pick(rng));
            for (int c = 0; c < 10; ++c) v[c] += b.flat()[c];
        }
        if (nudge(rng)) v[coord(rng)] += up(rng) ? 1 : -1;
        auto t = TriangularArray::from_flat(v);
        bool ok = static_cast<bool>(Hive::validate(t));
        CHECK(ok == naive_is_hive(t));
        valid += ok;
    }
    CHECK(valid > 1000);
}

TEST_CASE("inequality lists") {
    CHECK(hive::boundary_increment_inequalities(4).size() == 12);
    CHECK(hive::rhombus_inequalities(4).size() == 18);
    CHECK(hive::rhombus_inequalities(2).size() == 3);
}

TEST_CASE("render") {
    auto text = hive::render(rows(kH).array());
    CHECK(text.find('6') != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}
