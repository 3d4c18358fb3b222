#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hive/json_io.hpp"

using hive::json;
using hive::JsonSchemaError;
using hive::Partition;

TEST_CASE("partition and boundary") {
    CHECK(hive::to_json(Partition{3, 2, 1}).dump() == "[3,2,1]");
    CHECK(hive::partition_from_json(json::parse("[2,1,0]")) == Partition{2, 1});
    CHECK(hive::partition_from_json(json::parse("[]")) == Partition{});
    CHECK_THROWS_AS(hive::partition_from_json(json::parse("[1,2]")), JsonSchemaError);
    CHECK_THROWS_AS(hive::partition_from_json(json::parse("\"3,2\"")), JsonSchemaError);

    hive::Boundary b{{3, 2, 1}, {2, 1}, {2, 1}};
    CHECK(hive::boundary_from_json(hive::to_json(b)) == b);
}

TEST_CASE("hive round trip and validation") {
    const auto& pres = hive::cone_presentation(4);
    for (const auto& h : pres.basis) CHECK(hive::hive_from_json(hive::to_json(h)) == h);
    auto j = hive::to_json(pres.at(3));
    CHECK(j.at("rows").size() == 5);
    CHECK(j.dump().rfind("{\"n\":4,\"rows\":[[0],", 0) == 0);

    auto bad = j;
    bad["rows"][2][1] = 100;
    CHECK_THROWS_AS(hive::hive_from_json(bad), hive::InvalidHive);
    bad = j;
    bad["rows"].erase(4);
    CHECK_THROWS_AS(hive::hive_from_json(bad), JsonSchemaError);
    bad = j;
    bad["n"] = 3;
    CHECK_THROWS_AS(hive::hive_from_json(bad), JsonSchemaError);
    CHECK_THROWS_AS(hive::hive_from_json(json::parse("{\"rows\": []}")), JsonSchemaError);
}

TEST_CASE("tableau round trip") {
    for (const auto& t : hive::enumerate_tableaux(3, Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1})) {
        auto j = hive::to_json(t);
        CHECK(hive::tableau_from_json(j) == t);
    }
    auto j = json::parse(R"({"n": 3, "outer": [3,2,1], "inner": [2,1], "rows": [[0,0,1],[0,2],[1]]})");
    CHECK(hive::render(hive::tableau_from_json(j)) == "..1/.2/1");
    j["rows"][1][1] = 1;
    j["rows"][2][0] = 2;
    CHECK_NOTHROW(hive::tableau_from_json(j));
    j["rows"][0][2] = 2;
    CHECK_THROWS_AS(hive::tableau_from_json(j), std::invalid_argument);
}

TEST_CASE("polynomial round trip") {
    const auto& t = hive::generator_table(4);
    for (const auto& g : t.generators) CHECK(hive::polynomial_from_json(hive::to_json(g)) == g);

    auto j = hive::to_json(t.at(15));
    CHECK(j.at("rank") == 4);
    CHECK(j.at("terms").at(0).at("coeff").is_string());

    hive::Polynomial formal = hive::Polynomial::variable(0, 12) * hive::Polynomial::constant(0, mpz_class("-123456789012345678901"));
    auto fj = hive::to_json(formal);
    CHECK(fj.dump() == R"({"rank":0,"terms":[{"coeff":"-123456789012345678901","exps":{"v12":1}}]})");
    CHECK(hive::polynomial_from_json(fj) == formal);

    CHECK_THROWS_AS(hive::polynomial_from_json(json::parse(R"({"rank":2,"terms":[{"coeff":"1","exps":{"x31":1}}]})")),
                    JsonSchemaError);
    CHECK_THROWS_AS(hive::polynomial_from_json(json::parse(R"({"rank":2,"terms":[{"coeff":"1.5","exps":{}}]})")),
                    JsonSchemaError);
    CHECK_THROWS_AS(hive::polynomial_from_json(json::parse(R"({"rank":2,"terms":[{"coeff":3,"exps":{}}]})")),
                    JsonSchemaError);
}

TEST_CASE("highest weight vector bundle") {
    for (const auto& v : hive::hwv_basis(3, Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1})) {
        auto j = hive::to_json(v);
        auto back = hive::hwv_from_json(j);
        CHECK(back.hive == v.hive);
        CHECK(back.boundary == v.boundary);
        CHECK(back.decomposition == v.decomposition);
        CHECK(back.polynomial == v.polynomial);
        CHECK(back.initial == v.initial);

        auto broken = j;
        broken["initial"] = json::parse(R"({"x11": 1})");
        CHECK_THROWS_AS(hive::hwv_from_json(broken), JsonSchemaError);
    }
}

TEST_CASE("presentation and series") {
    for (int n = 2; n <= 4; ++n) {
        const auto& pres = hive::cone_presentation(n);
        auto back = hive::presentation_from_json(hive::to_json(pres));
        CHECK(back.basis == pres.basis);
        CHECK(back.degrees == pres.degrees);
        REQUIRE(back.relations.size() == pres.relations.size());
        for (std::size_t k = 0; k < pres.relations.size(); ++k) {
            CHECK(back.relations[k].name == pres.relations[k].name);
            CHECK(back.relations[k].left == pres.relations[k].left);
            CHECK(back.relations[k].right == pres.relations[k].right);
        }
    }
    auto j = hive::to_json(hive::cone_presentation(3));
    j["relations"][0]["left"][0] = 11;
    CHECK_THROWS_AS(hive::presentation_from_json(j), JsonSchemaError);

    hive::SeriesPrefix s{{1, 2, 6, 14}};
    auto sj = hive::series_to_json(3, s);
    CHECK(sj.dump() == R"({"n":3,"coefficients":["1","2","6","14"]})");
    CHECK(hive::series_from_json(sj) == s);
}
