// Exercises the shared-library C interface directly: handle lifecycle, error
// codes, and the JSON surfaces.

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "symcoh.h"

namespace {

struct Pair {
    symcoh_pair* p = nullptr;
    ~Pair() { symcoh_pair_free(p); }
};

struct Str {
    char* s = nullptr;
    ~Str() { symcoh_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("catalog construction and basic queries") {
    Pair pair;
    REQUIRE(symcoh_pair_from_catalog("conics", 0, &pair.p) == SYMCOH_OK);
    CHECK(symcoh_pair_restricted_rank(pair.p) == 2);
    CHECK(symcoh_pair_ambient_rank(pair.p) == 2);

    Str info;
    REQUIRE(symcoh_pair_info_json(pair.p, &info.s) == SYMCOH_OK);
    auto doc = nlohmann::json::parse(info.str());
    CHECK(doc["name"] == "conics");
    CHECK(doc["dim_x"] == 5);
    CHECK(doc["rho_coefficients"][0] == "1/2");
}

TEST_CASE("unknown names produce invalid status and a message") {
    Pair pair;
    CHECK(symcoh_pair_from_catalog("nope", 0, &pair.p) == SYMCOH_ERROR_INVALID);
    CHECK(std::string(symcoh_last_error()).find("nope") != std::string::npos);
    CHECK(symcoh_pair_from_catalog("CnH4", 2, &pair.p) == SYMCOH_ERROR_INVALID);
}

TEST_CASE("euler through the C surface") {
    Pair pair;
    REQUIRE(symcoh_pair_from_catalog("P2", 0, &pair.p) == SYMCOH_OK);
    long long lambda[] = {4};  // 4 omega = Sym^2 of the defining plane
    Str json;
    REQUIRE(symcoh_euler_json(pair.p, lambda, 1, &json.s) == SYMCOH_OK);
    auto doc = nlohmann::json::parse(json.str());
    REQUIRE(doc["chi"].size() == 2);  // L(4w) + L(0)
    CHECK(doc["chi"][0]["weight"][0] == 0);
    CHECK(doc["chi"][1]["weight"][0] == 4);
    CHECK(doc["chi"][1]["dim"] == 5);

    long long odd[] = {3};
    Str bad;
    CHECK(symcoh_euler_json(pair.p, odd, 1, &bad.s) == SYMCOH_ERROR_INVALID);
}

TEST_CASE("cohomology modes through the C surface") {
    Pair pair;
    REQUIRE(symcoh_pair_from_catalog("CnH4", 4, &pair.p) == SYMCOH_OK);
    long long lambda[] = {0, 0};
    Str exact, bound;
    REQUIRE(symcoh_cohomology_json(pair.p, lambda, 2, 1, &exact.s) == SYMCOH_OK);
    REQUIRE(symcoh_cohomology_json(pair.p, lambda, 2, 0, &bound.s) == SYMCOH_OK);
    auto de = nlohmann::json::parse(exact.str());
    auto db = nlohmann::json::parse(bound.str());
    CHECK(de["mode"] == "exact");
    CHECK(db["mode"] == "bound");
    CHECK(de["table"] == db["table"]);  // equality pair

    Pair nope;
    REQUIRE(symcoh_pair_from_catalog("AII", 0, &nope.p) == SYMCOH_OK);
    long long l1[] = {0};
    Str out;
    CHECK(symcoh_cohomology_json(nope.p, l1, 1, 1, &out.s) == SYMCOH_ERROR_INVALID);
}

TEST_CASE("spec json and regions through the C surface") {
    Pair pair;
    const char* spec = R"({"name":"my-conics","family":"A","rank":2})";
    REQUIRE(symcoh_pair_from_spec_json(spec, &pair.p) == SYMCOH_OK);
    Str svg;
    REQUIRE(symcoh_regions_render(pair.p, -3, 3, -3, 3, "svg", &svg.s) == SYMCOH_OK);
    CHECK(svg.str().find("<svg") != std::string::npos);
    Str bad;
    CHECK(symcoh_regions_render(pair.p, 3, -3, 0, 0, "svg", &bad.s) == SYMCOH_ERROR_INVALID);
    CHECK(symcoh_regions_render(pair.p, -3, 3, -3, 3, "png", &bad.s) == SYMCOH_ERROR_INVALID);
}

TEST_CASE("catalog json") {
    Str json;
    REQUIRE(symcoh_catalog_json(&json.s) == SYMCOH_OK);
    auto doc = nlohmann::json::parse(json.str());
    CHECK(doc["catalog"].size() >= 12);
}
