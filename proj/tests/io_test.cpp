#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "posat/io.hpp"

using namespace posat;
using nlohmann::json;

TEST_CASE("poset round trip") {
    auto v2 = make_poset(3, {{0, 1}, {0, 2}});
    auto doc = poset_to_json(v2, "V2");
    CHECK(doc["elements"] == 3);
    CHECK(doc["name"] == "V2");
    CHECK(poset_from_json(doc) == v2);

    // closure is implied: listing covers only is enough
    auto c3 = chain(3);
    CHECK(poset_from_json(poset_to_json(c3)) == c3);
    CHECK(poset_to_json(c3)["lt"].size() == 2);

    CHECK(poset_from_json(poset_to_json(Poset{})) == Poset{});
}

TEST_CASE("poset parse errors") {
    CHECK_THROWS_AS(poset_from_json(json{{"lt", json::array()}}), std::invalid_argument);
    CHECK_THROWS_AS(poset_from_json(json{{"elements", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(poset_from_json(json{{"elements", 2}, {"lt", {{0, 5}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(poset_from_json(json{{"elements", 2}, {"lt", {{0, 1}, {1, 0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(poset_from_json(json{{"elements", "x"}, {"lt", json::array()}}),
                    std::invalid_argument);
}

TEST_CASE("family round trip") {
    SetFamily f(3, {0, 0b101, 0b011});
    auto doc = family_to_json(f);
    CHECK(doc["n"] == 3);
    CHECK(doc["sets"].size() == 3);
    CHECK(doc["sets"][0] == json::array());
    CHECK(family_from_json(doc) == f);

    CHECK_THROWS_AS(family_from_json(json{{"n", 2}, {"sets", {{3}}}}), std::invalid_argument);
    CHECK_THROWS_AS(family_from_json(json{{"n", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(family_from_json(json{{"n", 2}, {"sets", {{0}}}}), std::invalid_argument);
}

TEST_CASE("embedding round trip") {
    Embedding e{{0b01, 0b11}};
    auto doc = embedding_to_json(e);
    auto back = embedding_from_json(doc);
    CHECK(back.image == e.image);
}

TEST_CASE("schedule round trip") {
    auto s = percolating_family(make_poset(3, {{0, 1}, {0, 2}}), 8);
    auto doc = schedule_to_json(s);
    auto back = schedule_from_json(doc);
    CHECK(back.n == s.n);
    CHECK(back.poset == s.poset);
    CHECK(back.initial == s.initial);
    REQUIRE(back.steps.size() == s.steps.size());
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        CHECK(back.steps[i].added == s.steps[i].added);
        CHECK(back.steps[i].witness.image == s.steps[i].witness.image);
    }
    CHECK(verify_schedule(back).ok);
    // serialization itself is deterministic
    CHECK(doc.dump() == schedule_to_json(back).dump());
}

TEST_CASE("construction report serialization") {
    auto [fam, rep] = klayer_seed({2, 2}, 8);
    auto doc = report_to_json(rep);
    CHECK(doc["kind"] == "klayer");
    CHECK(doc["d"] == 3);
    CHECK(doc["lambda"] == 6);
    CHECK(doc["patched"] == true);
    CHECK(doc["verification"] == "free");
    CHECK(doc["layer_params"].size() == 2);
    CHECK(doc.dump().find("h1") == std::string::npos);
}
