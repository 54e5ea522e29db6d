#include "doctest.h"

#include "reeb/building.hpp"
#include "reeb/checkers.hpp"
#include "reeb/json_io.hpp"
#include "support.hpp"

using namespace reeb;
using namespace reeb::testing;

TEST_CASE("rationals serialize as p/q") {
    CHECK(to_json(Rational(3)) == "3/1");
    CHECK(to_json(make_rational(-6, 4)) == "-3/2");
    CHECK(rational_from_json("7") == Rational(7));
    CHECK(rational_from_json("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(rational_from_json("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(1.5), std::invalid_argument);
}

TEST_CASE("perturbed rationals and orbits") {
    auto x = pr(5, 2, -1, 3);
    auto j = to_json(x);
    CHECK(j["base"] == "5/2");
    CHECK(j["eps"] == "-1/3");
    CHECK(perturbed_from_json(j) == x);
    CHECK(orbit_from_json(Json{{"gen", "beta"}, {"mult", 7}}) == ReebOrbit::beta(7));
    CHECK_THROWS_AS(orbit_from_json(Json{{"gen", "gamma"}, {"mult", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(orbit_from_json(Json{{"gen", "alpha"}, {"mult", 0}}), std::invalid_argument);
}

TEST_CASE("malformed ellipsoid and cobordism records") {
    CHECK_THROWS_AS(ellipsoid_from_json(Json::object()), std::invalid_argument);
    Json rational_ratio = {{"a", to_json(pr(1))}, {"b", to_json(pr(2))}};
    CHECK_THROWS_AS(ellipsoid_from_json(rational_ratio), DegenerateTie);
    Json not_nested = {{"inner", to_json(ell(pr(1), pr(4) + kEps))}, {"outer", to_json(ell(pr(2), pr(2) + kEps))}};
    CHECK_THROWS_AS(cobordism_from_json(not_nested), std::invalid_argument);
    not_nested["embedding"] = true;
    CHECK_FALSE(cobordism_from_json(not_nested).nested());
}

TEST_CASE("property: round trips") {
    Gen gen(5);
    for (int i = 0; i < 300; ++i) {
        auto x = gen.perturbed(50, 11);
        REQUIRE(perturbed_from_json(to_json(x)) == x);
        auto e = gen.ellipsoid();
        REQUIRE(ellipsoid_from_json(to_json(e)) == e);
        auto outer = e.scaled(1 + gen.rational(3, 2));
        auto cob = CobordismData::make(e, outer);
        REQUIRE(cobordism_from_json(to_json(cob)) == cob);
        Setting s = gen.coin() ? Setting{Symplectization{e}} : Setting{cob};
        REQUIRE(setting_from_json(to_json(s)) == s);
        OrbitMultiset neg;
        for (long n = gen.integer(0, 3); n > 0; --n)
            neg.push_back(gen.coin() ? ReebOrbit::alpha(gen.integer(1, 9)) : ReebOrbit::beta(gen.integer(1, 9)));
        auto d = AsymptoticData::make(s, {ReebOrbit::alpha(gen.integer(1, 9))}, neg);
        REQUIRE(asymptotic_data_from_json(to_json(d)) == d);
        // Serializing is deterministic.
        REQUIRE(to_json(d).dump() == to_json(asymptotic_data_from_json(to_json(d))).dump());
    }
}

TEST_CASE("building round trip keeps level order") {
    auto cob = CobordismData::make(ell(pr(1), pr(5) + kEps), ell(pr(2), pr(13) + kEps));
    Symplectization lower{cob.inner()};
    Symplectization upper{cob.outer()};
    Building b{cob,
               {{AsymptoticData::make(lower, {ReebOrbit::alpha(2)}, {ReebOrbit::alpha(2)})},
                {AsymptoticData::make(lower, {ReebOrbit::alpha(2)}, {ReebOrbit::alpha(2)})}},
               {AsymptoticData::make(cob, {ReebOrbit::alpha(2)}, {ReebOrbit::alpha(2)})},
               {{AsymptoticData::make(upper, {ReebOrbit::alpha(2)}, {ReebOrbit::alpha(2)})}},
               ReebOrbit::alpha(2),
               ReebOrbit::alpha(2)};
    auto j = to_json(b);
    REQUIRE(j["levels"].size() == 4);
    CHECK(j["levels"][0]["kind"] == "lower");
    CHECK(j["levels"][2]["kind"] == "middle");
    CHECK(j["levels"][3]["kind"] == "upper");
    CHECK(building_from_json(j) == b);

    // Upper level listed below the middle one is rejected.
    std::swap(j["levels"][2], j["levels"][3]);
    CHECK_THROWS_AS(building_from_json(j), std::invalid_argument);
}

TEST_CASE("verdict and record serialization") {
    auto cob = CobordismData::make(ell(pr(1), pr(5) + kEps), ell(pr(2), pr(13) + kEps));
    auto j = to_json(check_theorem_main(cob, 6));
    CHECK(j["applicable"] == false);
    CHECK(j["witness"].is_null());
    CHECK(j["reasons"].size() == 4);
    auto n = to_json(proposition_nope_instance(2, Rational(1, 2)));
    CHECK(n["cz_equal"] == true);
    auto a = to_json(answer1_area_obstruction(Rational(2)));
    CHECK(a["obstructed"] == true);
    CHECK(a["defect"]["base"] == "-2/1");
}
