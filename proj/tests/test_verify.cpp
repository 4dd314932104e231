#include <doctest.h>

#include "aomoto/json_io.hpp"
#include "test_helpers.hpp"

using namespace aomoto;
using namespace aomoto::test;

TEST_SUITE("verify") {

TEST_CASE("verify suite passes on the square-diagonal example with nonresonant weights") {
    Arrangement a = square_diag();
    WeightVector w = parse_weights(read_file(fixture_path("square_diag_weights.json")), 5);
    VerifyOutcome outcome = verify_report(a, &w, false);
    CHECK(outcome.ok);
    for (const auto& check : outcome.report["checks"])
        CHECK(check["status"].get<std::string>() == "pass");
    CHECK(outcome.report["ok"].get<bool>());
}

TEST_CASE("verify suite passes on every fixture without weights") {
    for (const Arrangement& a :
         {normal2(), general_position(), points3(), supersolvable_fixture(), admissible_mixed(),
          general_position_infinity()}) {
        VerifyOutcome outcome = verify_report(a, nullptr, false);
        CHECK(outcome.ok);
    }
}

TEST_CASE("betanbc report supports all three methods") {
    Arrangement a = square_diag();
    Json direct = betanbc_report(a, "direct");
    Json recursive = betanbc_report(a, "recursive");
    Json shelling = betanbc_report(a, "shelling");
    CHECK(direct == recursive);
    CHECK(direct == shelling);
    CHECK(direct.dump() == "[[2,4],[2,5]]");
    CHECK_THROWS_AS(betanbc_report(a, "nope"), ParseError);
}

TEST_CASE("oselement json form") {
    OSElement e;
    e.degree = 2;
    e.add_term({2, 4}, Rat(5, 6));
    Json j = oselement_to_json(e);
    CHECK(j["degree"] == 2);
    CHECK(j["terms"][0]["monomial"] == Json::array({2, 4}));
    CHECK(j["terms"][0]["coeff"] == "5/6");
}

TEST_CASE("nonresonance report shape matches the documented form") {
    Arrangement a = square_diag();
    WeightVector w{{2, Rat(1, 3), Rat(1, 5), Rat(1, 7), Rat(1, 11)}};
    Json j = nonresonance_report(a, w, false);
    CHECK_FALSE(j["ok"].get<bool>());
    CHECK(j["violations"][0]["support"] == Json::array({1}));
}

}
