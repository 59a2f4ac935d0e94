#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmot/a1cls.hpp"

using namespace rmot;

TEST_CASE("every named check passes") {
    for (const auto& tag : theorem_tags()) {
        auto r = verify_theorem(tag);
        CHECK(r["tag"] == tag);
        CHECK(r.contains("elapsed_ms"));
        CHECK(r.contains("details"));
        CHECK_MESSAGE(report_passed(r), r.dump().substr(0, 2000));
    }
}

TEST_CASE("report contents") {
    auto r = verify_theorem("THM_1_1");
    CHECK(r["details"]["count"] == 128);
    auto s = verify_theorem("THM_1_6");
    CHECK(s["details"]["table"].size() == 128);
    CHECK(s["details"]["rows_agreeing"] == 7);
    auto z = verify_theorem("THM_1_10_PRECONDITION");
    CHECK(z["details"]["scan"] == "EMPTY");
    CHECK(z["details"]["degree_set"].size() == 22);
    CHECK_THROWS_AS(verify_theorem("THM_9"), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
    auto a = verify_theorem("THM_4_4"), b = verify_theorem("THM_4_4");
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
}
