#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmot/a1.hpp"
#include "rmot/io.hpp"

using namespace rmot;

TEST_CASE("expression parser") {
    CHECK(element_str(parse_element("Sq2 Sq2")) == "t Sq3 Sq1");
    CHECK(element_str(parse_element("Sq2Sq2")) == "t Sq3 Sq1");
    CHECK(parse_element("t^2 r Sq1 + Sq1") == parse_element("Sq1 + r t^2 Sq1"));
    CHECK(parse_element("Sq1 t") == parse_element("t Sq1 + r"));
    CHECK(parse_element("1") == SteenrodElement(Seq{}));
    CHECK(parse_element("0").is_zero());
    auto pos = [](const std::string& s) {
        try {
            parse_terms(s);
        } catch (const ParseError& e) {
            return static_cast<int>(e.pos);
        }
        return -1;
    };
    CHECK(pos("Sq2 + ") == 6);
    CHECK(pos("Sq2 x") == 4);
    CHECK(pos("Sq") == 2);
    CHECK(pos("t^") == 2);
    CHECK(pos("") == 0);
    CHECK(pos("Sq2 + + Sq1") == 6);
    CHECK(pos("t Sq3 Sq1") == -1);
}

TEST_CASE("module JSON round trip") {
    for (int i = 0; i < 128; ++i) {
        FModule m = from_vector(StructureVector::from_index(i));
        auto j = module_to_json(m);
        FModule back = module_from_json(j);
        CHECK(module_to_json(back) == j);
        CHECK(back.validate().empty());
        CHECK(j.dump() == nlohmann::json::parse(j.dump()).dump());
    }
    auto j = module_to_json(from_vector(StructureVector{}));
    CHECK(j["generators"][0]["name"] == "x00");
    CHECK(j["generators"][0]["deg"] == nlohmann::json::array({0, 0}));
    CHECK(j["actions"]["Sq2"]["x21"][0]["coef"] == nlohmann::json::parse("[[1,0]]"));
    CHECK(j["actions"]["Sq8"]["x00"].empty());
    CHECK_FALSE(is_classical_json(j));
}

TEST_CASE("malformed JSON is rejected") {
    auto j = module_to_json(from_vector(StructureVector{}));
    auto bad = j;
    bad["actions"]["Sq3"] = nlohmann::json::object();
    CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
    bad = j;
    bad["actions"]["Sq1"]["x00"][0]["gen"] = "nope";
    CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
    bad = j;
    bad["generators"][0].erase("deg");
    CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
    bad = j;
    bad["actions"]["Sq1"]["x00"][0]["coef"] = nlohmann::json::parse("[[1]]");
    CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
}

TEST_CASE("classical JSON") {
    ClassicalModule cm = underlying(from_vector(StructureVector{}));
    auto j = classical_to_json(cm);
    CHECK(is_classical_json(j));
    CHECK(j["generators"][1]["deg"] == 1);
    ClassicalModule back = classical_from_json(j);
    CHECK(classical_to_json(back) == j);
    CHECK(back.validate().empty());
}

TEST_CASE("DOT output") {
    std::string d = module_to_dot(from_vector(StructureVector{}), "A1");
    CHECK(d.find("digraph \"A1\"") == 0);
    CHECK(d.find("\"x00\" -> \"x10\" [color=black]") != std::string::npos);
    CHECK(d.find("\"x21\" -> \"y41\" [color=blue, style=dashed, label=\"t\"]") != std::string::npos);
    CHECK(d.find("color=red") != std::string::npos);
    CHECK(d.back() == '\n');
}
