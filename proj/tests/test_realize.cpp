#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmot/a1.hpp"
#include "rmot/realize.hpp"

using namespace rmot;

namespace {

std::map<std::pair<int, std::string>, std::vector<std::string>> relations(const ClassicalModule& cm) {
    std::map<std::pair<int, std::string>, std::vector<std::string>> out;
    for (const auto& [key, x] : cm.table()) {
        if (x.empty() || (key.first & (key.first - 1))) continue;
        std::vector<std::string> names;
        for (int h : x) names.push_back(cm.gen(h).name);
        std::sort(names.begin(), names.end());
        out[{key.first, cm.gen(key.second).name}] = names;
    }
    return out;
}

}  // namespace

TEST_CASE("underlying modules") {
    ClassicalModule a = underlying(from_vector(StructureVector::parse("0,0,1,0,0,0,0")));
    CHECK(a.sq_gen(4, a.index("x00")).empty());
    CHECK(a.sq_gen(4, a.index("x21")).empty());
    CHECK(a1_type(a).i == 0);
    CHECK(a1_type(a).j == 0);
    ClassicalModule z = underlying(from_vector(StructureVector{}));
    CHECK(z.sq_gen(4, z.index("x00")) == F2Vec{z.index("y41")});
    CHECK(a1_type(z).i == 1);
    CHECK(a1_type(z).j == 0);
    A1Type t = a1_type(underlying(from_vector(StructureVector::parse("1,1,1,1,1,0,1"))));
    CHECK(t.i == 1);
    CHECK(t.j == 0);
    t = a1_type(underlying(from_vector(StructureVector::parse("0,0,0,1,0,1,0"))));
    CHECK(t.i == 1);
    CHECK(t.j == 1);
    // t y41 survives as y4; r y31 dies
    ClassicalModule b = underlying(from_vector(StructureVector::parse("0,1,0,0,0,0,0")));
    CHECK(b.sq_gen(4, b.index("x00")).empty());
}

TEST_CASE("underlying type over the family") {
    for (int i = 0; i < 128; ++i) {
        StructureVector v = StructureVector::from_index(i);
        ClassicalModule cm = underlying(from_vector(v));
        CHECK(cm.validate().empty());
        A1Type t = a1_type(cm);
        CHECK(t.i == (1 + v.beta03() + v.beta14()) % 2);
        CHECK(t.j == v.beta26());
    }
}

TEST_CASE("geometric fixed points over the family") {
    for (int i = 0; i < 128; ++i) {
        StructureVector v = StructureVector::from_index(i);
        ClassicalModule cm = geometric_fixed_points(from_vector(v));
        CHECK(cm.validate().empty());
        CHECK(relations(cm) == phi_expected(v));
        CHECK(cm.sq_gen(1, cm.index("x00")) == F2Vec{cm.index("x21")});
    }
    StructureVector w = StructureVector::parse("1,1,0,1,1,0,1");
    auto e = phi_expected(w);
    std::vector<std::string> s1a = {"y52"};
    if (w.j24()) s1a.push_back("y41");
    std::sort(s1a.begin(), s1a.end());
    CHECK(e[{2, "x21"}] == s1a);
    CHECK(e[{4, "x00"}] == std::vector<std::string>{"y62"});
    CHECK(phi_name("x21") == "s1a");
    CHECK(phi_name("y62") == "t4");
}

TEST_CASE("specializations keep the cofiber sequence exact") {
    for (int i = 0; i < 128; ++i) {
        StructureVector v = StructureVector::from_index(i);
        SesSplit s = ses_split(v);
        FModule m = from_vector(v);
        std::string why;
        CHECK_MESSAGE(specialized_ses_exact(s, m, 1, 0, false, &why), why);
        CHECK_MESSAGE(specialized_ses_exact(s, m, 0, 1, true, &why), why);
    }
}

TEST_CASE("a1_type rejects non-free modules") {
    ClassicalModule cm;
    for (int d = 0; d < 8; ++d) cm.add_generator("g" + std::to_string(d), d);
    CHECK_THROWS_AS(a1_type(cm), StructuralError);
}
