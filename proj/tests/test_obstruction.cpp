#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmot/obstruction.hpp"

using namespace rmot;

namespace {

void same_points(const ScanResult& a, const ScanResult& b) {
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].target == b.points[i].target);
        CHECK(a.points[i].witness == b.points[i].witness);
    }
    CHECK(a.empty == b.empty);
}

}  // namespace

TEST_CASE("generator degrees") {
    auto h = may_generator(1, 0);
    CHECK(h.stem == 0);
    CHECK(h.weight == 0);
    h = may_generator(1, 1);
    CHECK(h.stem == 1);
    CHECK(h.weight == 1);
    h = may_generator(2, 0);
    CHECK(h.stem == 2);
    CHECK(h.weight == 1);
    h = may_generator(1, 2);
    CHECK(h.stem == 3);
    CHECK(h.weight == 2);
    h = may_generator(2, 1);
    CHECK(h.stem == 5);
    CHECK(h.weight == 3);
    CHECK(h.may == 2);
    CHECK(h.name() == "h21");
    for (int i = 1; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
            auto g = may_generator(i, j);
            int want = j == 0 ? (1 << (i - 1)) - 1 : (1 << (j - 1)) * ((1 << i) - 1) - 1;
            CHECK(g.coweight() == want);
            CHECK(g.coweight() >= 0);
        }
}

TEST_CASE("the four instances") {
    auto a1 = obstruction_instance("a1");
    auto b1 = obstruction_instance("b1");
    auto z = obstruction_instance("z");
    CHECK(window_scan(a1.e1, a1.D, ScanMode::Existence).empty);
    ScanResult u = window_scan(a1.e1, a1.D, ScanMode::Uniqueness);
    REQUIRE_FALSE(u.empty);
    CHECK(u.witness->monomial() == "h12^2");
    CHECK(u.witness->target == Bidegree{4, 1});
    CHECK(u.witness->f == 2);
    // there is also one in (6,2)
    bool at62 = false;
    for (auto& p : u.points) at62 = at62 || (p.target == Bidegree{6, 2} && p.witness);
    CHECK(at62);
    CHECK(window_scan(b1.e1, b1.D, ScanMode::Existence).empty);
    CHECK(window_scan(b1.e1, b1.D, ScanMode::Uniqueness).empty);
    ScanResult ze = window_scan(z.e1, z.D, ScanMode::Existence);
    CHECK(ze.empty);
    CHECK(ze.sufficient);
    CHECK_THROWS_AS(obstruction_instance("q"), std::invalid_argument);
}

TEST_CASE("window scan equals brute force") {
    for (const char* n : {"a1", "b1", "z"})
        for (ScanMode m : {ScanMode::Existence, ScanMode::Uniqueness}) {
            auto in = obstruction_instance(n);
            INFO(n << " " << mode_str(m));
            same_points(window_scan(in.e1, in.D, m), brute_force_scan(in.e1, in.D, m, 6, 12));
        }
}

TEST_CASE("witness bookkeeping") {
    auto in = obstruction_instance("a1");
    ScanResult u = window_scan(in.e1, in.D, ScanMode::Uniqueness);
    for (const auto& p : u.points) {
        if (!p.witness) continue;
        const Witness& w = *p.witness;
        CHECK(w.i >= 0);
        CHECK(w.k >= 0);
        CHECK(w.stem == p.target.s - 1 + w.i);
        CHECK(w.weight == p.target.w + w.i);
    }
}

TEST_CASE("monotone in the kill list") {
    auto base = obstruction_instance("a1");
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j)
            for (ScanMode m : {ScanMode::Existence, ScanMode::Uniqueness}) {
                MayPresentation more = base.e1;
                more.kill.insert({i, j});
                bool before = window_scan(base.e1, base.D, m).empty;
                bool after = window_scan(more, base.D, m).empty;
                if (before) CHECK(after);
            }
}

TEST_CASE("degenerate inputs") {
    MayPresentation all;
    for (int i = 1; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) all.kill.insert({i, j});
    std::vector<Bidegree> D = {{0, 0}, {5, 1}, {20, 3}};
    CHECK(window_scan(all, D, ScanMode::Existence).empty);
    CHECK(brute_force_scan(all, D, ScanMode::Uniqueness, 6, 12).empty);
    // nothing killed: h10 h11 padding gives witnesses as soon as the budget allows
    MayPresentation none;
    ScanResult r = window_scan(none, {{2, 0}}, ScanMode::Existence);
    REQUIRE_FALSE(r.empty);
    CHECK(r.witness->monomial() == "h10^3");
    CHECK(parse_mode("uniqueness") == ScanMode::Uniqueness);
    CHECK_THROWS_AS(parse_mode("both"), std::invalid_argument);
}
