#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rmot/cartan.hpp"
#include "rmot/ground.hpp"

using namespace rmot;

namespace {

GroundElement random_homogeneous(std::mt19937& rng, Bidegree d) {
    // every monomial of bidegree d is t^(w-s) r^s, so homogeneous pieces have one term
    Mono m;
    if (!mono_of_degree(d, m) || rng() % 5 == 0) return {};
    return GroundElement(m);
}

GroundElement random_element(std::mt19937& rng) {
    GroundElement x;
    int n = rng() % 4;
    for (int i = 0; i < n; ++i) x += Mono{static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)};
    return x;
}

}  // namespace

TEST_CASE("bidegrees") {
    CHECK(Mono{1, 0}.degree() == Bidegree{0, 1});
    CHECK(Mono{0, 1}.degree() == Bidegree{1, 1});
    CHECK(sq_degree(2) == Bidegree{2, 1});
    CHECK(sq_degree(3) == Bidegree{3, 1});
    CHECK(sq_degree(8) == Bidegree{8, 4});
    CHECK((Bidegree{3, 1} + Bidegree{0, 0}) == Bidegree{3, 1});
    CHECK(Bidegree{6, 2}.coweight() == 4);
}

TEST_CASE("ring arithmetic") {
    const GroundElement t = GroundElement::tau(), r = GroundElement::rho();
    CHECK(ground_mul(t, r) == GroundElement(Mono{1, 1}));
    CHECK((t + r) * (t + r) == GroundElement::tau(2) + GroundElement::rho(2));
    CHECK(GroundElement::one() * (t + r) == t + r);
    CHECK((t + t).is_zero());
    CHECK((t + r).evaluate(1, 0) == 1);
    CHECK((t + r).evaluate(1, 1) == 0);
    CHECK(GroundElement(Mono{2, 1}).str() == "t^2 r");
    CHECK((t + r).homogeneous_part({1, 1}) == r);
    CHECK_FALSE((t + r).is_homogeneous());
}

TEST_CASE("action on M") {
    const GroundElement t = GroundElement::tau(), r = GroundElement::rho();
    CHECK(sq_on_coeff(1, t) == r);
    CHECK(sq_on_coeff(1, r).is_zero());
    CHECK(sq_on_coeff(2, t).is_zero());
    CHECK_THROWS(sq_on_coeff(0, t + GroundElement::one()));
    // Sq2 has weight 1: t^2 in (0,2) goes to (2,3), which is t r^2
    CHECK(sq_on_coeff(2, GroundElement::tau(2)) == GroundElement(Mono{1, 2}));
    CHECK(sq_on_coeff(3, GroundElement::tau(2)) == GroundElement::rho(3));
    CHECK(sq_on_coeff(1, GroundElement::tau(2)).is_zero());
    CHECK_THROWS_AS(sq_on_coeff(1, t + r), std::invalid_argument);
}

TEST_CASE("Lucas binomials") {
    for (int n = 0; n < 40; ++n) {
        long c = 1;
        for (int k = 0; k <= n; ++k) {
            CHECK(binom2(n, k) == static_cast<int>(c % 2));
            c = c * (n - k) / (k + 1);
        }
    }
    CHECK(binom2(3, 5) == 0);
}

TEST_CASE("Cartan identity on M, random products") {
    std::mt19937 rng(7);
    int cases = 0;
    for (int it = 0; it < 12000; ++it) {
        Mono a{static_cast<int>(rng() % 9), static_cast<int>(rng() % 5)};
        Mono b{static_cast<int>(rng() % 9), static_cast<int>(rng() % 5)};
        int n = rng() % 13;
        Mono lhs_m;
        GroundElement lhs = sq_on_mono(n, a * b, lhs_m) ? GroundElement(lhs_m) : GroundElement{};
        GroundElement rhs;
        cartan_terms(n, [&](int i, int j, Mono w) {
            Mono x, y;
            if (sq_on_mono(i, a, x) && sq_on_mono(j, b, y)) rhs += x * y * w;
        });
        CHECK(lhs == rhs);
        ++cases;
    }
    CHECK(cases >= 10000);
}

TEST_CASE("Sq1 is a differential and degrees add") {
    std::mt19937 rng(3);
    for (int it = 0; it < 500; ++it) {
        Mono m{static_cast<int>(rng() % 20), static_cast<int>(rng() % 20)};
        GroundElement c(m);
        CHECK(sq_on_coeff(1, sq_on_coeff(1, c)).is_zero());
        int n = rng() % 16;
        GroundElement y = sq_on_coeff(n, c);
        if (!y.is_zero()) CHECK(y.degree() == m.degree() + sq_degree(n));
    }
}

TEST_CASE("sums stay canonical") {
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        GroundElement x = random_element(rng), y = random_element(rng);
        CHECK(x + y == y + x);
        CHECK((x + y + y) == x);
        CHECK(x * y == y * x);
        GroundElement h = random_homogeneous(rng, {2, 3});
        CHECK((h.is_zero() || h.is_homogeneous()));
    }
}
