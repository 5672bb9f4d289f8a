#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adsq/geometry.hpp"

using adsq::Geometry;

TEST_CASE("constructor validates its arguments") {
    CHECK_THROWS_AS(Geometry(3), std::invalid_argument);   // odd
    CHECK_THROWS_AS(Geometry(0), std::invalid_argument);   // too small
    CHECK_THROWS_AS(Geometry(-4), std::invalid_argument);
    CHECK_THROWS_AS(Geometry(4, 0.0), std::invalid_argument);   // a <= 0
    CHECK_THROWS_AS(Geometry(4, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Geometry(4, 1.0, 0.0), std::invalid_argument);  // L <= 0
    CHECK_THROWS_AS(Geometry(4, 1.0, 1.0, -0.5), std::invalid_argument);  // r_h < 0
    CHECK_NOTHROW(Geometry(2));
    CHECK_NOTHROW(Geometry(4, 0.5, 2.0, 3.0));
}

TEST_CASE("accessors and site radii") {
    Geometry g(6, 0.5, 2.0, 1.5);
    CHECK(g.num_sites() == 6);
    CHECK(g.spacing() == doctest::Approx(0.5));
    CHECK(g.ads_radius() == doctest::Approx(2.0));
    CHECK(g.horizon_radius() == doctest::Approx(1.5));
    CHECK(g.site_radius(1) == doctest::Approx(2.0));
    CHECK(g.site_radius(6) == doctest::Approx(4.5));
    CHECK_THROWS_AS(g.site_radius(0), std::out_of_range);
    CHECK_THROWS_AS(g.site_radius(7), std::out_of_range);
}

TEST_CASE("redshift reduces to n*a/L without a horizon") {
    Geometry g(8, 0.25, 2.0, 0.0);
    for (int n = 1; n <= 8; ++n)
        CHECK(g.redshift(n) == doctest::Approx(n * 0.25 / 2.0).epsilon(1e-14));
}

TEST_CASE("redshift formula with a horizon") {
    Geometry g(4, 1.0, 1.0, 3.0);
    for (int n = 1; n <= 4; ++n) {
        double r = 3.0 + n;
        CHECK(g.redshift(n) == doctest::Approx(std::sqrt(r * r - 9.0)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(g.redshift(0), std::out_of_range);
    CHECK_THROWS_AS(g.redshift(5), std::out_of_range);
}

TEST_CASE("redshift increases monotonically toward the boundary") {
    for (double rh : {0.0, 1.0, 5.0}) {
        Geometry g(10, 1.0, 1.0, rh);
        for (int n = 1; n < 10; ++n) CHECK(g.redshift(n) < g.redshift(n + 1));
    }
}

TEST_CASE("effective redshift is boundary-normalized and L-independent") {
    Geometry g1(10, 1.0, 1.0, 2.0);
    Geometry g2(10, 1.0, 7.0, 2.0);
    CHECK(g1.effective_redshift(10) == doctest::Approx(1.0).epsilon(1e-15));
    for (int n = 1; n <= 10; ++n) {
        CHECK(g1.effective_redshift(n) ==
              doctest::Approx(g2.effective_redshift(n)).epsilon(1e-14));
        CHECK(g1.effective_redshift(n) ==
              doctest::Approx(g1.redshift(n) / g1.redshift(10)).epsilon(1e-14));
    }
}

TEST_CASE("redshift profile matches the per-site accessors") {
    Geometry g(6, 0.5, 1.5, 1.0);
    auto raw = g.redshift_profile(false);
    auto eff = g.redshift_profile(true);
    REQUIRE(raw.size() == 6);
    REQUIRE(eff.size() == 6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(raw[n - 1] == doctest::Approx(g.redshift(n)).epsilon(1e-15));
        CHECK(eff[n - 1] == doctest::Approx(g.effective_redshift(n)).epsilon(1e-15));
    }
}
