#include <catch2/catch_amalgamated.hpp>

#include "spheresub/geom.hpp"

using namespace spheresub;

TEST_CASE("spherical distances") {
    Vec3 north{0, 0, 1}, south{0, 0, -1}, ex{1, 0, 0}, ey{0, 1, 0};
    CHECK(sphere_angle(north, south) == Catch::Approx(kPi));
    CHECK(sphere_angle(north, ex) == Catch::Approx(kPi / 2));
    CHECK(sphere_angle(ex, ex) == Catch::Approx(0.0).margin(1e-15));

    SECTION("north pole to equator polyline") {
        Polyline eq = sample_arc(ex, ey, 16);
        CHECK(dist_point_polyline(north, eq) == Catch::Approx(kPi / 2));
    }

    SECTION("octant triangle diameter") {
        std::vector<Vec3> pts;
        auto a1 = sample_arc(ex, ey, 8), a2 = sample_arc(ey, north, 8), a3 = sample_arc(north, ex, 8);
        for (auto* a : {&a1, &a2, &a3})
            pts.insert(pts.end(), a->pts.begin(), a->pts.end());
        CHECK(point_set_diameter(pts) == Catch::Approx(kPi / 2));
    }
}

TEST_CASE("polyline parametrization") {
    Polyline p = sample_arc({1, 0, 0}, {0, 1, 0}, 64);
    CHECK(p.length() == Catch::Approx(kPi / 2));
    Vec3 mid = p.at(0.5);
    CHECK(sphere_angle(mid, normalized(Vec3{1, 1, 0})) < 1e-12);
    CHECK(sphere_angle(p.at(0.0), Vec3{1, 0, 0}) < 1e-15);
    CHECK(sphere_angle(p.at(1.0), Vec3{0, 1, 0}) < 1e-15);
}

TEST_CASE("segment distance and crossing") {
    Vec3 a{1, 0, 0}, b{0, 1, 0};
    CHECK(dist_point_segment(normalized(Vec3{1, 1, 1}), a, b) ==
          Catch::Approx(std::asin(1.0 / std::sqrt(3.0))));
    // point beyond the segment end
    CHECK(dist_point_segment(Vec3{0, 0, 1}, a, b) == Catch::Approx(kPi / 2));

    Vec3 c = normalized(Vec3{1, 1, 1}), d = normalized(Vec3{1, 1, -1});
    CHECK(segments_cross(a, b, c, d));
    CHECK_FALSE(segments_cross(a, b, c, Vec3{0, 0, 1}));
    // sharing an endpoint is not a crossing
    CHECK_FALSE(segments_cross(a, b, b, Vec3{0, 0, 1}));
}

TEST_CASE("homogeneous round trips") {
    for (const C64& z : {C64(0, 0), C64(1, 0), C64(-1, 0), C64(0.5, -2.25), C64(1e6, 3)}) {
        Vec3 p = plane_to_sphere(z);
        CHECK(norm(p) == Catch::Approx(1.0));
        auto [a, b] = vec3_to_homogeneous(p);
        // same projective point: cross-ratio vanishes
        CHECK(std::abs(a * C64(1, 0) - b * z) / (std::abs(a) + std::abs(b)) < 1e-12);
    }
    Vec3 inf = homogeneous_to_vec3(C64(1, 0), C64(0, 0));
    CHECK(sphere_angle(inf, Vec3{0, 0, 1}) < 1e-15);
    CHECK(sphere_angle(plane_to_sphere(C64(0, 0)), Vec3{0, 0, -1}) < 1e-15);
}

TEST_CASE("fibonacci sphere is quasi uniform") {
    auto pts = fibonacci_sphere(2048);
    REQUIRE(pts.size() == 2048);
    for (const auto& p : pts) CHECK(norm(p) == Catch::Approx(1.0));
    // no large empty cap: every grid point has a neighbor within a few mean spacings
    double mean = std::sqrt(4.0 * kPi / 2048.0);
    double worst = 0;
    for (size_t i = 0; i < pts.size(); i += 97) {
        double best = 10;
        for (size_t j = 0; j < pts.size(); ++j)
            if (i != j) best = std::min(best, sphere_angle(pts[i], pts[j]));
        worst = std::max(worst, best);
    }
    CHECK(worst < 3 * mean);
}
