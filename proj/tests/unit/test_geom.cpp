#include <doctest.h>

#include <random>

#include "surface_sampling.hpp"
#include "wbpose/geom.hpp"

using namespace wbpose;

TEST_CASE("plane distance matches the worked example") {
    const Primitive plane = Plane{{0, 0, 0}, {0, 0, 1}};
    const SurfacePoint sp = distance_to({0, 0, 0.1}, plane);
    CHECK(sp.distance == doctest::Approx(0.1));
    CHECK(sp.closest.norm() == doctest::Approx(0.0));
    CHECK(sp.normal.z == doctest::Approx(1.0));

    // Below the plane the normal flips toward the query.
    const SurfacePoint below = distance_to({0.3, -0.2, -0.5}, plane);
    CHECK(below.distance == doctest::Approx(0.5));
    CHECK(below.normal.z == doctest::Approx(-1.0));
}

TEST_CASE("sphere distance and the center fallback normal") {
    const Primitive sphere = Sphere{{1, 0, 0}, 0.5};
    CHECK(distance_to({3, 0, 0}, sphere).distance == doctest::Approx(1.5));

    const SurfacePoint inside = distance_to({1.1, 0, 0}, sphere);
    CHECK(inside.distance == 0.0);
    CHECK(inside.normal.x == doctest::Approx(1.0));

    const SurfacePoint center = distance_to({1, 0, 0}, sphere);
    CHECK(center.distance == 0.0);
    CHECK(center.normal.z == doctest::Approx(1.0));  // +z by convention
    CHECK((center.closest - Vec3{1, 0, 0.5}).norm() == doctest::Approx(0.0));
}

TEST_CASE("capsule lateral distance is segment distance minus radius") {
    const Primitive capsule = Capsule{{0, 0, 0}, {1, 0, 0}, 0.02};
    const SurfacePoint sp = distance_to({0.5, 0.05, 0.0}, capsule);
    CHECK(sp.distance == doctest::Approx(0.03));
    CHECK(sp.normal.y == doctest::Approx(1.0));
    // Beyond the end the cap rounds the distance.
    CHECK(distance_to({1.3, 0, 0}, capsule).distance == doctest::Approx(0.28));
    // On the axis the normal falls back to a perpendicular direction.
    const SurfacePoint axial = distance_to({0.5, 0, 0}, capsule);
    CHECK(axial.distance == 0.0);
    CHECK(std::abs(axial.normal.dot({1, 0, 0})) < 1e-9);
}

TEST_CASE("box distance inside and outside") {
    const Primitive box = Box{{0, 0, 0.5}, {0.5, 0.5, 0.5}, {}};
    CHECK(distance_to({0, 0, 1.2}, box).distance == doctest::Approx(0.2));
    CHECK(distance_to({1.0, 1.0, 1.5}, box).distance == doctest::Approx(std::sqrt(3 * 0.25)));
    // Inside: zero distance, nearest-face normal.
    const SurfacePoint inside = distance_to({0.0, 0.45, 0.5}, box);
    CHECK(inside.distance == 0.0);
    CHECK(inside.normal.y == doctest::Approx(1.0));
    CHECK(inside.closest.y == doctest::Approx(0.5));
}

TEST_CASE("rotated box respects its orientation") {
    // 90 degrees around z: local x becomes world y.
    const Box b{{0, 0, 0}, {1.0, 0.1, 0.1}, rotation_rpy(0, 0, std::numbers::pi / 2)};
    CHECK(distance_to({0, 1.5, 0}, Primitive{b}).distance == doctest::Approx(0.5));
    CHECK(distance_to({1.5, 0, 0}, Primitive{b}).distance == doctest::Approx(1.4));
}

TEST_CASE("distance queries agree with dense surface sampling") {
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> pos(-1.0, 1.0);
    std::uniform_real_distribution<double> radius(0.15, 0.5);
    std::uniform_real_distribution<double> extent(0.1, 0.5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    // A handful per type here; the acceptance suite runs the 50x version.
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Primitive> prims;
        prims.push_back(Plane{{pos(rng), pos(rng), pos(rng)},
                              Vec3{pos(rng), pos(rng), pos(rng) + 1.5}.normalized()});
        prims.push_back(Sphere{{pos(rng), pos(rng), pos(rng)}, radius(rng)});
        prims.push_back(Box{{pos(rng), pos(rng), pos(rng)},
                            {extent(rng), extent(rng), extent(rng)},
                            rotation_rpy(angle(rng), angle(rng), angle(rng))});
        const Vec3 p0{pos(rng), pos(rng), pos(rng)};
        prims.push_back(Capsule{p0, p0 + Vec3{pos(rng), pos(rng), pos(rng) + 1.2}, radius(rng)});

        for (const Primitive& prim : prims) {
            const auto surface = wbfix::sample_surface(prim);
            int compared = 0;
            while (compared < 10) {
                const Vec3 q{2.0 * pos(rng), 2.0 * pos(rng), 2.0 * pos(rng)};
                const SurfacePoint sp = distance_to(q, prim);
                CHECK(std::abs(sp.normal.norm() - 1.0) < 1e-6);
                if (wbfix::inside_solid(q, prim)) {
                    CHECK(sp.distance == 0.0);
                    continue;
                }
                if (!wbfix::oracle_covers(q, prim)) continue;
                const double sampled = wbfix::sampled_distance(q, surface);
                if (sampled < 0.25 || sampled > 1.5) continue;
                CHECK(std::abs(sp.distance - sampled) < 1e-3);
                ++compared;
            }
        }
    }
}
