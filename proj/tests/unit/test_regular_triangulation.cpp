#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "simplexity/regular_triangulation.hpp"
#include "simplexity/seed_catalog.hpp"

using namespace simplexity;

TEST_CASE("lifting one square corner picks the diagonal", "[regular_triangulation]")
{
    const auto square = cube_configuration(2);
    const std::vector<Coordinate> lift_corner{0, 0, 0, 1};
    const Triangulation t = regular_triangulation(square, lift_corner);
    std::set<Simplex> got;
    for (std::size_t i = 0; i < t.size(); ++i) got.insert(t.simplex_copy(i));
    // Vertex 3 is raised, so the lower hull splits along the 1-2 diagonal.
    CHECK(got == std::set<Simplex>{{0, 1, 2}, {1, 2, 3}});
    const std::vector<Coordinate> flat{0, 0, 0, 0};
    CHECK_THROWS(regular_triangulation(square, flat));
}

TEST_CASE("random generic heights give triangulations of the cube", "[regular_triangulation]")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<Coordinate> h(-1000, 1000);
    const auto cube = cube_configuration(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Coordinate> heights(8);
        for (auto& v : heights) v = h(rng);
        const Triangulation t = regular_triangulation(cube, heights);
        CHECK((t.size() == 5 || t.size() == 6));
        CHECK(validate_face_to_face(t).is_face_to_face);
    }
}

TEST_CASE("the stored heights produce the i3d2 seed", "[regular_triangulation]")
{
    const auto config = cube_times_simplex_configuration(3, 3);
    const Triangulation t = regular_triangulation(config, seed_i3d2_heights());
    CHECK(t.size() == 38);
    CHECK(weighted_size(t) == Rational(44, 3));
    CHECK(validate_face_to_face(t).is_face_to_face);
}
