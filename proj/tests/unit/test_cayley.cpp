#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "simplexity/cayley.hpp"
#include "simplexity/seed_catalog.hpp"

using namespace simplexity;

TEST_CASE("Cayley round trip", "[cayley]")
{
    for (const auto& s : {seed_i3d1(), square_family(3), square_family(2)}) {
        const Triangulation t = mixed_to_triangulation(s);
        MixedSubdivision back = triangulation_to_mixed(t);
        MixedSubdivision orig = s;
        canonicalize(back);
        canonicalize(orig);
        CHECK(back.m == orig.m);
        CHECK(back.cells == orig.cells);
        CHECK(mixed_weighted_size(s) == weighted_size(t));
        CHECK(mixed_weighted_size(s) == oracle::direct_weighted_size(t, s.m));
    }
}

TEST_CASE("fine cells", "[cayley]")
{
    const auto square = cube_configuration(2);
    CHECK(is_fine_cell(*square, MixedCell{{{0, 1}, {0, 2}}}));
    CHECK(is_fine_cell(*square, MixedCell{{{0}, {0, 1, 3}}}));
    CHECK_FALSE(is_fine_cell(*square, MixedCell{{{0, 1}, {2, 3}}}));
    CHECK_FALSE(is_fine_cell(*square, MixedCell{{{0, 1, 2}, {0, 1}}}));
}

TEST_CASE("cell volumes tile the scaled cube", "[cayley]")
{
    for (const auto& s : {seed_i3d1(), seed_i3d2(), square_family(4)}) {
        const std::size_t l = s.base->dim();
        Integer total = 0;
        for (const auto& cell : s.cells) total += mixed_cell_volume(*s.base, cell);
        CHECK(total == pow(Integer(s.m), static_cast<unsigned>(l)) * factorial(static_cast<unsigned>(l)));
    }
}

TEST_CASE("diagonal squares", "[cayley]")
{
    CHECK(count_area2_squares(square_family(1)) == 0);
    CHECK(count_area2_squares(square_family(2)) == 1);
    CHECK(count_area2_squares(square_family(4)) == 4);
}

TEST_CASE("summand projections are triangulations of the base", "[cayley]")
{
    const MixedSubdivision s = seed_i3d1();
    for (std::size_t i = 0; i < s.m; ++i) {
        const Triangulation t = summand_projection(s, i);
        CHECK(validate_face_to_face(t).is_face_to_face);
    }
}

TEST_CASE("scaling repeats summands", "[cayley]")
{
    const MixedSubdivision s = square_family(2);
    const MixedSubdivision same = scale_mixed(s, KVector({1, 1}));
    CHECK(same.cells == s.cells);

    // Coarse cells of k_1 B_1 + k_2 B_2 tile the square scaled by n.
    const MixedSubdivision scaled = scale_mixed(s, KVector({2, 2}));
    CHECK(scaled.m == 4);
    Integer total = 0;
    for (const auto& cell : scaled.cells) total += mixed_cell_volume(*scaled.base, cell);
    CHECK(total == 16 * 2);

    const MixedSubdivision i3 = scale_mixed(seed_i3d1(), KVector({2, 1}));
    Integer cube_total = 0;
    for (const auto& cell : i3.cells) cube_total += mixed_cell_volume(*i3.base, cell);
    CHECK(cube_total == 27 * 6);
    CHECK_THROWS(scale_mixed(s, KVector({1, 1, 1})));
}

TEST_CASE("realized cells partition the Minkowski sum", "[cayley]")
{
    const MixedSubdivision s = seed_i3d1();
    const Triangulation cells = realize_cells(s);
    CHECK(cells.config().label() == ConfigLabel::minkowski_cubes(3, 2));
    CHECK(validate_dissection(cells, ambient_normalized_volume(cells.config().label())).is_dissection);
}

TEST_CASE("cell decomposition recovers prism summands", "[cayley]")
{
    // Triangle x segment in 2 I^3: a triangle plus a vertical edge, in either order.
    const auto cube = cube_configuration(3);
    const std::vector<Point> prism{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
    const auto pieces = decompose_cell(*cube, 2, prism);
    REQUIRE_FALSE(pieces.empty());
    bool triangle_first = false;
    for (const auto& p : pieces) {
        CHECK(is_fine_cell(*cube, p));
        CHECK(mixed_cell_volume(*cube, p) == 3);
        if (p.summands[0] == std::vector<Index>{0, 2, 4} && p.summands[1] == std::vector<Index>{0, 1}) triangle_first = true;
    }
    CHECK(triangle_first);
    CHECK(decompose_cell(*cube, 2, std::vector<Point>{{0, 0, 0}, {2, 2, 2}}).empty());
}
