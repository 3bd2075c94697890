#include <catch_amalgamated.hpp>

#include <optional>
#include <set>

#include "oracles.hpp"
#include "simplexity/coloring_product.hpp"
#include "simplexity/seed_catalog.hpp"
#include "simplexity/simplicial_complex.hpp"

using namespace simplexity;

namespace {

ValidationOptions with_mode(DissectionMode mode)
{
    ValidationOptions o;
    o.mode = mode;
    return o;
}

bool has_reason(const ValidityReport& r, const std::string& fragment)
{
    for (const auto& v : r.violations) {
        if (v.reason.find(fragment) != std::string::npos) return true;
    }
    return false;
}

/// [0,2]^2 with the midpoint of the anti-diagonal: a dissection with a
/// T-junction that is not face to face.
ConfigPtr t_junction_square()
{
    return std::make_shared<const PointConfiguration>(
        2, std::vector<Point>{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
}

} // namespace

TEST_CASE("triangulations normalize simplex vertex order", "[simplicial_complex]")
{
    Triangulation t(cube_configuration(2));
    t.add({3, 0, 1});
    CHECK(t.simplex_copy(0) == Simplex{0, 1, 3});
    CHECK_THROWS_AS(t.add({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(t.add({0, 1, 9}), std::invalid_argument);
    CHECK_THROWS_AS(t.add({0, 1}), std::invalid_argument);
    CHECK(t.size() == 1);
    t.add({0, 2, 3});
    t.add({0, 1, 2});
    t.sort();
    CHECK(t.simplex_copy(0) == Simplex{0, 1, 2});
    CHECK(t.simplex_copy(2) == Simplex{0, 2, 3});
}

TEST_CASE("valid cube triangulations pass in every mode", "[simplicial_complex]")
{
    for (unsigned d = 1; d <= 4; ++d) {
        const Triangulation t = unimodular_cube(d);
        const NormalizedVolume expected(factorial(d));
        for (auto mode : {DissectionMode::pairwise, DissectionMode::ridge, DissectionMode::automatic}) {
            const auto r = validate_dissection(t, expected, with_mode(mode));
            CHECK(r.is_dissection);
        }
        CHECK(validate_face_to_face(t).is_face_to_face);
    }
    for (unsigned d = 1; d <= 3; ++d) CHECK(validate_face_to_face(minimal_cube(d)).is_face_to_face);
}

TEST_CASE("missing, duplicated and overlapping simplices are rejected", "[simplicial_complex]")
{
    const Triangulation full = minimal_cube(3);
    const NormalizedVolume six(Integer(6));

    Triangulation missing(full.config_ptr());
    for (std::size_t i = 1; i < full.size(); ++i) missing.add(full.simplex(i));
    for (auto mode : {DissectionMode::pairwise, DissectionMode::ridge}) {
        const auto r = validate_dissection(missing, six, with_mode(mode));
        CHECK_FALSE(r.is_dissection);
        CHECK(has_reason(r, "volume deficit"));
    }

    Triangulation duplicated = full;
    duplicated.add(full.simplex(0));
    const auto dup = validate_dissection(duplicated, six, with_mode(DissectionMode::pairwise));
    CHECK_FALSE(dup.is_dissection);
    CHECK(has_reason(dup, "duplicate"));

    // Swap a corner tetrahedron for a path simplex of equal volume: the
    // volume still adds up but interiors overlap.
    Triangulation equal_volume(full.config_ptr());
    equal_volume.add({0, 1, 3, 7});
    equal_volume.add({0, 1, 5, 7});
    equal_volume.add({0, 2, 3, 7});
    equal_volume.add({0, 2, 6, 7});
    equal_volume.add({0, 4, 5, 7});
    equal_volume.add({0, 1, 3, 7});
    for (auto mode : {DissectionMode::pairwise, DissectionMode::ridge}) {
        const auto r = validate_dissection(equal_volume, six, with_mode(mode));
        CHECK_FALSE(r.is_dissection);
    }
    Triangulation crossing(full.config_ptr());
    crossing.add({0, 3, 5, 6});
    crossing.add({0, 1, 3, 7});
    crossing.add({0, 1, 5, 7});
    crossing.add({0, 2, 3, 7});
    crossing.add({0, 2, 6, 7});
    const auto cr = validate_dissection(crossing, six, with_mode(DissectionMode::pairwise));
    CHECK_FALSE(cr.is_dissection);
    CHECK(has_reason(cr, "interiors intersect"));
}

TEST_CASE("degenerate simplices are reported", "[simplicial_complex]")
{
    Triangulation t(cube_configuration(2));
    t.add({0, 1, 2});
    t.add({1, 2, 3});
    REQUIRE(validate_dissection(t, NormalizedVolume(Integer(2))).is_dissection);
    auto line = std::make_shared<const PointConfiguration>(2, std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {0, 1}});
    Triangulation flat(line);
    flat.add({0, 1, 2});
    const auto r = validate_dissection(flat, NormalizedVolume(Integer(0)), with_mode(DissectionMode::ridge));
    CHECK_FALSE(r.is_dissection);
    CHECK(has_reason(r, "degenerate"));
}

TEST_CASE("a T-junction is a dissection but not face to face", "[simplicial_complex]")
{
    Triangulation t(t_junction_square());
    t.add({0, 1, 2}); // lower-left half, its long edge contains point 4
    t.add({1, 3, 4});
    t.add({2, 3, 4});
    const NormalizedVolume eight(Integer(8));
    const auto r = validate_face_to_face(t, eight);
    CHECK(r.is_dissection);
    CHECK_FALSE(r.is_face_to_face);
    CHECK(has_reason(r, "not face to face"));
    // The ridge certificate needs matching ridges and rejects it as well.
    CHECK_FALSE(validate_dissection(t, eight, with_mode(DissectionMode::ridge)).is_dissection);

    Triangulation proper(t_junction_square());
    proper.add({0, 1, 4});
    proper.add({0, 2, 4});
    proper.add({1, 3, 4});
    proper.add({2, 3, 4});
    CHECK(validate_face_to_face(proper, eight).is_face_to_face);
    CHECK(validate_dissection(proper, eight, with_mode(DissectionMode::ridge)).is_dissection);
}

TEST_CASE("boundary ridges", "[simplicial_complex]")
{
    const auto cube = cube_configuration(3);
    CHECK(ridge_on_boundary(*cube, std::vector<Index>{0, 1, 3}));
    CHECK_FALSE(ridge_on_boundary(*cube, std::vector<Index>{0, 3, 5}));
    const auto square = t_junction_square();
    CHECK(ridge_on_boundary(*square, std::vector<Index>{0, 1}));
    CHECK_FALSE(ridge_on_boundary(*square, std::vector<Index>{1, 4}));
}

TEST_CASE("cellwise validation over a coarse dissection", "[simplicial_complex]")
{
    // I^3 x I^2 built over the two triangles of the square.
    const Triangulation tq = minimal_cube(2);
    const Triangulation t0 = mixed_to_triangulation(seed_i3d1());
    const Coloring coloring = make_coloring(tq.config().size(), 2, ColoringStrategy::balanced);
    const Triangulation t = triangulate_product(tq, t0, coloring);
    const NormalizedVolume expected(factorial(5));
    const auto good = validate_dissection_cellwise(t, tq, expected);
    CHECK(good.is_dissection);
    CHECK(good.method == "cellwise");
    CHECK(validate_dissection(t, expected, with_mode(DissectionMode::pairwise)).is_dissection);

    // Swap one simplex for a simplex of another triangulation of the same cell
    // with the same volume; it must overlap a remaining simplex.
    const auto& config = t.config();
    const Triangulation alt =
        triangulate_product(tq, t0, make_coloring(tq.config().size(), 2, ColoringStrategy::explicit_map, 0, {0, 0, 1, 1}));
    auto cell_of = [&](std::span<const Index> s) {
        std::vector<Index> proj;
        for (Index v : s) proj.push_back(static_cast<Index>(v % config.right_factor_size()));
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        return proj;
    };
    std::set<Simplex> present;
    for (std::size_t i = 0; i < t.size(); ++i) present.insert(t.simplex_copy(i));
    std::optional<std::pair<std::size_t, Simplex>> swap;
    for (std::size_t i = 0; i < t.size() && !swap; ++i) {
        for (std::size_t j = 0; j < alt.size() && !swap; ++j) {
            if (present.count(alt.simplex_copy(j))) continue;
            if (cell_of(t.simplex(i)) != cell_of(alt.simplex(j))) continue;
            if (abs(oracle::simplex_volume(config, t.simplex(i))) != abs(oracle::simplex_volume(config, alt.simplex(j)))) {
                continue;
            }
            swap.emplace(i, alt.simplex_copy(j));
        }
    }
    REQUIRE(swap);
    Triangulation broken(t.config_ptr());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i != swap->first) broken.add(t.simplex(i));
    }
    broken.add(swap->second);
    const auto bad = validate_dissection_cellwise(broken, tq, expected);
    CHECK_FALSE(bad.is_dissection);
    CHECK(has_reason(bad, "interiors intersect"));
    CHECK_FALSE(validate_dissection(broken, expected, with_mode(DissectionMode::pairwise)).is_dissection);

    // Against the other diagonal of the square the cells no longer match.
    Triangulation flipped(tq.config_ptr());
    if (tq.simplex_copy(0) == Simplex{0, 1, 3} || tq.simplex_copy(1) == Simplex{0, 1, 3}) {
        flipped.add({0, 1, 2});
        flipped.add({1, 2, 3});
    } else {
        flipped.add({0, 1, 3});
        flipped.add({0, 2, 3});
    }
    const auto mismatch = validate_dissection_cellwise(t, flipped, expected);
    CHECK_FALSE(mismatch.is_dissection);
    CHECK(has_reason(mismatch, "single coarse cell"));
}

TEST_CASE("sizes, types and weights", "[simplicial_complex]")
{
    CHECK(efficiency(std::uint64_t{16}, 4) == Catch::Approx(std::pow(16.0 / 24.0, 0.25)));
    CHECK(efficiency(std::uint64_t{6}, 3) == Catch::Approx(1.0));

    const Triangulation prism = mixed_to_triangulation(square_family(2));
    CHECK(weighted_size(prism) == oracle::direct_weighted_size(prism, 2));
    CHECK(weighted_size(prism) == 3);
    const auto type = simplex_type(prism.config(), prism.simplex(0));
    Integer denom = 1;
    for (unsigned ti : type.t) denom *= factorial(ti);
    CHECK(type.weight == Rational(Integer(1), denom));

    const Triangulation point_factor = with_point_factor(minimal_cube(3));
    CHECK(weighted_size(point_factor) == Rational(5, 6));
    CHECK(weighted_efficiency(Rational(14, 3), 2, 3) == Catch::Approx(0.8355).margin(5e-5));
    CHECK_THROWS_AS(weighted_size(minimal_cube(3)), std::invalid_argument);
}

TEST_CASE("decimal rendering", "[simplicial_complex]")
{
    CHECK(to_decimal(Rational(44, 3), 3) == "14.667");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
    CHECK(to_decimal(Rational(5), 0) == "5");
    CHECK(to_double(Rational(1, 4)) == 0.25);
}
