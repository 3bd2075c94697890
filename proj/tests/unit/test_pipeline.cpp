#include <catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"
#include "simplexity/pipeline.hpp"
#include "simplexity/seed_catalog.hpp"

using namespace simplexity;

TEST_CASE("small cubes are built and verified", "[pipeline]")
{
    for (unsigned d = 1; d <= 6; ++d) {
        PipelineSpec spec;
        spec.target_dim = d;
        spec.samples = 16;
        const PipelineResult r = build_cube_recursive(spec);
        INFO("d = " << d);
        CHECK(r.triangulation.size() == r.size);
        REQUIRE(r.validity);
        CHECK(r.validity->is_face_to_face);
        CHECK(r.base_dim == (d - 1) % 3 + 1);
        for (const auto& step : r.steps) {
            CHECK(step.within_bound);
            CHECK(Rational(Integer(step.size)) <= step.bound);
            CHECK(step.m <= step.n);
            CHECK(step.colors.size() == (std::size_t{1} << (step.n - 1)));
        }
    }
}

TEST_CASE("seed choice follows the clamped color count", "[pipeline]")
{
    PipelineSpec spec;
    spec.target_dim = 7;
    spec.samples = 4;
    spec.validate = false;
    const PipelineResult r = build_cube_recursive(spec);
    REQUIRE(r.steps.size() == 2);
    CHECK(r.steps[0].m == 2);
    CHECK(r.steps[0].seed == "i3d1");
    CHECK(r.steps[1].m == 3);
    CHECK(r.steps[1].seed == "i3d2");
}

TEST_CASE("above the face-to-face range every level is checked cellwise", "[pipeline]")
{
    PipelineSpec spec;
    spec.target_dim = 5;
    spec.face_check_max_dim = 3;
    spec.samples = 4;
    const PipelineResult r = build_cube_recursive(spec);
    REQUIRE(r.validity);
    CHECK(r.validity->is_dissection);
    CHECK(r.validity->method == "cellwise");
    for (const auto& step : r.steps) {
        REQUIRE(step.validity);
        CHECK(step.validity->is_dissection);
    }
}

TEST_CASE("runs are deterministic and size-only agrees", "[pipeline]")
{
    PipelineSpec spec;
    spec.target_dim = 7;
    spec.samples = 8;
    spec.rng_seed = 12;
    spec.validate = false;
    const PipelineResult a = build_cube_recursive(spec);
    const PipelineResult b = build_cube_recursive(spec);
    CHECK(a.size == b.size);
    CHECK(a.triangulation.raw() == b.triangulation.raw());
    spec.size_only = true;
    const PipelineResult c = build_cube_recursive(spec);
    CHECK(c.size == a.size);
    CHECK(c.triangulation.empty());
}

TEST_CASE("other seeds and strategies", "[pipeline]")
{
    PipelineSpec square;
    square.target_dim = 5;
    square.l = 2;
    square.m = 2;
    square.seed = "square_family";
    square.coloring = ColoringStrategy::balanced;
    const PipelineResult r = build_cube_recursive(square);
    REQUIRE(r.validity);
    CHECK(r.validity->is_face_to_face);

    PipelineSpec uni;
    uni.target_dim = 4;
    uni.l = 2;
    uni.m = 2;
    uni.seed = "unimodular";
    uni.samples = 4;
    const PipelineResult u = build_cube_recursive(uni);
    REQUIRE(u.validity);
    CHECK(u.validity->is_face_to_face);

    PipelineSpec bad;
    bad.target_dim = 5;
    bad.l = 2;
    CHECK_THROWS(build_cube_recursive(bad));
}

TEST_CASE("Haiman refinement", "[pipeline]")
{
    const Triangulation t = build_cube_haiman(minimal_cube(2), minimal_cube(2));
    CHECK(t.size() == 2 * 2 * oracle::pascal(4, 2));
    CHECK(validate_face_to_face(t).is_face_to_face);
    CHECK(haiman_size(1) == 1);
    CHECK(haiman_size(4) == 20);
    CHECK(haiman_size(6) == 500);
}

TEST_CASE("report table", "[pipeline]")
{
    PipelineSpec base;
    base.samples = 8;
    const auto rows = report_table(7, base);
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        CHECK(row.size <= oracle::factorial(row.d));
        CHECK(row.hadamard == Catch::Approx(hadamard_lower(row.d)));
    }
    std::ostringstream os;
    write_table_csv(os, rows);
    const std::string csv = os.str();
    CHECK(csv.rfind("d,size,efficiency,bound,hadamard,smith,phi_known,rho_known", 0) == 0);
    CHECK(csv.find("0.8159") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
}
