#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "simplexity/search_oracle.hpp"

using namespace simplexity;

namespace {

std::size_t enumerated_count(const ConfigPtr& config, Objective objective = Objective::weighted)
{
    std::set<std::vector<Simplex>> distinct;
    const std::size_t visited = enumerate_triangulations({config, objective}, [&](const Triangulation& t) {
        CHECK(validate_face_to_face(t).is_face_to_face);
        std::vector<Simplex> s;
        for (std::size_t i = 0; i < t.size(); ++i) s.push_back(t.simplex_copy(i));
        std::sort(s.begin(), s.end());
        distinct.insert(s);
        return true;
    });
    CHECK(distinct.size() == visited);
    return visited;
}

} // namespace

TEST_CASE("candidate simplices are the full-dimensional subsets", "[search_oracle]")
{
    const auto cube = cube_configuration(3);
    const auto candidates = candidate_simplices(*cube);
    CHECK(candidates.size() == oracle::full_simplices(*cube).size());
    CHECK(std::is_sorted(candidates.begin(), candidates.end()));
}

TEST_CASE("triangulation counts agree with exhaustive clique search", "[search_oracle]")
{
    for (const auto& config : {cube_configuration(2), cube_configuration(3), simplex_configuration(3),
                               cube_times_simplex_configuration(1, 3), cube_times_simplex_configuration(2, 2),
                               product_configuration(simplex_configuration(2), simplex_configuration(2))}) {
        INFO(config->label());
        const Integer total = ambient_normalized_volume(config->label()).value();
        CHECK(enumerated_count(config) == oracle::clique_triangulation_count(*config, total));
    }
}

TEST_CASE("minimum sizes", "[search_oracle]")
{
    const auto cube = cube_configuration(3);
    const SearchResult card = min_weighted_size({cube, Objective::cardinality});
    CHECK(card.value == 5);
    CHECK(card.triangulations == 74);
    CHECK(card.witness.size() == 5);
    const SearchResult weighted = min_weighted_size({cube, Objective::weighted});
    CHECK(weighted.value == Rational(5, 6));
    const SearchResult prism = min_weighted_size({cube_times_simplex_configuration(2, 2), Objective::weighted});
    CHECK(prism.value == 3);
    CHECK(objective_value(prism.witness, Objective::weighted) == 3);
    CHECK(objective_value(prism.witness, Objective::cardinality) == prism.witness.size());
}

TEST_CASE("segment times a simplex has weighted size m", "[search_oracle]")
{
    for (int m = 1; m <= 3; ++m) {
        const SearchResult r = min_weighted_size({cube_times_simplex_configuration(1, m), Objective::weighted});
        CHECK(r.value == m);
        CHECK(validate_face_to_face(r.witness).is_face_to_face);
    }
    CHECK(enumerated_count(cube_configuration(1)) == 1);
}

TEST_CASE("enumeration stops on request", "[search_oracle]")
{
    std::size_t seen = 0;
    const std::size_t visited = enumerate_triangulations({cube_configuration(3), Objective::weighted},
                                                         [&](const Triangulation&) { return ++seen < 3; });
    CHECK(visited == 3);
}
