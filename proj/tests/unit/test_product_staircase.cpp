#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "simplexity/cayley.hpp"
#include "simplexity/product_staircase.hpp"
#include "simplexity/seed_catalog.hpp"

using namespace simplexity;

namespace {

std::vector<unsigned> color_counts(std::span<const Index> s, std::size_t m)
{
    std::vector<unsigned> l(m, 0);
    for (Index v : s) ++l[v % m];
    return l;
}

std::uint64_t pascal_count(const std::vector<unsigned>& l, const std::vector<unsigned>& k)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < l.size(); ++i) total *= oracle::pascal(k[i] + l[i] - 2, k[i] - 1);
    return total;
}

} // namespace

TEST_CASE("monotone staircases are the lattice paths", "[product_staircase]")
{
    for (unsigned rows = 1; rows <= 4; ++rows) {
        for (unsigned cols = 1; cols <= 4; ++cols) {
            const auto paths = monotone_staircases(rows, cols);
            CHECK(paths.size() == oracle::pascal(rows + cols - 2, rows - 1));
            // Lexicographic in the step sequence, a step down before a step right.
            auto steps = [](const std::vector<std::pair<unsigned, unsigned>>& path) {
                std::vector<int> out;
                for (std::size_t i = 1; i < path.size(); ++i) out.push_back(path[i].first == path[i - 1].first);
                return out;
            };
            CHECK(std::is_sorted(paths.begin(), paths.end(),
                                 [&](const auto& a, const auto& b) { return steps(a) < steps(b); }));
            for (const auto& p : paths) {
                REQUIRE(p.size() == rows + cols - 1);
                CHECK(p.front() == std::pair<unsigned, unsigned>{0, 0});
                CHECK(p.back() == std::pair<unsigned, unsigned>{rows - 1, cols - 1});
                for (std::size_t i = 1; i < p.size(); ++i) {
                    const unsigned dr = p[i].first - p[i - 1].first;
                    const unsigned dc = p[i].second - p[i - 1].second;
                    CHECK(dr + dc == 1);
                }
            }
        }
    }
}

TEST_CASE("staircase triangulations are unimodular triangulations", "[product_staircase]")
{
    for (unsigned k = 0; k <= 3; ++k) {
        for (unsigned l = 0; l <= 3; ++l) {
            const Triangulation t = staircase_triangulation(k, l);
            CHECK(t.size() == oracle::pascal(k + l, k));
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (k + l > 0) CHECK(abs(oracle::simplex_volume(t.config(), t.simplex(i))) == 1);
            }
            if (k + l > 0) CHECK(validate_face_to_face(t).is_face_to_face);
        }
    }
}

TEST_CASE("k-vectors are positive", "[product_staircase]")
{
    CHECK_THROWS_AS(KVector({2, 0, 1}), std::invalid_argument);
    const KVector k({2, 3});
    CHECK(k.total() == 5);
    CHECK(k.size() == 2);
}

TEST_CASE("multi-staircase counts match enumeration", "[product_staircase]")
{
    const Triangulation t0 = mixed_to_triangulation(seed_i3d1());
    for (const auto& kv : std::vector<std::vector<unsigned>>{{1, 1}, {2, 1}, {1, 3}, {3, 2}}) {
        const KVector k(kv);
        for (std::size_t i = 0; i < t0.size(); ++i) {
            const auto l = color_counts(t0.simplex(i), 2);
            const LiftedCell cell = lift_cell(t0.config(), t0.simplex(i), k);
            const auto enumerated = multi_staircases(cell, k.total());
            CHECK(enumerated.size() == multi_staircase_count(l, k));
            CHECK(enumerated.size() == pascal_count(l, kv));
            std::set<Simplex> distinct(enumerated.begin(), enumerated.end());
            CHECK(distinct.size() == enumerated.size());
        }
    }
}

TEST_CASE("lifting with unit multiplicities is the identity", "[product_staircase]")
{
    const Triangulation t0 = mixed_to_triangulation(seed_i3d1());
    const Triangulation lifted = lift_triangulation(t0, KVector({1, 1}));
    std::set<Simplex> a, b;
    for (std::size_t i = 0; i < t0.size(); ++i) a.insert(t0.simplex_copy(i));
    for (std::size_t i = 0; i < lifted.size(); ++i) b.insert(lifted.simplex_copy(i));
    CHECK(a == b);
}

TEST_CASE("lifted triangulations are valid with the closed-form size", "[product_staircase]")
{
    const Triangulation prism = mixed_to_triangulation(square_family(2));
    for (const auto& kv : std::vector<std::vector<unsigned>>{{2, 1}, {2, 2}, {1, 3}, {3, 2}}) {
        const KVector k(kv);
        const Triangulation lifted = lift_triangulation(prism, k);
        std::uint64_t expected = 0;
        for (std::size_t i = 0; i < prism.size(); ++i) expected += pascal_count(color_counts(prism.simplex(i), 2), kv);
        CHECK(lifted.size() == expected);
        CHECK(lifted.config().label() == ConfigLabel::cube_times_simplex(2, static_cast<int>(k.total()) - 1));
        CHECK(validate_face_to_face(lifted).is_face_to_face);
    }
}

TEST_CASE("left factor of a product", "[product_staircase]")
{
    const auto prod = cube_times_simplex_configuration(3, 2);
    const auto p = left_factor(*prod);
    CHECK(p->size() == 8);
    CHECK(p->label() == ConfigLabel::cube(3));
}
