#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "simplexity/linear_program.hpp"

using namespace simplexity;

namespace {

/// Ax = b, x >= 0 is feasible iff some basic solution is: try every column
/// subset of size rank(A) with rational elimination.
bool basic_solution_exists(const CoordinateMatrix& a, const std::vector<Coordinate>& b)
{
    const std::size_t rows = a.rows;
    const std::size_t cols = a.cols;
    for (std::uint32_t mask = 0; mask < (1u << cols); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t c = 0; c < cols; ++c) {
            if (mask >> c & 1) chosen.push_back(c);
        }
        // Solve [A_chosen | b] and require a unique nonnegative solution.
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(chosen.size() + 1));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j < chosen.size(); ++j) m[r][j] = a(r, chosen[j]);
            m[r][chosen.size()] = b[r];
        }
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t c = 0; c < chosen.size() && rank < rows; ++c) {
            std::size_t p = rank;
            while (p < rows && m[p][c] == 0) ++p;
            if (p == rows) continue;
            std::swap(m[p], m[rank]);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rank || m[r][c] == 0) continue;
                const Rational f = m[r][c] / m[rank][c];
                for (std::size_t k = c; k <= chosen.size(); ++k) m[r][k] -= f * m[rank][k];
            }
            pivot_col.push_back(c);
            ++rank;
        }
        if (rank != chosen.size()) continue;
        bool consistent = true;
        for (std::size_t r = rank; r < rows; ++r) consistent = consistent && m[r][chosen.size()] == 0;
        if (!consistent) continue;
        bool nonnegative = true;
        for (std::size_t r = 0; r < rank; ++r) nonnegative = nonnegative && m[r][chosen.size()] / m[r][pivot_col[r]] >= 0;
        if (nonnegative) return true;
    }
    return false;
}

/// Separating axis test for closed triangles: interiors are disjoint iff an
/// edge line of either triangle weakly separates them.
bool triangle_interiors_meet(const std::vector<Point>& t1, const std::vector<Point>& t2)
{
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (const auto* tri : {&t1, &t2}) {
        const auto* other = tri == &t1 ? &t2 : &t1;
        for (int e = 0; e < 3; ++e) {
            const Point& a = (*tri)[e];
            const Point& b = (*tri)[(e + 1) % 3];
            const Point& c = (*tri)[(e + 2) % 3];
            const Coordinate inside = cross(a, b, c);
            bool separated = true;
            for (const Point& p : *other) {
                const Coordinate s = cross(a, b, p);
                if ((inside > 0 && s > 0) || (inside < 0 && s < 0)) separated = false;
            }
            if (separated) return false;
        }
    }
    return true;
}

/// Intersection of two closed triangles by half-plane clipping, reduced to
/// its extreme points.
std::set<std::pair<Rational, Rational>> triangle_intersection(const std::vector<Point>& t1,
                                                              const std::vector<Point>& t2)
{
    using RPoint = std::pair<Rational, Rational>;
    std::vector<RPoint> poly;
    for (const auto& p : t1) poly.emplace_back(p[0], p[1]);
    auto side = [](const RPoint& a, const RPoint& b, const RPoint& p) {
        return (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
    };
    for (int e = 0; e < 3; ++e) {
        RPoint a(t2[e][0], t2[e][1]);
        RPoint b(t2[(e + 1) % 3][0], t2[(e + 1) % 3][1]);
        RPoint c(t2[(e + 2) % 3][0], t2[(e + 2) % 3][1]);
        const int orient = side(a, b, c) > 0 ? 1 : -1;
        std::vector<RPoint> out;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const RPoint& p = poly[i];
            const RPoint& q = poly[(i + 1) % poly.size()];
            const Rational sp = side(a, b, p) * orient;
            const Rational sq = side(a, b, q) * orient;
            if (sp >= 0) out.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                const Rational t = sp / (sp - sq);
                out.emplace_back(p.first + t * (q.first - p.first), p.second + t * (q.second - p.second));
            }
        }
        poly = std::move(out);
        if (poly.empty()) break;
    }
    std::set<RPoint> pts(poly.begin(), poly.end());
    std::set<RPoint> extreme;
    for (const auto& p : pts) {
        bool between = false;
        for (const auto& q : pts) {
            for (const auto& r : pts) {
                if (q == p || r == p || q == r) continue;
                if (side(q, r, p) != 0) continue;
                const Rational dq = (p.first - q.first) * (r.first - q.first) + (p.second - q.second) * (r.second - q.second);
                const Rational dr = (r.first - q.first) * (r.first - q.first) + (r.second - q.second) * (r.second - q.second);
                if (dq > 0 && dq < dr) between = true;
            }
        }
        if (!between) extreme.insert(p);
    }
    return extreme;
}

} // namespace

TEST_CASE("nonnegative feasibility agrees with basic-solution enumeration", "[linear_program]")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Coordinate> entry(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + trial % 3;
        const std::size_t cols = 2 + trial % 4;
        CoordinateMatrix a(rows, cols);
        for (auto& v : a.data) v = entry(rng);
        std::vector<Coordinate> b(rows);
        for (auto& v : b) v = entry(rng);
        INFO("trial " << trial);
        CHECK(nonnegative_solution_exists(a, b) == basic_solution_exists(a, b));
    }
}

TEST_CASE("interior intersection agrees with separating axes", "[linear_program]")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Coordinate> coord(0, 3);
    std::vector<Point> pts;
    for (Coordinate x = 0; x <= 3; ++x) {
        for (Coordinate y = 0; y <= 3; ++y) pts.push_back({x, y});
    }
    const PointConfiguration grid(2, pts);
    std::uniform_int_distribution<Index> pick(0, 15);
    int checked = 0;
    while (checked < 400) {
        std::vector<Index> s1{pick(rng), pick(rng), pick(rng)};
        std::vector<Index> s2{pick(rng), pick(rng), pick(rng)};
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (normalized_volume(grid, s1).is_zero() || normalized_volume(grid, s2).is_zero()) continue;
        std::vector<Point> t1, t2;
        for (Index v : s1) t1.push_back(grid.point_copy(v));
        for (Index v : s2) t2.push_back(grid.point_copy(v));
        INFO("triangles " << s1[0] << "," << s1[1] << "," << s1[2] << " / " << s2[0] << "," << s2[1] << "," << s2[2]);
        CHECK(simplex_interiors_intersect(grid, s1, s2) == triangle_interiors_meet(t1, t2));

        std::set<std::pair<Rational, Rational>> common;
        for (Index v : s1) {
            if (std::binary_search(s2.begin(), s2.end(), v)) {
                common.emplace(grid.point(v)[0], grid.point(v)[1]);
            }
        }
        CHECK(simplices_meet_properly(grid, s1, s2) == (triangle_intersection(t1, t2) == common));
        ++checked;
    }
}

TEST_CASE("known tetrahedron pairs in the cube", "[linear_program]")
{
    const auto cube = cube_configuration(3);
    const std::vector<Index> central{0, 3, 5, 6};
    const std::vector<Index> corner{1, 0, 3, 5};
    std::vector<Index> corner_sorted = corner;
    std::sort(corner_sorted.begin(), corner_sorted.end());
    CHECK_FALSE(simplex_interiors_intersect(*cube, central, corner_sorted));
    CHECK(simplices_meet_properly(*cube, central, corner_sorted));
    // A path simplex of the unimodular triangulation crosses the central one.
    const std::vector<Index> a{0, 1, 3, 7};
    const std::vector<Index> b{0, 3, 5, 6};
    CHECK(simplex_interiors_intersect(*cube, a, b));
    CHECK_FALSE(simplices_meet_properly(*cube, a, b));
}
