#include "simplexity/seed_catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

#include "simplexity/coloring_product.hpp"
#include "simplexity/linear_program.hpp"
#include "simplexity/regular_triangulation.hpp"

namespace simplexity {

double hadamard_lower(unsigned d)
{
    if (d == 0) throw std::invalid_argument("hadamard_lower: d must be positive");
    return 2.0 / std::pow(static_cast<double>(d + 1), static_cast<double>(d + 1) / (2.0 * d));
}

KnownConstants known_constants(unsigned d)
{
    // Smallest sizes (d <= 7 exact, d = 8 an upper bound), their efficiencies,
    // and Smith's hyperbolic-volume lower bounds, as tabulated in the literature.
    static constexpr std::array<std::uint64_t, 8> phi{1, 2, 5, 16, 67, 308, 1493, 11944};
    static constexpr std::array<double, 8> rho{1, 1, .941, .904, .890, .868, .840, .859};
    static constexpr std::array<double, 8> smith{1, 1, .941, .889, .833, .789, .751, .718};
    if (d < 1 || d > 8) throw std::out_of_range("known_constants: d must be in 1..8");
    KnownConstants k;
    k.d = d;
    k.phi = phi[d - 1];
    k.phi_is_upper_bound = d == 8;
    k.rho = rho[d - 1];
    k.hadamard_lower = hadamard_lower(d);
    k.smith_lower = smith[d - 1];
    return k;
}

Triangulation unimodular_cube(unsigned d)
{
    if (d < 1 || d > max_unimodular_cube_dim) throw std::out_of_range("unimodular_cube: d must be in 1..8");
    Triangulation t(cube_configuration(static_cast<int>(d)));
    std::vector<unsigned> perm(d);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<Index> simplex(d + 1);
    do {
        Index v = 0;
        simplex[0] = v;
        for (unsigned i = 0; i < d; ++i) {
            v |= Index{1} << (d - 1 - perm[i]);
            simplex[i + 1] = v;
        }
        t.add(simplex);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return t;
}

Triangulation minimal_cube(unsigned d)
{
    Triangulation t(cube_configuration(static_cast<int>(d)));
    switch (d) {
    case 1: t.add({0, 1}); break;
    case 2:
        t.add({0, 1, 3});
        t.add({0, 2, 3});
        break;
    case 3:
        // Even vertices 000, 011, 101, 110 span the central tetrahedron.
        t.add({0, 3, 5, 6});
        t.add({1, 0, 3, 5});
        t.add({2, 0, 3, 6});
        t.add({4, 0, 5, 6});
        t.add({7, 3, 5, 6});
        break;
    default: throw std::out_of_range("minimal_cube: only d <= 3 is available");
    }
    return t;
}

// ---------------------------------------------------------------------------
// The square family

MixedSubdivision square_family(unsigned m)
{
    if (m == 0) throw std::invalid_argument("square_family: m must be positive");
    auto square = cube_configuration(2);
    MixedSubdivision s;
    s.base = square;
    if (m == 1) {
        s.m = 1;
        s.cells = {MixedCell{{{0, 1, 3}}}, MixedCell{{{0, 2, 3}}}};
        return s;
    }
    // m = 2: the diagonal square in the middle of [0,2]^2 and four corner
    // triangles, two taken from each summand.
    s.m = 2;
    s.cells = {
        MixedCell{{{0, 3}, {1, 2}}},
        MixedCell{{{0}, {0, 1, 2}}},
        MixedCell{{{3}, {1, 2, 3}}},
        MixedCell{{{0, 2, 3}, {2}}},
        MixedCell{{{0, 1, 3}, {1}}},
    };
    if (m == 2) return s;
    // Larger m: scale the two summands by floor(m/2) and ceil(m/2) and refine
    // by multi-staircases; the parallelogram of a diagonal copies splits into
    // a * b diagonal squares.
    const Triangulation t0 = mixed_to_triangulation(s);
    const Triangulation lifted = lift_triangulation(t0, KVector({m / 2, m - m / 2}));
    MixedSubdivision out = triangulation_to_mixed(lifted);
    out.base = square;
    return out;
}

// ---------------------------------------------------------------------------
// I^3 + I^3 from the cuboctahedron

namespace {

/// Points of `pts` that are not convex combinations of the others.
std::vector<Point> extreme_points(const std::vector<Point>& pts)
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::size_t d = pts[i].size();
        CoordinateMatrix a(d + 1, pts.size() - 1);
        std::vector<Coordinate> b(d + 1);
        std::size_t col = 0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            for (std::size_t c = 0; c < d; ++c) a(c, col) = pts[j][c];
            a(d, col) = 1;
            ++col;
        }
        for (std::size_t c = 0; c < d; ++c) b[c] = pts[i][c];
        b[d] = 1;
        if (pts.size() == 1 || !nonnegative_solution_exists(a, b)) out.push_back(pts[i]);
    }
    return out;
}

/// Cells of [0,2]^3 as vertex sets: eight corner tetrahedra and the octants
/// of the cuboctahedron cut by three of the four hexagon planes (all but `skip`).
std::vector<std::vector<Point>> cuboctahedron_cells(int skip)
{
    std::vector<std::vector<Point>> cells;
    for (Coordinate x : {0, 2}) {
        for (Coordinate y : {0, 2}) {
            for (Coordinate z : {0, 2}) {
                const Point c{x, y, z};
                std::vector<Point> tet{c};
                for (int i = 0; i < 3; ++i) {
                    Point p = c;
                    p[i] += c[i] == 0 ? 1 : -1;
                    tet.push_back(p);
                }
                cells.push_back(tet);
            }
        }
    }
    // Edge midpoints: one coordinate 1, the others in {0, 2}; plus the centre.
    std::vector<Point> cubocta{{1, 1, 1}};
    for (int i = 0; i < 3; ++i) {
        for (Coordinate a : {0, 2}) {
            for (Coordinate b : {0, 2}) {
                Point p(3);
                p[i] = 1;
                p[(i + 1) % 3] = a;
                p[(i + 2) % 3] = b;
                cubocta.push_back(p);
            }
        }
    }
    const std::array<std::array<Coordinate, 3>, 4> normals{{{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}};
    std::vector<std::array<Coordinate, 3>> planes;
    for (int i = 0; i < 4; ++i) {
        if (i != skip) planes.push_back(normals[i]);
    }
    for (int signs = 0; signs < 8; ++signs) {
        std::vector<Point> piece;
        for (const auto& p : cubocta) {
            bool inside = true;
            for (int j = 0; j < 3 && inside; ++j) {
                Coordinate v = 0;
                for (int c = 0; c < 3; ++c) v += planes[j][c] * (p[c] - 1);
                if ((signs >> j) & 1) v = -v;
                inside = v >= 0;
            }
            if (inside) piece.push_back(p);
        }
        if (piece.size() < 4) continue;
        cells.push_back(extreme_points(piece));
    }
    return cells;
}

/// Cayley simplex of a cell of P + P over P x Delta^1.
std::vector<Index> cayley_simplex(const MixedCell& cell, unsigned m)
{
    std::vector<Index> s;
    for (unsigned i = 0; i < m; ++i) {
        for (Index p : cell.summands[i]) s.push_back(static_cast<Index>(p * m + i));
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Picks one decomposition per cell so that the Cayley simplices pairwise
/// meet properly with disjoint interiors.
std::optional<MixedSubdivision> assemble(const ConfigPtr& base, unsigned m,
                                         const std::vector<std::vector<MixedCell>>& options)
{
    auto product = product_configuration(base, simplex_configuration(static_cast<int>(m) - 1));
    std::vector<std::vector<std::vector<Index>>> simplices(options.size());
    for (std::size_t c = 0; c < options.size(); ++c) {
        for (const auto& cell : options[c]) simplices[c].push_back(cayley_simplex(cell, m));
    }
    auto compatible = [&](std::size_t c1, std::size_t o1, std::size_t c2, std::size_t o2) {
        const auto& a = simplices[c1][o1];
        const auto& b = simplices[c2][o2];
        return !simplex_interiors_intersect(*product, a, b) && simplices_meet_properly(*product, a, b);
    };
    std::vector<std::size_t> pick(options.size());
    auto rec = [&](auto&& self, std::size_t c) -> bool {
        if (c == options.size()) return true;
        for (std::size_t o = 0; o < options[c].size(); ++o) {
            bool ok = true;
            for (std::size_t prev = 0; prev < c && ok; ++prev) ok = compatible(prev, pick[prev], c, o);
            if (!ok) continue;
            pick[c] = o;
            if (self(self, c + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    MixedSubdivision s;
    s.base = base;
    s.m = m;
    for (std::size_t c = 0; c < options.size(); ++c) s.cells.push_back(options[c][pick[c]]);
    return s;
}

} // namespace

MixedSubdivision seed_i3d1()
{
    auto cube = cube_configuration(3);
    std::vector<std::string> problems;
    for (int skip = 3; skip >= 0; --skip) {
        const auto cells = cuboctahedron_cells(skip);
        std::vector<std::vector<MixedCell>> options;
        bool decomposable = true;
        for (const auto& cell : cells) {
            options.push_back(decompose_cell(*cube, 2, cell));
            if (options.back().empty()) decomposable = false;
        }
        if (!decomposable) {
            problems.push_back("hexagon choice " + std::to_string(skip) + ": a cell has no fine decomposition");
            continue;
        }
        auto s = assemble(cube, 2, options);
        if (!s) {
            problems.push_back("hexagon choice " + std::to_string(skip) + ": no compatible decomposition");
            continue;
        }
        canonicalize(*s);
        const SeedCheck check = check_seed(*s);
        if (check.ok() && check.weighted == Rational(14, 3)) return *s;
        problems.push_back("hexagon choice " + std::to_string(skip) + ": verification failed");
    }
    std::string message = "seed_i3d1: construction failed";
    for (const auto& p : problems) message += "; " + p;
    throw std::runtime_error(message);
}

// ---------------------------------------------------------------------------
// I^3 + I^3 + I^3

const std::vector<Coordinate>& seed_i3d2_heights()
{
    static const std::vector<Coordinate> heights{-13, -1, -17, -22, -4, -1, -21, 0,   -1, -7, -17, -1,
                                                 -21, 3,  -1,  2,   -9, 0,  -5,  -13, -4, -1, 4,   -13};
    return heights;
}

MixedSubdivision seed_i3d2()
{
    auto config = cube_times_simplex_configuration(3, 3);
    const Triangulation t = regular_triangulation(config, seed_i3d2_heights());
    MixedSubdivision s = triangulation_to_mixed(t);
    canonicalize(s);
    const SeedCheck check = check_seed(s);
    const Census expected{{{0, 0, 3}, 16}, {{0, 1, 2}, 20}, {{1, 1, 1}, 2}};
    std::string message;
    if (!check.ok()) message += " verification failed:";
    for (const auto& p : check.problems) message += " " + p + ";";
    if (check.cells != expected) message += " unexpected cell census;";
    if (check.weighted != Rational(44, 3)) message += " weighted size " + check.weighted.str() + " != 44/3;";
    if (!message.empty()) throw std::runtime_error("seed_i3d2:" + message);
    return s;
}

Census census(const MixedSubdivision& s)
{
    Census c;
    for (const auto& cell : s.cells) {
        auto d = cell.dims();
        std::sort(d.begin(), d.end());
        ++c[d];
    }
    return c;
}

SeedCheck check_seed(const MixedSubdivision& s)
{
    SeedCheck check;
    check.cells = census(s);
    check.fine = true;
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        if (s.cells[c].summands.size() != s.m || !is_fine_cell(*s.base, s.cells[c])) {
            check.fine = false;
            check.problems.push_back("cell " + std::to_string(c) + " is not fine");
        }
    }
    if (!check.fine) return check;
    check.weighted = mixed_weighted_size(s);

    const Triangulation pieces = realize_cells(s);
    const NormalizedVolume total(pow(Integer(s.m), static_cast<unsigned>(s.base->dim())) *
                                 ambient_normalized_volume(s.base->label()).value());
    ValidationOptions pairwise;
    pairwise.mode = DissectionMode::pairwise;
    const auto partition = validate_dissection(pieces, total, pairwise);
    check.partition = partition.is_dissection;
    for (const auto& v : partition.violations) check.problems.push_back("partition: " + v.reason);

    const Triangulation cayley = mixed_to_triangulation(s);
    check.cayley_simplices = cayley.size();
    const auto f2f = validate_face_to_face(cayley);
    check.face_to_face = f2f.is_face_to_face;
    for (const auto& v : f2f.violations) check.problems.push_back("cayley: " + v.reason);
    return check;
}

MixedSubdivision seed_by_name(const std::string& name)
{
    std::smatch match;
    static const std::regex square_re(R"(^square(?:_family)?\((\d+)\)$)");
    static const std::regex unimodular_re(R"(^unimodular\((\d+),(\d+)\)$)");
    if (name == "i3d1") return seed_i3d1();
    if (name == "i3d2") return seed_i3d2();
    if (name == "square_family" || name == "square") return square_family(2);
    if (std::regex_match(name, match, square_re)) return square_family(static_cast<unsigned>(std::stoul(match[1])));
    if (std::regex_match(name, match, unimodular_re)) {
        const auto l = static_cast<unsigned>(std::stoul(match[1]));
        const auto m = static_cast<unsigned>(std::stoul(match[2]));
        if (m == 0) throw std::invalid_argument("unimodular seed needs m >= 1");
        const Triangulation base = with_point_factor(unimodular_cube(l));
        return triangulation_to_mixed(lift_triangulation(base, KVector({m})));
    }
    throw std::invalid_argument("unknown seed: " + name);
}

} // namespace simplexity
