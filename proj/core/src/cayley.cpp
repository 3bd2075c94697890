#include "simplexity/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace simplexity {

std::vector<unsigned> MixedCell::dims() const
{
    std::vector<unsigned> out;
    out.reserve(summands.size());
    for (const auto& b : summands) out.push_back(b.empty() ? 0u : static_cast<unsigned>(b.size() - 1));
    return out;
}

namespace {

/// Direction vectors b - b_0 of the distinct summands, one row each.
CoordinateMatrix direction_rows(const PointConfiguration& base, const std::vector<const std::vector<Index>*>& parts)
{
    std::size_t rows = 0;
    for (const auto* b : parts) rows += b->size() - 1;
    CoordinateMatrix e(rows, base.dim());
    std::size_t r = 0;
    for (const auto* b : parts) {
        auto p0 = base.point((*b)[0]);
        for (std::size_t i = 1; i < b->size(); ++i, ++r) {
            auto p = base.point((*b)[i]);
            for (std::size_t c = 0; c < base.dim(); ++c) e(r, c) = p[c] - p0[c];
        }
    }
    return e;
}

} // namespace

bool is_fine_cell(const PointConfiguration& base, const MixedCell& cell)
{
    std::vector<const std::vector<Index>*> parts;
    std::size_t total = 0;
    for (const auto& b : cell.summands) {
        if (b.empty()) return false;
        if (affine_rank(base, b) + 1 != b.size()) return false;
        total += b.size() - 1;
        parts.push_back(&b);
    }
    if (total != base.dim()) return false;
    return matrix_rank(direction_rows(base, parts)) == base.dim();
}

MixedSubdivision triangulation_to_mixed(const Triangulation& t)
{
    const auto& product = t.config();
    if (!product.is_product()) throw std::invalid_argument("triangulation_to_mixed: not a product configuration");
    MixedSubdivision s;
    s.base = left_factor(product);
    s.m = static_cast<unsigned>(product.right_factor_size());
    s.cells.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        MixedCell cell;
        cell.summands.resize(s.m);
        for (Index v : t.simplex(i)) cell.summands[v % s.m].push_back(static_cast<Index>(v / s.m));
        s.cells.push_back(std::move(cell));
    }
    return s;
}

Triangulation mixed_to_triangulation(const MixedSubdivision& s)
{
    auto config = product_configuration(s.base, simplex_configuration(static_cast<int>(s.m) - 1));
    Triangulation t(config);
    t.reserve(s.cells.size());
    std::vector<Index> simplex;
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        const auto& cell = s.cells[c];
        if (cell.summands.size() != s.m || !is_fine_cell(*s.base, cell)) {
            throw std::invalid_argument("mixed_to_triangulation: cell " + std::to_string(c) + " is not fine");
        }
        simplex.clear();
        for (std::size_t i = 0; i < s.m; ++i) {
            for (Index p : cell.summands[i]) simplex.push_back(static_cast<Index>(p * s.m + i));
        }
        t.add(simplex);
    }
    return t;
}

MixedSubdivision scale_mixed(const MixedSubdivision& s, const KVector& k)
{
    if (k.size() != s.m) throw std::invalid_argument("scale_mixed: k has the wrong length");
    MixedSubdivision out;
    out.base = s.base;
    out.m = k.total();
    out.cells.reserve(s.cells.size());
    for (const auto& cell : s.cells) {
        MixedCell scaled;
        for (std::size_t i = 0; i < s.m; ++i) {
            for (unsigned r = 0; r < k[i]; ++r) scaled.summands.push_back(cell.summands[i]);
        }
        out.cells.push_back(std::move(scaled));
    }
    return out;
}

Rational mixed_weighted_size(const MixedSubdivision& s)
{
    std::map<std::vector<unsigned>, std::uint64_t> census;
    for (const auto& cell : s.cells) {
        auto d = cell.dims();
        std::sort(d.begin(), d.end());
        ++census[d];
    }
    Rational total = 0;
    for (const auto& [dims, count] : census) {
        Integer denom = 1;
        for (unsigned t : dims) denom *= factorial(t);
        total += Rational(Integer(count), denom);
    }
    return total;
}

Integer mixed_cell_volume(const PointConfiguration& base, const MixedCell& cell)
{
    std::map<std::vector<Index>, unsigned> multiplicity;
    for (const auto& b : cell.summands) ++multiplicity[b];
    std::vector<const std::vector<Index>*> parts;
    Integer scale = factorial(static_cast<unsigned>(base.dim()));
    Integer denom = 1;
    std::size_t total = 0;
    for (const auto& [b, r] : multiplicity) {
        if (b.empty() || affine_rank(base, b) + 1 != b.size()) {
            throw std::invalid_argument("mixed_cell_volume: summand is not a simplex");
        }
        const unsigned t = static_cast<unsigned>(b.size() - 1);
        parts.push_back(&b);
        total += t;
        scale *= pow(Integer(r), t);
        denom *= factorial(t);
    }
    if (total != base.dim()) throw std::invalid_argument("mixed_cell_volume: summands are not complementary");
    const Integer det = abs(determinant(direction_rows(base, parts)));
    if (det == 0) throw std::invalid_argument("mixed_cell_volume: summands are not complementary");
    return scale * det / denom;
}

std::size_t count_area2_squares(const MixedSubdivision& s)
{
    if (!(s.base->label() == ConfigLabel::cube(2))) {
        throw std::invalid_argument("count_area2_squares: base is not the square");
    }
    // Vertex indices of the square: 0 = (0,0), 1 = (0,1), 2 = (1,0), 3 = (1,1).
    const std::vector<Index> d1{0, 3}, d2{1, 2};
    std::size_t count = 0;
    for (const auto& cell : s.cells) {
        bool has1 = false, has2 = false;
        for (const auto& b : cell.summands) {
            has1 = has1 || b == d1;
            has2 = has2 || b == d2;
        }
        if (has1 && has2) ++count;
    }
    return count;
}

Triangulation summand_projection(const MixedSubdivision& s, std::size_t i)
{
    if (i >= s.m) throw std::invalid_argument("summand_projection: summand index out of range");
    std::set<std::vector<Index>> distinct;
    for (const auto& cell : s.cells) {
        if (cell.summands[i].size() == s.base->dim() + 1) distinct.insert(cell.summands[i]);
    }
    Triangulation t(s.base);
    for (const auto& b : distinct) t.add(b);
    return t;
}

ConfigPtr minkowski_configuration(const ConfigPtr& base, unsigned m)
{
    if (base->label().kind == ConfigLabel::Kind::cube) return minkowski_cubes_configuration(base->label().a, m);
    std::set<Point> sums{Point(base->dim(), 0)};
    for (unsigned r = 0; r < m; ++r) {
        std::set<Point> next;
        for (const auto& s : sums) {
            for (std::size_t p = 0; p < base->size(); ++p) {
                Point q = s;
                for (std::size_t c = 0; c < base->dim(); ++c) q[c] += base->point(p)[c];
                next.insert(std::move(q));
            }
        }
        sums = std::move(next);
    }
    return std::make_shared<PointConfiguration>(base->dim(), std::vector<Point>(sums.begin(), sums.end()));
}

Triangulation realize_cells(const MixedSubdivision& s)
{
    auto target = minkowski_configuration(s.base, s.m);
    Triangulation out(target);
    const std::size_t d = s.base->dim();
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        const auto& cell = s.cells[c];
        if (!is_fine_cell(*s.base, cell)) {
            throw std::invalid_argument("realize_cells: cell " + std::to_string(c) + " is not fine");
        }
        // Simplices of the product of the summand simplices, each vertex a tuple
        // of summand vertices; refined one factor at a time by staircases.
        using Tuple = std::vector<Index>;
        std::vector<std::vector<Tuple>> simplices{{Tuple{}}};
        for (const auto& b : cell.summands) {
            std::vector<std::vector<Tuple>> next;
            for (const auto& simplex : simplices) {
                for (const auto& path : monotone_staircases(static_cast<unsigned>(simplex.size()),
                                                            static_cast<unsigned>(b.size()))) {
                    std::vector<Tuple> refined;
                    for (auto [r, col] : path) {
                        Tuple t = simplex[r];
                        t.push_back(b[col]);
                        refined.push_back(std::move(t));
                    }
                    next.push_back(std::move(refined));
                }
            }
            simplices = std::move(next);
        }
        std::vector<Index> idx;
        for (const auto& simplex : simplices) {
            idx.clear();
            for (const auto& tuple : simplex) {
                Point p(d, 0);
                for (Index v : tuple) {
                    for (std::size_t k = 0; k < d; ++k) p[k] += s.base->point(v)[k];
                }
                const std::size_t at = target->find(p);
                if (at == target->size()) throw std::logic_error("realize_cells: point outside the Minkowski sum");
                idx.push_back(static_cast<Index>(at));
            }
            out.add(idx);
        }
    }
    return out;
}

std::vector<MixedCell> decompose_cell(const PointConfiguration& base, unsigned m,
                                      const std::vector<Point>& cell_vertices)
{
    const std::size_t d = base.dim();
    const std::size_t n = base.size();
    if (n > 20) throw std::invalid_argument("decompose_cell: base has too many points");
    std::vector<Point> target = cell_vertices;
    std::sort(target.begin(), target.end());

    // Candidate summands: affinely independent vertex subsets.
    std::vector<std::vector<Index>> candidates;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size > d + 1) continue;
        std::vector<Index> b;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) b.push_back(static_cast<Index>(i));
        }
        if (affine_rank(base, b) + 1 == size) candidates.push_back(std::move(b));
    }

    // Coordinate-wise minima and maxima of a Minkowski sum add up.
    auto extreme = [&](const std::vector<Index>& b, std::size_t c, bool hi) {
        Coordinate v = base.point(b[0])[c];
        for (Index i : b) v = hi ? std::max(v, base.point(i)[c]) : std::min(v, base.point(i)[c]);
        return v;
    };
    std::vector<Coordinate> want_lo(d), want_hi(d), p_lo(d), p_hi(d);
    for (std::size_t c = 0; c < d; ++c) {
        want_lo[c] = want_hi[c] = target[0][c];
        for (const auto& p : target) {
            want_lo[c] = std::min(want_lo[c], p[c]);
            want_hi[c] = std::max(want_hi[c], p[c]);
        }
        std::vector<Index> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Index>(i);
        p_lo[c] = extreme(all, c, false);
        p_hi[c] = extreme(all, c, true);
    }

    std::vector<MixedCell> found;
    MixedCell cell;
    std::vector<Coordinate> lo(d, 0), hi(d, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t dims, std::size_t points) -> void {
        const auto remaining = static_cast<Coordinate>(m - i);
        for (std::size_t c = 0; c < d; ++c) {
            if (lo[c] + remaining * p_lo[c] > want_lo[c] || lo[c] + remaining * p_hi[c] < want_lo[c]) return;
            if (hi[c] + remaining * p_hi[c] < want_hi[c] || hi[c] + remaining * p_lo[c] > want_hi[c]) return;
        }
        if (i == m) {
            if (dims != d || points != target.size() || !is_fine_cell(base, cell)) return;
            std::vector<Point> sums{Point(d, 0)};
            for (const auto& b : cell.summands) {
                std::vector<Point> next;
                for (const auto& s : sums) {
                    for (Index v : b) {
                        Point q = s;
                        for (std::size_t c = 0; c < d; ++c) q[c] += base.point(v)[c];
                        next.push_back(std::move(q));
                    }
                }
                sums = std::move(next);
            }
            std::sort(sums.begin(), sums.end());
            if (sums == target) found.push_back(cell);
            return;
        }
        for (const auto& b : candidates) {
            if (dims + b.size() - 1 > d || target.size() % (points * b.size()) != 0) continue;
            for (std::size_t c = 0; c < d; ++c) {
                lo[c] += extreme(b, c, false);
                hi[c] += extreme(b, c, true);
            }
            cell.summands.push_back(b);
            self(self, i + 1, dims + b.size() - 1, points * b.size());
            cell.summands.pop_back();
            for (std::size_t c = 0; c < d; ++c) {
                lo[c] -= extreme(b, c, false);
                hi[c] -= extreme(b, c, true);
            }
        }
    };
    rec(rec, 0, 0, 1);
    return found;
}

void canonicalize(MixedSubdivision& s)
{
    for (auto& cell : s.cells) {
        for (auto& b : cell.summands) std::sort(b.begin(), b.end());
    }
    std::sort(s.cells.begin(), s.cells.end());
}

} // namespace simplexity
