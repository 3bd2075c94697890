#include "simplexity/product_staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplexity {

KVector::KVector(std::vector<unsigned> k)
    : m_k(std::move(k))
{
    if (m_k.empty()) throw std::invalid_argument("KVector: empty");
    for (unsigned v : m_k) {
        if (v == 0) throw std::invalid_argument("KVector: entries must be positive (restrict to a face instead)");
        m_total += v;
    }
}

std::vector<std::vector<std::pair<unsigned, unsigned>>> monotone_staircases(unsigned rows, unsigned cols)
{
    std::vector<std::vector<std::pair<unsigned, unsigned>>> paths;
    if (rows == 0 || cols == 0) return paths;
    std::vector<std::pair<unsigned, unsigned>> path{{0u, 0u}};
    path.reserve(rows + cols - 1);
    auto extend = [&](auto&& self) -> void {
        auto [r, c] = path.back();
        if (r + 1 == rows && c + 1 == cols) {
            paths.push_back(path);
            return;
        }
        if (r + 1 < rows) {
            path.emplace_back(r + 1, c);
            self(self);
            path.pop_back();
        }
        if (c + 1 < cols) {
            path.emplace_back(r, c + 1);
            self(self);
            path.pop_back();
        }
    };
    extend(extend);
    return paths;
}

Triangulation staircase_triangulation(unsigned k, unsigned l)
{
    auto config = product_configuration(simplex_configuration(static_cast<int>(k)),
                                        simplex_configuration(static_cast<int>(l)));
    Triangulation t(config);
    std::vector<Index> simplex;
    for (const auto& path : monotone_staircases(k + 1, l + 1)) {
        simplex.clear();
        for (auto [r, c] : path) simplex.push_back(static_cast<Index>(r * (l + 1) + c));
        t.add(simplex);
    }
    return t;
}

std::size_t LiftedCell::vertex_count() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < block_rows.size(); ++i) n += block_rows[i].size() * block_cols[i].size();
    return n;
}

LiftedCell lift_cell(const PointConfiguration& product, std::span<const Index> b, const KVector& k)
{
    if (!product.is_product()) throw std::invalid_argument("lift_cell: configuration is not a product");
    const std::size_t m = product.right_factor_size();
    if (k.size() != m) throw std::invalid_argument("lift_cell: k has length " + std::to_string(k.size()) +
                                                   ", expected " + std::to_string(m));
    LiftedCell cell;
    cell.block_rows.resize(m);
    cell.block_cols.resize(m);
    for (Index v : b) cell.block_rows[v % m].push_back(static_cast<Index>(v / m));
    Index offset = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (unsigned j = 0; j < k[i]; ++j) cell.block_cols[i].push_back(offset + j);
        offset += k[i];
    }
    return cell;
}

namespace {

template <class Emit>
void for_each_multi_staircase(const LiftedCell& cell, const CellIndexer& indexer, Emit&& emit)
{
    const std::size_t blocks = cell.block_rows.size();
    if (blocks == 0) return;
    std::vector<std::vector<std::vector<Index>>> per_block(blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
        const auto& rows = cell.block_rows[i];
        const auto& cols = cell.block_cols[i];
        if (rows.empty() || cols.empty()) return;
        for (const auto& path : monotone_staircases(static_cast<unsigned>(rows.size()),
                                                    static_cast<unsigned>(cols.size()))) {
            std::vector<Index> verts;
            verts.reserve(path.size());
            for (auto [r, c] : path) verts.push_back(indexer(rows[r], cols[c]));
            per_block[i].push_back(std::move(verts));
        }
    }
    std::vector<std::size_t> choice(blocks, 0);
    std::vector<Index> simplex;
    while (true) {
        simplex.clear();
        for (std::size_t i = 0; i < blocks; ++i) {
            const auto& part = per_block[i][choice[i]];
            simplex.insert(simplex.end(), part.begin(), part.end());
        }
        emit(std::span<const Index>(simplex));
        std::size_t i = blocks;
        while (true) {
            --i;
            if (++choice[i] < per_block[i].size()) break;
            choice[i] = 0;
            if (i == 0) return;
        }
    }
}

} // namespace

void append_multi_staircases(const LiftedCell& cell, const CellIndexer& indexer, Triangulation& out)
{
    for_each_multi_staircase(cell, indexer, [&](std::span<const Index> s) { out.add(s); });
}

std::vector<Simplex> multi_staircases(const LiftedCell& cell, std::size_t n)
{
    std::vector<Simplex> out;
    for_each_multi_staircase(cell, [n](Index p, Index c) { return static_cast<Index>(p * n + c); },
                             [&](std::span<const Index> s) {
                                 Simplex copy(s.begin(), s.end());
                                 std::sort(copy.begin(), copy.end());
                                 out.push_back(std::move(copy));
                             });
    return out;
}

std::uint64_t multi_staircase_count(std::span<const unsigned> l, const KVector& k)
{
    if (l.size() != k.size()) throw std::invalid_argument("multi_staircase_count: length mismatch");
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == 0) throw std::invalid_argument("multi_staircase_count: l entries must be positive");
        count *= binomial(static_cast<long>(k[i]) + l[i] - 2, static_cast<long>(k[i]) - 1);
    }
    return count;
}

ConfigPtr left_factor(const PointConfiguration& product)
{
    if (!product.is_product()) throw std::invalid_argument("left_factor: configuration is not a product");
    const std::size_t m = product.right_factor_size();
    const std::size_t dim = product.dim() - (m - 1);
    const auto& label = product.label();
    if (label.kind == ConfigLabel::Kind::cube_times_simplex) return cube_configuration(label.a);
    if (label.kind == ConfigLabel::Kind::simplex_times_simplex) return simplex_configuration(label.a);
    std::vector<Point> pts;
    for (std::size_t p = 0; p < product.left_factor_size(); ++p) {
        auto full = product.point(p * m);
        pts.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(dim));
    }
    return std::make_shared<PointConfiguration>(dim, std::move(pts));
}

Triangulation lift_triangulation(const Triangulation& t0, const KVector& k)
{
    const auto& product = t0.config();
    const std::size_t m = product.right_factor_size();
    if (k.size() != m) throw std::invalid_argument("lift_triangulation: k has the wrong length");
    const std::size_t n = k.total();
    auto target = product_configuration(left_factor(product), simplex_configuration(static_cast<int>(n) - 1));
    Triangulation out(target);
    const CellIndexer indexer = [n](Index p, Index c) { return static_cast<Index>(p * n + c); };
    for (std::size_t i = 0; i < t0.size(); ++i) {
        append_multi_staircases(lift_cell(product, t0.simplex(i), k), indexer, out);
    }
    return out;
}

} // namespace simplexity
