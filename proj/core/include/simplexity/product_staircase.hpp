#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "simplexity/exact_geometry.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

/// Positive multiplicities (k_1, ..., k_m); n = sum k_i.
class KVector
{
  public:
    KVector() = default;
    explicit KVector(std::vector<unsigned> k);

    std::size_t size() const { return m_k.size(); }
    unsigned operator[](std::size_t i) const { return m_k[i]; }
    unsigned total() const { return m_total; }
    const std::vector<unsigned>& values() const { return m_k; }

  private:
    std::vector<unsigned> m_k;
    unsigned m_total = 0;
};

/// Monotone lattice paths from (0, 0) to (rows - 1, cols - 1), each given as
/// the sequence of visited grid cells, in lexicographic order (a step down
/// sorts before a step right).
std::vector<std::vector<std::pair<unsigned, unsigned>>> monotone_staircases(unsigned rows, unsigned cols);

/// Staircase triangulation of Delta^k x Delta^l: C(k + l, k) unimodular simplices.
Triangulation staircase_triangulation(unsigned k, unsigned l);

/// The cell B~ over a simplex B of P x Delta^(m-1): block i has as rows the
/// P-vertices of B over the i-th simplex vertex and as columns k_i columns.
struct LiftedCell
{
    std::vector<std::vector<Index>> block_rows;
    std::vector<std::vector<Index>> block_cols;

    std::size_t vertex_count() const;
};

LiftedCell lift_cell(const PointConfiguration& product, std::span<const Index> b, const KVector& k);

/// Vertex index of grid entry (P-vertex p, column c) in the target configuration.
using CellIndexer = std::function<Index(Index p, Index column)>;

/// All multi-staircases of a lifted cell, in lexicographic block-by-block
/// path order, appended to `out` using `indexer`.
void append_multi_staircases(const LiftedCell& cell, const CellIndexer& indexer, Triangulation& out);

/// Multi-staircases of a cell lifted into P x Delta^(n-1).
std::vector<Simplex> multi_staircases(const LiftedCell& cell, std::size_t n);

/// prod_i C(k_i + l_i - 2, k_i - 1).
std::uint64_t multi_staircase_count(std::span<const unsigned> l, const KVector& k);

/// The configuration P underlying a product P x Delta^(m-1).
ConfigPtr left_factor(const PointConfiguration& product);

/// Multi-staircase refinement of a triangulation of P x Delta^(m-1) into one of
/// P x Delta^(n-1). Every k_i must be positive.
Triangulation lift_triangulation(const Triangulation& t0, const KVector& k);

} // namespace simplexity
