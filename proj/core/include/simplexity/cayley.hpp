#pragma once

#include <cstddef>
#include <vector>

#include "simplexity/exact_geometry.hpp"
#include "simplexity/product_staircase.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

/// B_1 + ... + B_m, each summand a sorted set of vertex indices of P.
struct MixedCell
{
    std::vector<std::vector<Index>> summands;

    /// (|B_1| - 1, ..., |B_m| - 1)
    std::vector<unsigned> dims() const;
    bool operator==(const MixedCell&) const = default;
    auto operator<=>(const MixedCell&) const = default;
};

struct MixedSubdivision
{
    ConfigPtr base;
    unsigned m = 1;
    std::vector<MixedCell> cells;
};

/// Whether the summands are simplices of P spanning complementary directions
/// whose dimensions add up to dim P.
bool is_fine_cell(const PointConfiguration& base, const MixedCell& cell);

/// tau = tau_1 cup ... cup tau_m  ->  tau_1 + ... + tau_m.
MixedSubdivision triangulation_to_mixed(const Triangulation& t);

/// Inverse of triangulation_to_mixed; throws std::invalid_argument on a
/// cell that is not fine.
Triangulation mixed_to_triangulation(const MixedSubdivision& s);

/// Repeats summand i k_i times; the result has n = sum k_i summands.
MixedSubdivision scale_mixed(const MixedSubdivision& s, const KVector& k);

/// Sum over cells of prod_i 1 / (dim B_i)!.
Rational mixed_weighted_size(const MixedSubdivision& s);

/// Normalized volume of the Minkowski sum of a cell whose distinct summands
/// are complementary simplices; a summand repeated r times counts as r * B.
Integer mixed_cell_volume(const PointConfiguration& base, const MixedCell& cell);

/// Cells of a subdivision of I^2 + ... + I^2 whose summands include both
/// diagonals of the square.
std::size_t count_area2_squares(const MixedSubdivision& s);

/// Full-dimensional i-th summands, deduplicated, as a triangulation of P.
Triangulation summand_projection(const MixedSubdivision& s, std::size_t i);

/// Lattice points of P + ... + P (m copies); {0..m}^l for cubes.
ConfigPtr minkowski_configuration(const ConfigPtr& base, unsigned m);

/// Every cell triangulated by iterated staircases of its simplex factors,
/// over minkowski_configuration(base, m). The pieces of different cells need
/// not match face to face; validate_dissection of the result with volume
/// m^l * vol(P) proves that the cells tile P + ... + P.
Triangulation realize_cells(const MixedSubdivision& s);

/// All fine decompositions B_1 + ... + B_m of P's vertices whose Minkowski sum
/// has exactly the given lattice points (in the coordinates of m * P) as vertices.
std::vector<MixedCell> decompose_cell(const PointConfiguration& base, unsigned m,
                                      const std::vector<Point>& cell_vertices);

/// Sorts summands within cells and cells lexicographically.
void canonicalize(MixedSubdivision& s);

} // namespace simplexity
