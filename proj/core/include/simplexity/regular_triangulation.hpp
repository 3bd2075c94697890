#pragma once

#include <span>

#include "simplexity/exact_geometry.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

/// Regular triangulation induced by integer heights: the projections of the
/// lower facets of the lifted configuration. Brute force over (d+1)-subsets,
/// meant for configurations of a few dozen points. Throws
/// std::invalid_argument if the heights are not generic (a lower facet with
/// more than d+1 lifted points).
Triangulation regular_triangulation(const ConfigPtr& config, std::span<const Coordinate> heights);

} // namespace simplexity
